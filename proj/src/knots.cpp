#include "isocolloc/knots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isocolloc/errors.hpp"

namespace isocolloc {

KnotVector::KnotVector(int degree, std::vector<double> knots)
    : degree_(degree), knots_(std::move(knots)) {
    if (degree_ < 0) throw InvalidArgument("KnotVector: degree must be nonnegative");
    if (static_cast<int>(knots_.size()) < 2 * (degree_ + 1))
        throw InvalidArgument("KnotVector: need at least degree+1 basis functions");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (knots_[i] < knots_[i - 1])
            throw InvalidArgument("KnotVector: knots must be nondecreasing");

    const double lo = domain_begin();
    const double hi = domain_end();
    if (!(lo < hi)) throw InvalidArgument("KnotVector: empty domain");
    for (std::size_t i = 1; i + 1 < knots_.size(); ++i) {
        if (knots_[i] > lo && knots_[i] < hi && knots_[i] == knots_[i - 1])
            throw InvalidArgument("KnotVector: interior knots must be simple");
    }

    for (int s = degree_; s < count(); ++s) {
        if (knots_[static_cast<std::size_t>(s)] < knots_[static_cast<std::size_t>(s + 1)]) {
            element_spans_.push_back(s);
            meshsize_ = std::max(meshsize_, knots_[static_cast<std::size_t>(s + 1)] -
                                                knots_[static_cast<std::size_t>(s)]);
        }
    }
}

bool KnotVector::is_open() const noexcept {
    const int m = degree_ + 1;
    for (int i = 1; i < m; ++i)
        if (knots_[static_cast<std::size_t>(i)] != knots_[0]) return false;
    const auto last = knots_.size() - 1;
    for (int i = 1; i < m; ++i)
        if (knots_[last - static_cast<std::size_t>(i)] != knots_[last]) return false;
    // the knots right past the end multiplicities must differ
    return knots_[static_cast<std::size_t>(m)] != knots_[0] &&
           knots_[last - static_cast<std::size_t>(m)] != knots_[last];
}

std::pair<double, double> KnotVector::element(int e) const {
    const int s = element_span(e);
    return {knots_[static_cast<std::size_t>(s)], knots_[static_cast<std::size_t>(s + 1)]};
}

int KnotVector::find_span(double x) const {
    const int n = count();
    if (x >= knots_[static_cast<std::size_t>(n)]) return element_spans_.back();
    if (x <= knots_[static_cast<std::size_t>(degree_)]) return element_spans_.front();
    int lo = degree_, hi = n;
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        (knots_[static_cast<std::size_t>(mid)] <= x ? lo : hi) = mid;
    }
    return lo;
}

KnotVector make_open_uniform(int n_el, int degree) {
    if (n_el < 1) throw InvalidArgument("make_open_uniform: n_el must be >= 1");
    if (degree < 1) throw InvalidArgument("make_open_uniform: degree must be >= 1");
    std::vector<double> knots;
    knots.reserve(static_cast<std::size_t>(n_el + 1 + 2 * degree));
    for (int i = 0; i <= degree; ++i) knots.push_back(0.0);
    for (int i = 1; i < n_el; ++i) knots.push_back(static_cast<double>(i) / n_el);
    for (int i = 0; i <= degree; ++i) knots.push_back(1.0);
    return KnotVector(degree, std::move(knots));
}

BasisSpan basis_span(const KnotVector& kv, double x, int max_order) {
    const int p = kv.degree();
    if (max_order < 0 || max_order > p)
        throw InvalidArgument("basis_span: derivative order must be in [0, degree]");
    if (x < kv.domain_begin() - 1e-12 || x > kv.domain_end() + 1e-12)
        throw InvalidArgument("basis_span: point outside the knot domain");

    const int span = kv.find_span(x);
    const auto U = kv.knots();

    BasisSpan out;
    out.first_index = span - p;
    out.count = p + 1;
    out.max_order = max_order;
    out.data.assign(static_cast<std::size_t>((max_order + 1) * (p + 1)), 0.0);
    auto ders = [&](int d, int j) -> double& {
        return out.data[static_cast<std::size_t>(d * (p + 1) + j)];
    };

    // Triangular table: ndu(j,k) holds basis values in the upper part and
    // knot differences in the lower part (The NURBS Book, A2.3).
    std::vector<double> ndu(static_cast<std::size_t>((p + 1) * (p + 1)));
    auto nd = [&](int r, int c) -> double& {
        return ndu[static_cast<std::size_t>(r * (p + 1) + c)];
    };
    std::vector<double> left(static_cast<std::size_t>(p + 1)), right(static_cast<std::size_t>(p + 1));

    nd(0, 0) = 1.0;
    for (int j = 1; j <= p; ++j) {
        left[static_cast<std::size_t>(j)] = x - U[static_cast<std::size_t>(span + 1 - j)];
        right[static_cast<std::size_t>(j)] = U[static_cast<std::size_t>(span + j)] - x;
        double saved = 0.0;
        for (int k = 0; k < j; ++k) {
            nd(j, k) = right[static_cast<std::size_t>(k + 1)] + left[static_cast<std::size_t>(j - k)];
            const double temp = nd(k, j - 1) / nd(j, k);
            nd(k, j) = saved + right[static_cast<std::size_t>(k + 1)] * temp;
            saved = left[static_cast<std::size_t>(j - k)] * temp;
        }
        nd(j, j) = saved;
    }
    for (int k = 0; k <= p; ++k) ders(0, k) = nd(k, p);

    if (max_order > 0) {
        std::vector<double> a(2 * static_cast<std::size_t>(p + 1));
        auto aa = [&](int r, int c) -> double& {
            return a[static_cast<std::size_t>(r * (p + 1) + c)];
        };
        for (int i = 0; i <= p; ++i) {
            int s1 = 0, s2 = 1;
            aa(0, 0) = 1.0;
            for (int d = 1; d <= max_order; ++d) {
                double dd = 0.0;
                const int rk = i - d;
                const int pk = p - d;
                if (i >= d) {
                    aa(s2, 0) = aa(s1, 0) / nd(pk + 1, rk);
                    dd = aa(s2, 0) * nd(rk, pk);
                }
                const int j1 = (rk >= -1) ? 1 : -rk;
                const int j2 = (i - 1 <= pk) ? d - 1 : p - i;
                for (int j = j1; j <= j2; ++j) {
                    aa(s2, j) = (aa(s1, j) - aa(s1, j - 1)) / nd(pk + 1, rk + j);
                    dd += aa(s2, j) * nd(rk + j, pk);
                }
                if (i <= pk) {
                    aa(s2, d) = -aa(s1, d - 1) / nd(pk + 1, i);
                    dd += aa(s2, d) * nd(i, pk);
                }
                ders(d, i) = dd;
                std::swap(s1, s2);
            }
        }
        double factor = p;
        for (int d = 1; d <= max_order; ++d) {
            for (int i = 0; i <= p; ++i) ders(d, i) *= factor;
            factor *= (p - d);
        }
    }
    return out;
}

std::vector<double> greville(const KnotVector& kv) {
    const int p = kv.degree();
    if (p < 1) throw InvalidArgument("greville: degree must be >= 1");
    const int n = kv.count();
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int k = 1; k <= p; ++k) sum += kv[i + k];
        pts[static_cast<std::size_t>(i)] = sum / p;
    }
    return pts;
}

}  // namespace isocolloc
