#include "isocolloc/spline_space.hpp"

#include <algorithm>
#include <cmath>

#include "isocolloc/errors.hpp"

namespace isocolloc {

SplineSpace1D SplineSpace1D::open(KnotVector kv) {
    if (!kv.is_open())
        throw InvalidArgument("SplineSpace1D::open: knot vector is not open");
    const int n = kv.count();
    const int n_el = kv.element_count();
    return SplineSpace1D(SpaceKind::open, std::move(kv), n, n_el);
}

SplineSpace1D SplineSpace1D::open_uniform(int n_el, int degree) {
    return open(make_open_uniform(n_el, degree));
}

SplineSpace1D SplineSpace1D::periodic_uniform(int n_el, int degree) {
    if (n_el < 1) throw InvalidArgument("periodic_uniform: n_el must be >= 1");
    if (degree < 1) throw InvalidArgument("periodic_uniform: degree must be >= 1");
    if (n_el < degree + 1)
        throw InvalidArgument("periodic_uniform: need n_el >= degree+1 for an "
                              "injective wrap-around identification");
    const double h = 1.0 / n_el;
    std::vector<double> knots;
    knots.reserve(static_cast<std::size_t>(n_el + 2 * degree + 1));
    for (int j = 0; j <= n_el + 2 * degree; ++j) knots.push_back((j - degree) * h);
    KnotVector kv(degree, std::move(knots));
    return SplineSpace1D(SpaceKind::periodic, std::move(kv), n_el, n_el);
}

double SplineSpace1D::meshsize() const {
    double h = 0.0;
    for (int e = 0; e < n_el_; ++e) {
        const auto [a, b] = element(e);
        h = std::max(h, b - a);
    }
    return h;
}

double SplineSpace1D::eval(std::span<const double> coeffs, double x, int deriv) const {
    if (static_cast<int>(coeffs.size()) != dim_)
        throw InvalidArgument("eval: coefficient count does not match space dimension");
    const BasisSpan bs = basis(x, deriv);
    double v = 0.0;
    for (int j = 0; j < bs.count; ++j)
        v += bs.value(deriv, j) *
             coeffs[static_cast<std::size_t>(coefficient_index(bs.first_index + j))];
    return v;
}

std::vector<double> SplineSpace1D::greville_points() const {
    const std::vector<double> all = greville(kv_);
    if (kind_ == SpaceKind::open) return all;
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n_el_));
    for (double t : all)
        if (t >= -1e-12 && t < 1.0 - 1e-12) pts.push_back(t < 0.0 ? 0.0 : t);
    return pts;
}

double eval_spline(const SplineSpace1D& space, std::span<const double> coeffs, double x,
                   int deriv) {
    return space.eval(coeffs, x, deriv);
}

}  // namespace isocolloc
