#include "isocolloc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "isocolloc/errors.hpp"
#include "isocolloc/quadrature.hpp"

namespace isocolloc {

namespace {

constexpr int kLinfSamplesPerElement = 10;

int default_quad(int degree, int requested) { return requested > 0 ? requested : degree + 2; }

}  // namespace

double ErrorReport::norm(Norm which) const {
    switch (which) {
        case Norm::l2: return l2;
        case Norm::h1: return h1;
        case Norm::h2: return h2;
        case Norm::linf: return linf;
    }
    return 0.0;
}

ErrorReport error_norms(const DiscreteSolution1D& sol, const Manufactured1D& mp,
                        int quad_points_per_element) {
    const SplineSpace1D& space = sol.space;
    const QuadratureRule& rule =
        gauss_legendre(default_quad(space.degree(), quad_points_per_element));

    double e0 = 0.0, e1 = 0.0, e2 = 0.0, linf = 0.0;
    for (int e = 0; e < space.element_count(); ++e) {
        const auto [lo, hi] = space.element(e);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double x = mid + half * rule.nodes[k];
            const double w = half * rule.weights[k];
            const double d0 = mp.exact.u(x) - sol.value(x, 0);
            const double d1 = mp.exact.du(x) - sol.value(x, 1);
            const double d2 = mp.exact.d2u(x) - sol.value(x, 2);
            e0 += w * d0 * d0;
            e1 += w * d1 * d1;
            e2 += w * d2 * d2;
        }
        for (int k = 0; k < kLinfSamplesPerElement; ++k) {
            const double x = lo + (hi - lo) * k / (kLinfSamplesPerElement - 1.0);
            linf = std::max(linf, std::abs(mp.exact.u(x) - sol.value(x, 0)));
        }
    }

    ErrorReport rep;
    rep.n_el = space.element_count();
    rep.h = space.meshsize();
    rep.dof = sol.bc == BoundaryKind::dirichlet_homogeneous ? space.dim() - 2 : space.dim();
    rep.l2 = std::sqrt(e0);
    rep.h1 = std::sqrt(e0 + e1);
    rep.h2 = std::sqrt(e0 + e1 + e2);
    rep.linf = linf;
    return rep;
}

ErrorReport error_norms(const DiscreteSolution2D& sol, const Manufactured2D& mp,
                        int quad_points_per_element) {
    const auto& sx = sol.space.space_x();
    const auto& sy = sol.space.space_y();
    const int q =
        default_quad(std::max(sx.degree(), sy.degree()), quad_points_per_element);
    const QuadratureRule& rule = gauss_legendre(q);

    double e0 = 0.0, e1 = 0.0, linf = 0.0;
    for (int ex = 0; ex < sx.element_count(); ++ex) {
        const auto [xlo, xhi] = sx.element(ex);
        for (int ey = 0; ey < sy.element_count(); ++ey) {
            const auto [ylo, yhi] = sy.element(ey);
            for (std::size_t kx = 0; kx < rule.nodes.size(); ++kx) {
                const double xi = 0.5 * (xlo + xhi) + 0.5 * (xhi - xlo) * rule.nodes[kx];
                for (std::size_t ky = 0; ky < rule.nodes.size(); ++ky) {
                    const double eta =
                        0.5 * (ylo + yhi) + 0.5 * (yhi - ylo) * rule.nodes[ky];
                    const double wq = 0.25 * (xhi - xlo) * (yhi - ylo) *
                                      rule.weights[kx] * rule.weights[ky];
                    const PhysicalDerivs uh = sol.physical(xi, eta);
                    const MapJet jet = sol.geometry.jet(xi, eta);
                    const double w = wq * std::abs(jet.det());
                    const double x = jet.position[0], y = jet.position[1];
                    const double d0 = mp.exact.u(x, y) - uh.value;
                    const double dx = mp.exact.ux(x, y) - uh.gradient[0];
                    const double dy = mp.exact.uy(x, y) - uh.gradient[1];
                    e0 += w * d0 * d0;
                    e1 += w * (dx * dx + dy * dy);
                }
            }
            for (int kx = 0; kx < kLinfSamplesPerElement; ++kx) {
                const double xi = xlo + (xhi - xlo) * kx / (kLinfSamplesPerElement - 1.0);
                for (int ky = 0; ky < kLinfSamplesPerElement; ++ky) {
                    const double eta =
                        ylo + (yhi - ylo) * ky / (kLinfSamplesPerElement - 1.0);
                    const Point2 p = sol.geometry(xi, eta);
                    linf = std::max(linf, std::abs(mp.exact.u(p[0], p[1]) -
                                                   sol.param_value(xi, eta)));
                }
            }
        }
    }

    ErrorReport rep;
    rep.n_el = sx.element_count();
    rep.h = std::max(sx.meshsize(), sy.meshsize());
    rep.dof = (sol.space.dim_x() - 2) * (sol.space.dim_y() - 2);
    rep.l2 = std::sqrt(e0);
    rep.h1 = std::sqrt(e0 + e1);
    rep.h2 = std::numeric_limits<double>::quiet_NaN();
    rep.linf = linf;
    return rep;
}

double l2_distance(const DiscreteSolution1D& a, const DiscreteSolution1D& b,
                   int quad_points_per_element) {
    const SplineSpace1D& space = a.space;
    const QuadratureRule& rule =
        gauss_legendre(default_quad(space.degree(), quad_points_per_element));
    double acc = 0.0;
    for (int e = 0; e < space.element_count(); ++e) {
        const auto [lo, hi] = space.element(e);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double x = mid + half * rule.nodes[k];
            const double d = a.value(x, 0) - b.value(x, 0);
            acc += half * rule.weights[k] * d * d;
        }
    }
    return std::sqrt(acc);
}

double ConvergenceStudy::step_order(Norm which, int step) const {
    const ErrorReport& c = levels[static_cast<std::size_t>(step)];
    const ErrorReport& f = levels[static_cast<std::size_t>(step + 1)];
    return std::log(c.norm(which) / f.norm(which)) / std::log(c.h / f.h);
}

double ConvergenceStudy::tail_order(Norm which, int tail, double floor) const {
    std::vector<std::pair<double, double>> pts;  // (log h, log e)
    for (const ErrorReport& r : levels) {
        const double e = r.norm(which);
        if (e > floor && std::isfinite(e)) pts.emplace_back(std::log(r.h), std::log(e));
    }
    if (static_cast<int>(pts.size()) > tail)
        pts.erase(pts.begin(), pts.end() - tail);
    if (pts.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceStudy convergence_rates(std::string problem, Scheme scheme, int degree,
                                   std::vector<ErrorReport> reports) {
    for (std::size_t i = 1; i < reports.size(); ++i)
        if (reports[i].dof <= reports[i - 1].dof)
            throw InvalidArgument("convergence_rates: refinement levels must be strictly "
                                  "increasing in dof");
    ConvergenceStudy study;
    study.problem = std::move(problem);
    study.scheme = scheme;
    study.degree = degree;
    study.levels = std::move(reports);
    return study;
}

ResidualDiagnostics residual_superconvergence(const DiscreteSolution1D& sol,
                                              const Manufactured1D& mp,
                                              std::span<const double> points) {
    ResidualDiagnostics out;
    out.points.assign(points.begin(), points.end());
    out.samples.reserve(points.size());
    double acc = 0.0;
    for (double x : points) {
        const double r = mp.exact.d2u(x) - sol.value(x, 2);
        out.samples.push_back(r);
        acc += r * r;
    }
    out.rms = points.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(points.size()));
    return out;
}

std::vector<double> interior_surrogate_points(const SplineSpace1D& space) {
    const int p = space.degree();
    const int n_el = space.element_count();
    const auto ref = sp_reference_points(p);
    std::vector<double> pts;
    for (int e = p; e < n_el - p; ++e) {
        const auto [a, b] = space.element(e);
        for (double t : ref) pts.push_back(0.5 * (a + b) + t * 0.5 * (b - a));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double x, double y) { return std::abs(x - y) < 1e-12; }),
              pts.end());
    return pts;
}

KnotVector perturb_knots(const KnotVector& kv, std::span<const double> draws) {
    if (!kv.is_open()) throw InvalidArgument("perturb_knots: knot vector must be open");
    const int p = kv.degree();
    const int n = kv.count();
    const int n_el = kv.element_count();
    if (static_cast<int>(draws.size()) != n_el - 1)
        throw InvalidArgument("perturb_knots: need one draw per interior knot");
    const double amplitude = 1.0 / (10.0 * n_el);

    std::vector<double> knots(kv.knots().begin(), kv.knots().end());
    for (int i = p + 1; i < n; ++i)
        knots[static_cast<std::size_t>(i)] +=
            amplitude * draws[static_cast<std::size_t>(i - p - 1)];
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (knots[i] < knots[i - 1])
            throw NumericalError("perturb_knots: knot ordering lost");
    for (int i = p; i < n; ++i)
        if (!(knots[static_cast<std::size_t>(i + 1)] > knots[static_cast<std::size_t>(i)]))
            throw NumericalError("perturb_knots: produced an empty element");
    return KnotVector(p, std::move(knots));
}

KnotVector perturb_knots(const KnotVector& kv, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> draw(-1.0, 1.0);
    std::vector<double> draws(static_cast<std::size_t>(kv.element_count() - 1));
    for (auto& x : draws) x = draw(rng);
    return perturb_knots(kv, draws);
}

KnotVector perturb_knots(const KnotVector& kv, const PerturbationSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    return perturb_knots(kv, rng);
}

}  // namespace isocolloc
