#include "isocolloc/assembly.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "isocolloc/errors.hpp"
#include "isocolloc/quadrature.hpp"

namespace isocolloc {

namespace {

int unknown_count(const SplineSpace1D& space, BoundaryKind bc) {
    if (space.kind() == SpaceKind::periodic) {
        if (bc != BoundaryKind::periodic)
            throw InvalidArgument("assembly: periodic space requires a periodic problem");
        return space.dim();
    }
    if (bc != BoundaryKind::dirichlet_homogeneous)
        throw InvalidArgument("assembly: open space requires a Dirichlet problem");
    return space.dim() - 2;
}

// Open/Dirichlet: basis index -> column, or -1 for an eliminated boundary
// coefficient. Periodic: wrapped coefficient index.
int column_of(const SplineSpace1D& space, BoundaryKind bc, int basis_index) {
    if (space.kind() == SpaceKind::periodic) return space.coefficient_index(basis_index);
    (void)bc;
    if (basis_index <= 0 || basis_index >= space.dim() - 1) return -1;
    return basis_index - 1;
}

LinearSystem apply_averaging(DenseMatrix rows, std::vector<double> rhs,
                             const std::vector<std::vector<int>>& groups) {
    if (groups.empty()) return {std::move(rows), std::move(rhs)};

    const int npts = rows.rows();
    std::vector<int> group_of(static_cast<std::size_t>(npts), -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].size() < 2)
            throw InvalidArgument("averaging group needs at least two members");
        for (int idx : groups[g]) {
            if (idx < 0 || idx >= npts || group_of[static_cast<std::size_t>(idx)] != -1)
                throw InvalidArgument("averaging groups must hold disjoint valid indices");
            group_of[static_cast<std::size_t>(idx)] = static_cast<int>(g);
        }
    }

    DenseMatrix out_m(0, 0);
    std::vector<int> keep;  // the first member of each equation unit, in point order
    std::vector<bool> emitted(groups.size(), false);
    for (int r = 0; r < npts; ++r) {
        const int g = group_of[static_cast<std::size_t>(r)];
        if (g == -1) {
            keep.push_back(r);
        } else if (!emitted[static_cast<std::size_t>(g)]) {
            keep.push_back(r);
            emitted[static_cast<std::size_t>(g)] = true;
        }
    }

    DenseMatrix merged(static_cast<int>(keep.size()), rows.cols());
    std::vector<double> merged_rhs(keep.size(), 0.0);
    for (std::size_t out = 0; out < keep.size(); ++out) {
        const int r = keep[out];
        const int g = group_of[static_cast<std::size_t>(r)];
        if (g == -1) {
            for (int c = 0; c < rows.cols(); ++c) merged(static_cast<int>(out), c) = rows(r, c);
            merged_rhs[out] = rhs[static_cast<std::size_t>(r)];
        } else {
            const auto& members = groups[static_cast<std::size_t>(g)];
            const double inv = 1.0 / static_cast<double>(members.size());
            for (int m : members) {
                for (int c = 0; c < rows.cols(); ++c)
                    merged(static_cast<int>(out), c) += inv * rows(m, c);
                merged_rhs[out] += inv * rhs[static_cast<std::size_t>(m)];
            }
        }
    }
    return {std::move(merged), std::move(merged_rhs)};
}

std::vector<double> expand_dirichlet(int dim, std::span<const double> interior) {
    std::vector<double> full(static_cast<std::size_t>(dim), 0.0);
    for (std::size_t i = 0; i < interior.size(); ++i) full[i + 1] = interior[i];
    return full;
}

int default_quad(int degree, int requested) { return requested > 0 ? requested : degree + 2; }

}  // namespace

LinearSystem assemble_collocation_1d(const Problem1D& problem, const SplineSpace1D& space,
                                     const CollocationSet1D& points) {
    const int cols = unknown_count(space, problem.bc);
    const int eq = points.equation_count();
    if (eq < cols)
        throw InvalidArgument("assemble_collocation_1d: " + std::to_string(eq) +
                              " equations for " + std::to_string(cols) + " unknowns");

    const int npts = static_cast<int>(points.points.size());
    DenseMatrix rows(npts, cols);
    std::vector<double> rhs(static_cast<std::size_t>(npts), 0.0);
    for (int r = 0; r < npts; ++r) {
        const double tau = points.points[static_cast<std::size_t>(r)];
        const BasisSpan bs = space.basis(tau, 2);
        const double a0 = problem.a0(tau), a1 = problem.a1(tau);
        for (int j = 0; j < bs.count; ++j) {
            const int col = column_of(space, problem.bc, bs.first_index + j);
            if (col < 0) continue;
            rows(r, col) += -bs.value(2, j) + a1 * bs.value(1, j) + a0 * bs.value(0, j);
        }
        rhs[static_cast<std::size_t>(r)] = problem.f(tau);
    }
    return apply_averaging(std::move(rows), std::move(rhs), points.averaging_groups);
}

LinearSystem assemble_collocation_2d(const Problem2D& problem, const TensorSpace& space,
                                     const CollocationSet2D& points) {
    const int nx = space.dim_x(), ny = space.dim_y();
    const int cols = (nx - 2) * (ny - 2);
    const int npts = static_cast<int>(points.points.size());
    if (npts != cols)
        throw InvalidArgument("assemble_collocation_2d: need a square system, got " +
                              std::to_string(npts) + " points for " + std::to_string(cols) +
                              " unknowns");

    DenseMatrix rows(npts, cols);
    std::vector<double> rhs(static_cast<std::size_t>(npts), 0.0);
    for (int r = 0; r < npts; ++r) {
        const auto [xi, eta] = points.points[static_cast<std::size_t>(r)];
        const MapJet jet = problem.geometry.jet(xi, eta);
        const BasisSpan2D bs = space.basis(xi, eta, 2);
        for (int a = 0; a < bs.count_x; ++a) {
            const int i = bs.first_x + a;
            if (i <= 0 || i >= nx - 1) continue;
            for (int b = 0; b < bs.count_y; ++b) {
                const int j = bs.first_y + b;
                if (j <= 0 || j >= ny - 1) continue;
                const PhysicalDerivs pd = physical_second_order_coeffs(
                    jet, bs.value(d00, a, b), {bs.value(d10, a, b), bs.value(d01, a, b)},
                    {bs.value(d20, a, b), bs.value(d11, a, b), bs.value(d02, a, b)});
                rows(r, (i - 1) + (j - 1) * (nx - 2)) = -pd.laplacian();
            }
        }
        rhs[static_cast<std::size_t>(r)] = problem.f(jet.position[0], jet.position[1]);
    }
    return {std::move(rows), std::move(rhs)};
}

LinearSystem assemble_galerkin_1d(const Problem1D& problem, const SplineSpace1D& space,
                                  int quad_points_per_element) {
    const int cols = unknown_count(space, problem.bc);
    const int q = default_quad(space.degree(), quad_points_per_element);
    const QuadratureRule& rule = gauss_legendre(q);

    DenseMatrix a(cols, cols);
    std::vector<double> rhs(static_cast<std::size_t>(cols), 0.0);
    for (int e = 0; e < space.element_count(); ++e) {
        const auto [lo, hi] = space.element(e);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double x = mid + half * rule.nodes[k];
            const double w = half * rule.weights[k];
            const BasisSpan bs = space.basis(x, 1);
            const double a0 = problem.a0(x), a1 = problem.a1(x), fx = problem.f(x);
            for (int jt = 0; jt < bs.count; ++jt) {
                const int row = column_of(space, problem.bc, bs.first_index + jt);
                if (row < 0) continue;
                const double v = bs.value(0, jt), dv = bs.value(1, jt);
                rhs[static_cast<std::size_t>(row)] += w * fx * v;
                for (int ju = 0; ju < bs.count; ++ju) {
                    const int col = column_of(space, problem.bc, bs.first_index + ju);
                    if (col < 0) continue;
                    const double u = bs.value(0, ju), du = bs.value(1, ju);
                    a(row, col) += w * (du * dv + a1 * du * v + a0 * u * v);
                }
            }
        }
    }
    return {std::move(a), std::move(rhs)};
}

LinearSystem assemble_galerkin_2d(const Problem2D& problem, const TensorSpace& space,
                                  int quad_points_per_element) {
    const int nx = space.dim_x(), ny = space.dim_y();
    const int cols = (nx - 2) * (ny - 2);
    const int q = default_quad(std::max(space.space_x().degree(), space.space_y().degree()),
                               quad_points_per_element);
    const QuadratureRule& rule = gauss_legendre(q);

    auto column = [&](int i, int j) -> int {
        if (i <= 0 || i >= nx - 1 || j <= 0 || j >= ny - 1) return -1;
        return (i - 1) + (j - 1) * (nx - 2);
    };

    DenseMatrix a(cols, cols);
    std::vector<double> rhs(static_cast<std::size_t>(cols), 0.0);
    const auto& gx = space.space_x();
    const auto& gy = space.space_y();
    for (int ex = 0; ex < gx.element_count(); ++ex) {
        const auto [xlo, xhi] = gx.element(ex);
        for (int ey = 0; ey < gy.element_count(); ++ey) {
            const auto [ylo, yhi] = gy.element(ey);
            for (std::size_t kx = 0; kx < rule.nodes.size(); ++kx) {
                const double xi = 0.5 * (xlo + xhi) + 0.5 * (xhi - xlo) * rule.nodes[kx];
                for (std::size_t ky = 0; ky < rule.nodes.size(); ++ky) {
                    const double eta = 0.5 * (ylo + yhi) + 0.5 * (yhi - ylo) * rule.nodes[ky];
                    const double wq = 0.25 * (xhi - xlo) * (yhi - ylo) * rule.weights[kx] *
                                      rule.weights[ky];
                    const MapJet jet = problem.geometry.jet(xi, eta);
                    const double det = jet.det();
                    const double w = wq * std::abs(det);
                    const BasisSpan2D bs = space.basis(xi, eta, 1);
                    const double fx = problem.f(jet.position[0], jet.position[1]);
                    const auto& J = jet.jacobian;

                    const int nact = bs.count_x * bs.count_y;
                    std::vector<double> val(static_cast<std::size_t>(nact));
                    std::vector<double> gpx(static_cast<std::size_t>(nact));
                    std::vector<double> gpy(static_cast<std::size_t>(nact));
                    std::vector<int> col(static_cast<std::size_t>(nact));
                    int idx = 0;
                    for (int ax = 0; ax < bs.count_x; ++ax)
                        for (int by = 0; by < bs.count_y; ++by, ++idx) {
                            col[static_cast<std::size_t>(idx)] =
                                column(bs.first_x + ax, bs.first_y + by);
                            val[static_cast<std::size_t>(idx)] = bs.value(d00, ax, by);
                            const double dxi = bs.value(d10, ax, by);
                            const double deta = bs.value(d01, ax, by);
                            // J^{-T} (dxi, deta)
                            gpx[static_cast<std::size_t>(idx)] =
                                (J[1][1] * dxi - J[1][0] * deta) / det;
                            gpy[static_cast<std::size_t>(idx)] =
                                (-J[0][1] * dxi + J[0][0] * deta) / det;
                        }
                    for (int t = 0; t < nact; ++t) {
                        const int row = col[static_cast<std::size_t>(t)];
                        if (row < 0) continue;
                        rhs[static_cast<std::size_t>(row)] +=
                            w * fx * val[static_cast<std::size_t>(t)];
                        for (int u = 0; u < nact; ++u) {
                            const int cc = col[static_cast<std::size_t>(u)];
                            if (cc < 0) continue;
                            a(row, cc) += w * (gpx[static_cast<std::size_t>(t)] *
                                                   gpx[static_cast<std::size_t>(u)] +
                                               gpy[static_cast<std::size_t>(t)] *
                                                   gpy[static_cast<std::size_t>(u)]);
                        }
                    }
                }
            }
        }
    }
    return {std::move(a), std::move(rhs)};
}

double DiscreteSolution2D::param_value(double xi, double eta, Deriv2 which) const {
    const int order = which == d00 ? 0 : (which == d10 || which == d01 ? 1 : 2);
    const BasisSpan2D bs = space.basis(xi, eta, order);
    double v = 0.0;
    for (int a = 0; a < bs.count_x; ++a)
        for (int b = 0; b < bs.count_y; ++b)
            v += bs.value(which, a, b) *
                 coefficients[static_cast<std::size_t>(
                     space.linear_index(bs.first_x + a, bs.first_y + b))];
    return v;
}

PhysicalDerivs DiscreteSolution2D::physical(double xi, double eta) const {
    const MapJet jet = geometry.jet(xi, eta);
    const BasisSpan2D bs = space.basis(xi, eta, 1);
    double v = 0.0, dxi = 0.0, deta = 0.0;
    for (int a = 0; a < bs.count_x; ++a)
        for (int b = 0; b < bs.count_y; ++b) {
            const double c = coefficients[static_cast<std::size_t>(
                space.linear_index(bs.first_x + a, bs.first_y + b))];
            v += bs.value(d00, a, b) * c;
            dxi += bs.value(d10, a, b) * c;
            deta += bs.value(d01, a, b) * c;
        }
    const auto& J = jet.jacobian;
    const double det = jet.det();
    PhysicalDerivs out;
    out.value = v;
    out.gradient[0] = (J[1][1] * dxi - J[1][0] * deta) / det;
    out.gradient[1] = (-J[0][1] * dxi + J[0][0] * deta) / det;
    return out;
}

DiscreteSolution1D solve_collocation_1d(const Problem1D& problem, const SplineSpace1D& space,
                                        const CollocationSet1D& points) {
    const SolveResult res = solve(assemble_collocation_1d(problem, space, points));
    std::vector<double> full = problem.bc == BoundaryKind::dirichlet_homogeneous
                                   ? expand_dirichlet(space.dim(), res.coefficients)
                                   : res.coefficients;
    return {space, problem.bc, std::move(full), res.relative_residual};
}

DiscreteSolution1D solve_galerkin_1d(const Problem1D& problem, const SplineSpace1D& space,
                                     int quad_points_per_element) {
    const SolveResult res = solve(assemble_galerkin_1d(problem, space, quad_points_per_element));
    std::vector<double> full = problem.bc == BoundaryKind::dirichlet_homogeneous
                                   ? expand_dirichlet(space.dim(), res.coefficients)
                                   : res.coefficients;
    return {space, problem.bc, std::move(full), res.relative_residual};
}

namespace {

std::vector<double> expand_interior_2d(const TensorSpace& space,
                                       std::span<const double> interior) {
    const int nx = space.dim_x(), ny = space.dim_y();
    std::vector<double> full(static_cast<std::size_t>(space.dim()), 0.0);
    for (int j = 1; j < ny - 1; ++j)
        for (int i = 1; i < nx - 1; ++i)
            full[static_cast<std::size_t>(space.linear_index(i, j))] =
                interior[static_cast<std::size_t>((i - 1) + (j - 1) * (nx - 2))];
    return full;
}

}  // namespace

DiscreteSolution2D solve_collocation_2d(const Problem2D& problem, const TensorSpace& space,
                                        const CollocationSet2D& points) {
    const SolveResult res = solve(assemble_collocation_2d(problem, space, points));
    return {space, problem.geometry, expand_interior_2d(space, res.coefficients),
            res.relative_residual};
}

DiscreteSolution2D solve_galerkin_2d(const Problem2D& problem, const TensorSpace& space,
                                     int quad_points_per_element) {
    const SolveResult res = solve(assemble_galerkin_2d(problem, space, quad_points_per_element));
    return {space, problem.geometry, expand_interior_2d(space, res.coefficients),
            res.relative_residual};
}

}  // namespace isocolloc
