#ifndef ISOCOLLOC_ASSEMBLY_HPP
#define ISOCOLLOC_ASSEMBLY_HPP

#include <vector>

#include "isocolloc/geometry.hpp"
#include "isocolloc/linalg.hpp"
#include "isocolloc/point_selection.hpp"
#include "isocolloc/problems.hpp"
#include "isocolloc/tensor_space.hpp"

namespace isocolloc {

/** Strong-form rows -u_h'' + a1 u_h' + a0 u_h = f at each collocation point.
 *  Dirichlet boundary coefficients are eliminated by dropping their columns
 *  (c_1 = c_n = 0); periodic spaces wrap indices. Averaging groups are merged
 *  into mean rows, and the merged count must reach at least the unknown
 *  count (equal for collocation, larger for least squares).
 */
LinearSystem assemble_collocation_1d(const Problem1D& problem, const SplineSpace1D& space,
                                     const CollocationSet1D& points);

/** Rows -(u_xx + u_yy) = f(F(xi, eta)) over the interior tensor-product
 *  unknowns, with all boundary-function coefficients eliminated. The system
 *  must be square.
 */
LinearSystem assemble_collocation_2d(const Problem2D& problem, const TensorSpace& space,
                                     const CollocationSet2D& points);

/// Weak form with elementwise Gauss quadrature; same operator sign
/// convention and Dirichlet elimination as the collocation path.
LinearSystem assemble_galerkin_1d(const Problem1D& problem, const SplineSpace1D& space,
                                  int quad_points_per_element);
LinearSystem assemble_galerkin_2d(const Problem2D& problem, const TensorSpace& space,
                                  int quad_points_per_element);

/// Spline solution with the full coefficient vector (boundary zeros included).
struct DiscreteSolution1D {
    SplineSpace1D space;
    BoundaryKind bc;
    std::vector<double> coefficients;
    double solve_residual = 0.0;

    double value(double x, int deriv = 0) const { return space.eval(coefficients, x, deriv); }
};

struct DiscreteSolution2D {
    TensorSpace space;
    GeometryMap geometry;
    std::vector<double> coefficients;  // dim_x * dim_y, x-fastest
    double solve_residual = 0.0;

    /// Parametric value / derivative of the spline expansion.
    double param_value(double xi, double eta, Deriv2 which = d00) const;
    /// Value and physical gradient of u_h = (spline o F^{-1}) at (xi, eta).
    PhysicalDerivs physical(double xi, double eta) const;
};

DiscreteSolution1D solve_collocation_1d(const Problem1D& problem, const SplineSpace1D& space,
                                        const CollocationSet1D& points);
DiscreteSolution1D solve_galerkin_1d(const Problem1D& problem, const SplineSpace1D& space,
                                     int quad_points_per_element = 0);
DiscreteSolution2D solve_collocation_2d(const Problem2D& problem, const TensorSpace& space,
                                        const CollocationSet2D& points);
DiscreteSolution2D solve_galerkin_2d(const Problem2D& problem, const TensorSpace& space,
                                     int quad_points_per_element = 0);

}  // namespace isocolloc

#endif
