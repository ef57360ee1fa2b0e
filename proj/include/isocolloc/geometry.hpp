#ifndef ISOCOLLOC_GEOMETRY_HPP
#define ISOCOLLOC_GEOMETRY_HPP

#include <array>
#include <vector>

#include "isocolloc/tensor_space.hpp"

namespace isocolloc {

using Point2 = std::array<double, 2>;

enum class MapKind { identity_2d, bilinear_quad, quarter_annulus, general_nurbs };

/// Position and derivatives of the geometry map at one parametric point.
struct MapJet {
    Point2 position{};
    /// jacobian[i][a] = dF_i / d(xi_a), columns are the parametric directions.
    std::array<std::array<double, 2>, 2> jacobian{};
    Point2 d_xixi{}, d_xieta{}, d_etaeta{};

    double det() const noexcept {
        return jacobian[0][0] * jacobian[1][1] - jacobian[0][1] * jacobian[1][0];
    }
};

/** NURBS parametrization F: [0,1]^2 -> Omega with a control net stored
 *  x-fastest. All provided maps share the one evaluation path; the kind tag
 *  records the construction.
 */
class GeometryMap {
public:
    static GeometryMap identity();
    /// Corners in parametric order: F(0,0)=v00, F(1,0)=v10, F(0,1)=v01, F(1,1)=v11.
    static GeometryMap bilinear(Point2 v00, Point2 v10, Point2 v01, Point2 v11);
    /** Exact quarter annulus {1 <= x^2+y^2 <= 4, x >= 0, y >= 0}: a rational
     *  quadratic 90-degree arc (weights 1, sqrt(2)/2, 1) in xi tensor a linear
     *  radial direction in eta. Corners: F(0,0)=(0,1), F(1,0)=(1,0),
     *  F(0,1)=(0,2), F(1,1)=(2,0); eta = 0 is the inner arc.
     */
    static GeometryMap quarter_annulus();
    static GeometryMap nurbs(TensorSpace space, std::vector<Point2> control_net);

    MapKind kind() const noexcept { return kind_; }
    Point2 operator()(double xi, double eta) const;
    /// Exact derivatives of the stored map; throws NumericalError with the
    /// parametric location if the Jacobian is singular there.
    MapJet jet(double xi, double eta) const;

private:
    GeometryMap(MapKind kind, TensorSpace space, std::vector<Point2> control_net);

    MapKind kind_;
    TensorSpace space_;
    std::vector<Point2> control_;
};

MapJet map_jet(const GeometryMap& map, double xi, double eta);

/// Value, physical gradient, and physical Hessian of one basis function.
struct PhysicalDerivs {
    double value = 0.0;
    Point2 gradient{};
    double xx = 0.0, xy = 0.0, yy = 0.0;
    double laplacian() const noexcept { return xx + yy; }
};

/** Push parametric derivatives of u-hat = u o F through the map: the
 *  gradient via J^{-T}, the Hessian by solving the 3x3 relation
 *  Hess_param = J^T Hess_phys J + grad_phys . d2F per point.
 *  `hess_param` is (u_xixi, u_xieta, u_etaeta).
 */
PhysicalDerivs physical_second_order_coeffs(const MapJet& jet, double value,
                                            const Point2& grad_param,
                                            const std::array<double, 3>& hess_param);

}  // namespace isocolloc

#endif
