#include "isocolloc/geometry.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "isocolloc/errors.hpp"
#include "isocolloc/linalg.hpp"

namespace isocolloc {

GeometryMap::GeometryMap(MapKind kind, TensorSpace space, std::vector<Point2> control_net)
    : kind_(kind), space_(std::move(space)), control_(std::move(control_net)) {
    if (static_cast<int>(control_.size()) != space_.dim())
        throw InvalidArgument("GeometryMap: control net size must equal space dim");
}

GeometryMap GeometryMap::identity() {
    return bilinear({0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0});
}

GeometryMap GeometryMap::bilinear(Point2 v00, Point2 v10, Point2 v01, Point2 v11) {
    TensorSpace space(SplineSpace1D::open_uniform(1, 1), SplineSpace1D::open_uniform(1, 1));
    const bool is_identity = v00 == Point2{0.0, 0.0} && v10 == Point2{1.0, 0.0} &&
                             v01 == Point2{0.0, 1.0} && v11 == Point2{1.0, 1.0};
    return GeometryMap(is_identity ? MapKind::identity_2d : MapKind::bilinear_quad,
                       std::move(space), {v00, v10, v01, v11});
}

GeometryMap GeometryMap::quarter_annulus() {
    // Degree-2 rational arc over [0,0,0,1,1,1] times degree-1 radial span.
    // The arc runs from (0,1) to (1,0) so [angular, radial] columns give a
    // positive Jacobian determinant.
    KnotVector arc_kv(2, {0.0, 0.0, 0.0, 1.0, 1.0, 1.0});
    SplineSpace1D arc = SplineSpace1D::open(std::move(arc_kv));
    SplineSpace1D radial = SplineSpace1D::open_uniform(1, 1);
    const double w = std::sqrt(2.0) / 2.0;
    std::vector<double> weights = {1.0, w, 1.0, 1.0, w, 1.0};
    TensorSpace space(std::move(arc), std::move(radial), std::move(weights));
    std::vector<Point2> net = {
        {0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0},  // inner radius 1
        {0.0, 2.0}, {2.0, 2.0}, {2.0, 0.0},  // outer radius 2
    };
    return GeometryMap(MapKind::quarter_annulus, std::move(space), std::move(net));
}

GeometryMap GeometryMap::nurbs(TensorSpace space, std::vector<Point2> control_net) {
    return GeometryMap(MapKind::general_nurbs, std::move(space), std::move(control_net));
}

Point2 GeometryMap::operator()(double xi, double eta) const {
    const BasisSpan2D bs = space_.basis(xi, eta, 0);
    Point2 p{0.0, 0.0};
    for (int a = 0; a < bs.count_x; ++a)
        for (int b = 0; b < bs.count_y; ++b) {
            const double v = bs.value(d00, a, b);
            const Point2& c =
                control_[static_cast<std::size_t>(space_.linear_index(bs.first_x + a, bs.first_y + b))];
            p[0] += v * c[0];
            p[1] += v * c[1];
        }
    return p;
}

MapJet GeometryMap::jet(double xi, double eta) const {
    const BasisSpan2D bs = space_.basis(xi, eta, 2);
    MapJet jet;
    for (int a = 0; a < bs.count_x; ++a)
        for (int b = 0; b < bs.count_y; ++b) {
            const Point2& c =
                control_[static_cast<std::size_t>(space_.linear_index(bs.first_x + a, bs.first_y + b))];
            const double v = bs.value(d00, a, b);
            const double vx = bs.value(d10, a, b);
            const double vy = bs.value(d01, a, b);
            const double vxx = bs.value(d20, a, b);
            const double vxy = bs.value(d11, a, b);
            const double vyy = bs.value(d02, a, b);
            for (int i = 0; i < 2; ++i) {
                jet.position[i] += v * c[i];
                jet.jacobian[i][0] += vx * c[i];
                jet.jacobian[i][1] += vy * c[i];
                jet.d_xixi[i] += vxx * c[i];
                jet.d_xieta[i] += vxy * c[i];
                jet.d_etaeta[i] += vyy * c[i];
            }
        }
    if (std::abs(jet.det()) < 1e-14)
        throw NumericalError("GeometryMap: singular Jacobian at (xi, eta) = (" +
                             std::to_string(xi) + ", " + std::to_string(eta) + ")");
    return jet;
}

MapJet map_jet(const GeometryMap& map, double xi, double eta) {
    return map.jet(xi, eta);
}

PhysicalDerivs physical_second_order_coeffs(const MapJet& jet, double value,
                                            const Point2& grad_param,
                                            const std::array<double, 3>& hess_param) {
    const auto& J = jet.jacobian;
    const double det = jet.det();
    if (std::abs(det) < 1e-14)
        throw NumericalError("physical_second_order_coeffs: singular Jacobian");

    PhysicalDerivs out;
    out.value = value;
    // grad_phys = J^{-T} grad_param
    out.gradient[0] = (J[1][1] * grad_param[0] - J[1][0] * grad_param[1]) / det;
    out.gradient[1] = (-J[0][1] * grad_param[0] + J[0][0] * grad_param[1]) / det;

    // Hess_param - grad_phys . d2F = J^T Hess_phys J, solved as a 3x3 system
    // in (u_xx, u_xy, u_yy).
    DenseMatrix m(3, 3);
    m(0, 0) = J[0][0] * J[0][0];
    m(0, 1) = 2.0 * J[0][0] * J[1][0];
    m(0, 2) = J[1][0] * J[1][0];
    m(1, 0) = J[0][0] * J[0][1];
    m(1, 1) = J[0][0] * J[1][1] + J[1][0] * J[0][1];
    m(1, 2) = J[1][0] * J[1][1];
    m(2, 0) = J[0][1] * J[0][1];
    m(2, 1) = 2.0 * J[0][1] * J[1][1];
    m(2, 2) = J[1][1] * J[1][1];
    std::vector<double> rhs = {
        hess_param[0] - out.gradient[0] * jet.d_xixi[0] - out.gradient[1] * jet.d_xixi[1],
        hess_param[1] - out.gradient[0] * jet.d_xieta[0] - out.gradient[1] * jet.d_xieta[1],
        hess_param[2] - out.gradient[0] * jet.d_etaeta[0] - out.gradient[1] * jet.d_etaeta[1],
    };
    const std::vector<double> h = lu_solve(std::move(m), std::move(rhs));
    out.xx = h[0];
    out.xy = h[1];
    out.yy = h[2];
    return out;
}

}  // namespace isocolloc
