#include "isocolloc/tensor_space.hpp"

#include <algorithm>
#include <utility>

#include "isocolloc/errors.hpp"

namespace isocolloc {

TensorSpace::TensorSpace(SplineSpace1D space_x, SplineSpace1D space_y)
    : sx_(std::move(space_x)), sy_(std::move(space_y)) {}

TensorSpace::TensorSpace(SplineSpace1D space_x, SplineSpace1D space_y,
                         std::vector<double> weights)
    : sx_(std::move(space_x)), sy_(std::move(space_y)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != dim())
        throw InvalidArgument("TensorSpace: weight count must equal dim_x*dim_y");
    for (double w : weights_)
        if (!(w > 0.0)) throw InvalidArgument("TensorSpace: weights must be positive");
}

BasisSpan2D TensorSpace::basis(double xi, double eta, int max_order) const {
    if (max_order < 0 || max_order > 2)
        throw InvalidArgument("TensorSpace::basis: derivative order must be 0..2");

    // Orders past a directional degree are identically zero in element
    // interiors; clamp the recursion and zero-extend.
    const int ox = std::min(max_order, sx_.degree());
    const int oy = std::min(max_order, sy_.degree());
    const BasisSpan bx = sx_.basis(xi, ox);
    const BasisSpan by = sy_.basis(eta, oy);

    BasisSpan2D out;
    out.first_x = bx.first_index;
    out.first_y = by.first_index;
    out.count_x = bx.count;
    out.count_y = by.count;
    out.max_order = max_order;
    const std::size_t cells = static_cast<std::size_t>(bx.count) * by.count;
    const int nslots = max_order == 0 ? 1 : (max_order == 1 ? 3 : 6);
    for (int k = 0; k < nslots; ++k) out.table[static_cast<std::size_t>(k)].assign(cells, 0.0);

    auto put = [&](Deriv2 k, int a, int b, double v) {
        out.table[static_cast<std::size_t>(k)][static_cast<std::size_t>(a * by.count + b)] = v;
    };
    auto dx = [&](int order, int a) { return order > ox ? 0.0 : bx.value(order, a); };
    auto dy = [&](int order, int b) { return order > oy ? 0.0 : by.value(order, b); };

    if (!is_rational()) {
        for (int a = 0; a < bx.count; ++a)
            for (int b = 0; b < by.count; ++b) {
                put(d00, a, b, dx(0, a) * dy(0, b));
                if (max_order >= 1) {
                    put(d10, a, b, dx(1, a) * dy(0, b));
                    put(d01, a, b, dx(0, a) * dy(1, b));
                }
                if (max_order >= 2) {
                    put(d20, a, b, dx(2, a) * dy(0, b));
                    put(d11, a, b, dx(1, a) * dy(1, b));
                    put(d02, a, b, dx(0, a) * dy(2, b));
                }
            }
        return out;
    }

    // Rational path: W = sum N M w, then the quotient rule order by order.
    double w00 = 0, w10 = 0, w01 = 0, w20 = 0, w11 = 0, w02 = 0;
    for (int a = 0; a < bx.count; ++a)
        for (int b = 0; b < by.count; ++b) {
            const double w = weight(bx.first_index + a, by.first_index + b);
            w00 += dx(0, a) * dy(0, b) * w;
            if (max_order >= 1) {
                w10 += dx(1, a) * dy(0, b) * w;
                w01 += dx(0, a) * dy(1, b) * w;
            }
            if (max_order >= 2) {
                w20 += dx(2, a) * dy(0, b) * w;
                w11 += dx(1, a) * dy(1, b) * w;
                w02 += dx(0, a) * dy(2, b) * w;
            }
        }

    for (int a = 0; a < bx.count; ++a)
        for (int b = 0; b < by.count; ++b) {
            const double w = weight(bx.first_index + a, by.first_index + b);
            const double n00 = dx(0, a) * dy(0, b) * w;
            const double r00 = n00 / w00;
            put(d00, a, b, r00);
            if (max_order < 1) continue;
            const double n10 = dx(1, a) * dy(0, b) * w;
            const double n01 = dx(0, a) * dy(1, b) * w;
            const double r10 = (n10 - r00 * w10) / w00;
            const double r01 = (n01 - r00 * w01) / w00;
            put(d10, a, b, r10);
            put(d01, a, b, r01);
            if (max_order < 2) continue;
            const double n20 = dx(2, a) * dy(0, b) * w;
            const double n11 = dx(1, a) * dy(1, b) * w;
            const double n02 = dx(0, a) * dy(2, b) * w;
            put(d20, a, b, (n20 - 2.0 * r10 * w10 - r00 * w20) / w00);
            put(d11, a, b, (n11 - r10 * w01 - r01 * w10 - r00 * w11) / w00);
            put(d02, a, b, (n02 - 2.0 * r01 * w01 - r00 * w02) / w00);
        }
    return out;
}

BasisSpan2D nurbs_basis_2d(const TensorSpace& space, double xi, double eta, int max_order) {
    return space.basis(xi, eta, max_order);
}

}  // namespace isocolloc
