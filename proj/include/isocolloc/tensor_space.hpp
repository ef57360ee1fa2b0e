#ifndef ISOCOLLOC_TENSOR_SPACE_HPP
#define ISOCOLLOC_TENSOR_SPACE_HPP

#include <array>
#include <vector>

#include "isocolloc/spline_space.hpp"

namespace isocolloc {

/// Parametric derivative slots up to total order 2.
enum Deriv2 : int { d00 = 0, d10 = 1, d01 = 2, d20 = 3, d11 = 4, d02 = 5 };

/** Active tensor-product (or NURBS) basis functions at one parametric point:
 *  (count_x * count_y) functions with global indices
 *  (first_x + a, first_y + b). Slot k of `table` holds the Deriv2 derivative.
 */
struct BasisSpan2D {
    int first_x = 0, first_y = 0;
    int count_x = 0, count_y = 0;
    int max_order = 0;
    std::array<std::vector<double>, 6> table;

    double value(Deriv2 k, int a, int b) const {
        return table[static_cast<std::size_t>(k)][static_cast<std::size_t>(a * count_y + b)];
    }
};

/** Tensor product of two univariate spaces, optionally with NURBS weights
 *  (x-fastest storage, all strictly positive). The linear index of function
 *  (i, j) is i + j * dim_x.
 */
class TensorSpace {
public:
    TensorSpace(SplineSpace1D space_x, SplineSpace1D space_y);
    TensorSpace(SplineSpace1D space_x, SplineSpace1D space_y, std::vector<double> weights);

    const SplineSpace1D& space_x() const noexcept { return sx_; }
    const SplineSpace1D& space_y() const noexcept { return sy_; }
    int dim_x() const noexcept { return sx_.dim(); }
    int dim_y() const noexcept { return sy_.dim(); }
    int dim() const noexcept { return dim_x() * dim_y(); }
    bool is_rational() const noexcept { return !weights_.empty(); }
    double weight(int i, int j) const {
        return weights_[static_cast<std::size_t>(linear_index(i, j))];
    }
    int linear_index(int i, int j) const noexcept { return i + j * dim_x(); }

    /** Basis values and parametric derivatives up to `max_order` (<= 2) at
     *  (xi, eta); rational when weights are present, via the quotient rule on
     *  the numerator and the weight function.
     */
    BasisSpan2D basis(double xi, double eta, int max_order) const;

private:
    SplineSpace1D sx_, sy_;
    std::vector<double> weights_;
};

/// Free-function form of TensorSpace::basis.
BasisSpan2D nurbs_basis_2d(const TensorSpace& space, double xi, double eta, int max_order);

}  // namespace isocolloc

#endif
