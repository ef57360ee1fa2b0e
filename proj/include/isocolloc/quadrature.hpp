#ifndef ISOCOLLOC_QUADRATURE_HPP
#define ISOCOLLOC_QUADRATURE_HPP

#include <vector>

namespace isocolloc {

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1,1], ascending
    std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre rule with n points, exact for polynomials of degree 2n-1.
const QuadratureRule& gauss_legendre(int n);

}  // namespace isocolloc

#endif
