#ifndef ISOCOLLOC_PROBLEMS_HPP
#define ISOCOLLOC_PROBLEMS_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "isocolloc/geometry.hpp"

namespace isocolloc {

enum class BoundaryKind { dirichlet_homogeneous, periodic };

using ScalarFn1D = std::function<double(double)>;
using ScalarFn2D = std::function<double(double, double)>;

/** One-dimensional problem -u'' + a1 u' + a0 u = f on (0,1).
 *  Periodic problems additionally require a0 not identically zero to be
 *  well posed; that is a caller obligation, not a checked condition.
 */
struct Problem1D {
    ScalarFn1D a0;
    ScalarFn1D a1;
    ScalarFn1D f;
    BoundaryKind bc = BoundaryKind::dirichlet_homogeneous;
};

/// -Laplace(u) = f on Omega = F([0,1]^2), u = 0 on the boundary.
struct Problem2D {
    ScalarFn2D f;
    GeometryMap geometry;
};

struct Exact1D {
    ScalarFn1D u, du, d2u;
};

struct Exact2D {
    ScalarFn2D u, ux, uy;
};

struct Manufactured1D {
    Problem1D problem;
    Exact1D exact;
};

struct Manufactured2D {
    Problem2D problem;
    Exact2D exact;
};

/// A named problem with a closed-form exact solution and matching right-hand side.
struct ManufacturedProblem {
    std::string name;
    std::variant<Manufactured1D, Manufactured2D> detail;

    bool is_1d() const noexcept { return std::holds_alternative<Manufactured1D>(detail); }
    const Manufactured1D& as_1d() const { return std::get<Manufactured1D>(detail); }
    const Manufactured2D& as_2d() const { return std::get<Manufactured2D>(detail); }
};

/** The benchmark registry:
 *    p1-dirichlet           u = sin(pi x),        a0 = a1 = 0
 *    p2-periodic            u = sin(2 pi x),      a0 = a1 = 1
 *    p3-advection-reaction  u = sin(pi x) e^x,    a1(x) = x, a0 = 1
 *    p4-annulus             u = -(x^2+y^2-1)(x^2+y^2-4) x y^2 on the quarter annulus
 *    p5-rhombus             sine-product solution on a bilinear rhombus
 */
const std::vector<ManufacturedProblem>& manufactured_registry();
const ManufacturedProblem& find_problem(const std::string& name);

/** Max relative mismatch between the stored f and a finite-difference
 *  application of the operator to the stored exact solution, over `samples`
 *  pseudo-random points. Guards against transcription errors in the
 *  closed-form pairs.
 */
double manufactured_self_check(const ManufacturedProblem& mp, int samples = 100,
                               unsigned long long seed = 20240901ULL);

}  // namespace isocolloc

#endif
