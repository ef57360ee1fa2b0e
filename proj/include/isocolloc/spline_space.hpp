#ifndef ISOCOLLOC_SPLINE_SPACE_HPP
#define ISOCOLLOC_SPLINE_SPACE_HPP

#include <span>
#include <utility>
#include <vector>

#include "isocolloc/knots.hpp"

namespace isocolloc {

enum class SpaceKind { open, periodic };

/** Univariate spline space on [0,1].
 *
 *  The open kind wraps an open knot vector directly; dim() = n. The periodic
 *  kind is realized over a uniform knot vector extended by degree spans on
 *  each side of [0,1], with the extended basis functions identified modulo
 *  the number of elements, so dim() = n_el and members satisfy
 *  v(0) = v(1), ..., v^(p-1)(0) = v^(p-1)(1).
 */
class SplineSpace1D {
public:
    static SplineSpace1D open(KnotVector kv);
    static SplineSpace1D open_uniform(int n_el, int degree);
    static SplineSpace1D periodic_uniform(int n_el, int degree);

    SpaceKind kind() const noexcept { return kind_; }
    const KnotVector& knot_vector() const noexcept { return kv_; }
    int degree() const noexcept { return kv_.degree(); }
    /// Coefficient count: n for open, n_el for periodic.
    int dim() const noexcept { return dim_; }

    /// Elements of [0,1]; the knot-vector element list never includes the
    /// periodic extension because the domain starts at knot index degree.
    int element_count() const noexcept { return n_el_; }
    std::pair<double, double> element(int e) const { return kv_.element(e); }
    double meshsize() const;

    /// Periodic: extended basis index -> coefficient index; open: identity.
    int coefficient_index(int basis_index) const {
        return kind_ == SpaceKind::open ? basis_index
                                        : (basis_index % n_el_ + n_el_) % n_el_;
    }

    /// Basis values/derivatives at x; indices are extended-basis indices.
    BasisSpan basis(double x, int max_order) const { return basis_span(kv_, x, max_order); }

    /// Derivative of order `deriv` of the spline with the given coefficients.
    double eval(std::span<const double> coeffs, double x, int deriv) const;

    /// Open: all n Greville abscissae. Periodic: n_el Greville points in [0,1).
    std::vector<double> greville_points() const;

private:
    SplineSpace1D(SpaceKind kind, KnotVector kv, int dim, int n_el)
        : kind_(kind), kv_(std::move(kv)), dim_(dim), n_el_(n_el) {}

    SpaceKind kind_;
    KnotVector kv_;
    int dim_;
    int n_el_;
};

/// Free-function form of SplineSpace1D::eval.
double eval_spline(const SplineSpace1D& space, std::span<const double> coeffs, double x,
                   int deriv);

}  // namespace isocolloc

#endif
