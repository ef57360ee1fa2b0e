#ifndef ISOCOLLOC_KNOTS_HPP
#define ISOCOLLOC_KNOTS_HPP

#include <span>
#include <utility>
#include <vector>

namespace isocolloc {

/** A nondecreasing knot sequence together with the polynomial degree.
 *
 *  The number of basis functions is n = knots.size() - degree - 1. Knots
 *  strictly inside the domain must be simple, so the associated B-spline
 *  basis has maximal C^{p-1} smoothness. An "open" vector repeats the first
 *  and last knot degree+1 times and spans the basis interpolatory at both
 *  domain ends.
 */
class KnotVector {
public:
    KnotVector(int degree, std::vector<double> knots);

    int degree() const noexcept { return degree_; }
    /// Number of basis functions n.
    int count() const noexcept { return static_cast<int>(knots_.size()) - degree_ - 1; }
    double operator[](int i) const { return knots_[static_cast<std::size_t>(i)]; }
    std::span<const double> knots() const noexcept { return knots_; }

    bool is_open() const noexcept;
    double domain_begin() const { return knots_[static_cast<std::size_t>(degree_)]; }
    double domain_end() const { return knots_[static_cast<std::size_t>(count())]; }

    /// Nonzero knot spans, in order.
    int element_count() const noexcept { return static_cast<int>(element_spans_.size()); }
    std::pair<double, double> element(int e) const;
    /// Knot-array index of the left knot of element e.
    int element_span(int e) const { return element_spans_[static_cast<std::size_t>(e)]; }
    /// Largest element width.
    double meshsize() const noexcept { return meshsize_; }

    /// Index s with knots[s] <= x < knots[s+1]; the domain end maps to the
    /// last nonzero span so the basis is left-closed at x = domain_end().
    int find_span(double x) const;

private:
    int degree_;
    std::vector<double> knots_;
    std::vector<int> element_spans_;
    double meshsize_ = 0.0;
};

/// Open knot vector on [0,1] with n_el equal elements; n = n_el + degree.
KnotVector make_open_uniform(int n_el, int degree);

/** Values and derivatives of the basis functions that are nonzero at one
 *  point: derivative orders 0..max_order by local function 0..degree. Global
 *  function indices are first_index .. first_index+degree.
 */
struct BasisSpan {
    int first_index = 0;
    int count = 0;
    int max_order = 0;
    std::vector<double> data;  // (max_order+1) x count, row-major

    double value(int order, int local) const {
        return data[static_cast<std::size_t>(order * count + local)];
    }
};

/// Cox-de Boor values plus derivatives via the knot-difference recursion.
BasisSpan basis_span(const KnotVector& kv, double x, int max_order);

/// Greville abscissae: averages of degree consecutive knots; n points.
std::vector<double> greville(const KnotVector& kv);

}  // namespace isocolloc

#endif
