#ifndef ISOCOLLOC_POINT_SELECTION_HPP
#define ISOCOLLOC_POINT_SELECTION_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "isocolloc/spline_space.hpp"

namespace isocolloc {

enum class Scheme { gp, lssp, asp, csp, csp_sym, galerkin };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Reference superconvergent points for the second derivative on [-1,1],
/// symmetric about 0; supported degrees 3..7.
std::span<const double> sp_reference_points(int degree);

/** Ordered collocation points with optional equation-averaging groups: each
 *  group's residual equations are merged into a single mean row, so the
 *  effective equation count is points minus the per-group surplus.
 */
struct CollocationSet1D {
    Scheme scheme = Scheme::gp;
    std::vector<double> points;
    std::vector<std::vector<int>> averaging_groups;

    int equation_count() const noexcept {
        int eq = static_cast<int>(points.size());
        for (const auto& g : averaging_groups) eq -= static_cast<int>(g.size()) - 1;
        return eq;
    }
};

struct CollocationSet2D {
    Scheme scheme = Scheme::gp;
    std::vector<std::array<double, 2>> points;  // x-fastest tensor order
};

/// All reference points mapped linearly to every element, deduplicated where
/// adjacent elements share an endpoint image (even degrees).
std::vector<double> surrogate_sp_all(const KnotVector& kv);
/// Same on a space; periodic spaces also identify the images of 0 and 1.
std::vector<double> surrogate_sp_all(const SplineSpace1D& space);

/// Interior Greville points (open) or the n_el periodic Greville points.
CollocationSet1D select_gp(const SplineSpace1D& space);

/// Every surrogate superconvergent point (interior only for open/Dirichlet);
/// the resulting system is solved in a least-squares sense. Throws when the
/// points cannot match the unknown count.
CollocationSet1D select_lssp(const SplineSpace1D& space);

/** One point per element. Periodic: the left surrogate point per element for
 *  odd degrees, the midpoint (= Greville) for even ones. Open: interior
 *  Greville points, each snapped to the nearest surrogate point of its
 *  element when at least degree-1 whole elements separate it from both
 *  boundaries; points sitting on a knot prefer the adjacent element nearer
 *  the domain center, and collisions fall back to the element's other
 *  surrogate point, then to the Greville point itself.
 */
CollocationSet1D select_asp(const SplineSpace1D& space);

/** Clusters of both surrogate points in every other element (odd degrees
 *  only). Periodic needs an even element count. Open meshes append
 *  near-boundary extras, plus a final right-boundary extra when the element
 *  count is even; the symmetric variant instead mirrors the left-half
 *  selection and averages the two equations nearest the domain center.
 */
CollocationSet1D select_csp(const SplineSpace1D& space, bool symmetric_variant = false);

/// Cartesian product in x-fastest order; averaging groups are not supported
/// in 2D and cause an error.
CollocationSet2D tensorize(const CollocationSet1D& cs_x, const CollocationSet1D& cs_y);

}  // namespace isocolloc

#endif
