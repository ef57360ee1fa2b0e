#ifndef ISOCOLLOC_ANALYSIS_HPP
#define ISOCOLLOC_ANALYSIS_HPP

#include <random>
#include <span>
#include <string>
#include <vector>

#include "isocolloc/assembly.hpp"
#include "isocolloc/point_selection.hpp"
#include "isocolloc/problems.hpp"

namespace isocolloc {

enum class Norm { l2, h1, h2, linf };

/** Error norms of u - u_h on one refinement level. The h1 and h2 entries are
 *  full norms accumulated from the seminorms, so l2 <= h1 <= h2; h2 is
 *  reported in 1D only (NaN otherwise). linf is sampled on a uniform
 *  10-points-per-element grid. Quadrature contributions accumulate in
 *  element order (x-fastest in 2D), so results are deterministic.
 */
struct ErrorReport {
    int n_el = 0;
    double h = 0.0;
    int dof = 0;  // solved unknowns
    double l2 = 0.0, h1 = 0.0, h2 = 0.0, linf = 0.0;

    double norm(Norm which) const;
};

ErrorReport error_norms(const DiscreteSolution1D& sol, const Manufactured1D& mp,
                        int quad_points_per_element = 0);
ErrorReport error_norms(const DiscreteSolution2D& sol, const Manufactured2D& mp,
                        int quad_points_per_element = 0);

/// L2 distance between two discrete solutions over [0,1].
double l2_distance(const DiscreteSolution1D& a, const DiscreteSolution1D& b,
                   int quad_points_per_element = 0);

/// Mesh-refinement history with per-step orders and tail slopes.
struct ConvergenceStudy {
    std::string problem;
    Scheme scheme = Scheme::gp;
    int degree = 0;
    std::vector<ErrorReport> levels;

    /// log(e_i/e_{i+1}) / log(h_i/h_{i+1}) for step i -> i+1.
    double step_order(Norm which, int step) const;
    /** Least-squares slope of log(error) vs log(h) over the last `tail`
     *  levels (default 3), ignoring levels whose error is below `floor`.
     */
    double tail_order(Norm which, int tail = 3, double floor = 0.0) const;
};

ConvergenceStudy convergence_rates(std::string problem, Scheme scheme, int degree,
                                   std::vector<ErrorReport> reports);

/// Signed samples of D^2(u - u_h) plus their root-mean-square.
struct ResidualDiagnostics {
    std::vector<double> points;
    std::vector<double> samples;
    double rms = 0.0;
};

ResidualDiagnostics residual_superconvergence(const DiscreteSolution1D& sol,
                                              const Manufactured1D& mp,
                                              std::span<const double> points);

/// Surrogate points of the elements at least `degree` elements away from
/// both boundaries, where the superconvergence estimate applies.
std::vector<double> interior_surrogate_points(const SplineSpace1D& space);

struct PerturbationSpec {
    unsigned long long seed = 1;
};

/** Shift each interior knot by X_i / (10 n_el) with X_i uniform in [-1,1]
 *  drawn from `rng` in knot order. The amplitude keeps uniform meshes
 *  strictly increasing; the result is checked either way.
 */
KnotVector perturb_knots(const KnotVector& kv, std::mt19937_64& rng);
KnotVector perturb_knots(const KnotVector& kv, const PerturbationSpec& spec);
/// Deterministic core: one draw in [-1,1] per interior knot.
KnotVector perturb_knots(const KnotVector& kv, std::span<const double> draws);

}  // namespace isocolloc

#endif
