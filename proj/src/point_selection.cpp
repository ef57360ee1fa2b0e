#include "isocolloc/point_selection.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "isocolloc/errors.hpp"

namespace isocolloc {

namespace {

constexpr double kDedupTol = 1e-12;

const std::array<double, 2> kSp3 = {-1.0 / 1.7320508075688772935, 1.0 / 1.7320508075688772935};
const std::array<double, 3> kSpEven = {-1.0, 0.0, 1.0};
// sqrt(225 - 30 sqrt(30)) / 15
const double kSp5Value = std::sqrt(225.0 - 30.0 * std::sqrt(30.0)) / 15.0;
const std::array<double, 2> kSp5 = {-kSp5Value, kSp5Value};
const std::array<double, 2> kSp7 = {-0.504918567512, 0.504918567512};

struct ElementPoints {
    double lo, hi;  // the two cluster points of one element (odd degrees)
};

// Both surrogate points of an element for an odd degree.
ElementPoints odd_pair(const SplineSpace1D& space, int e) {
    const auto [a, b] = space.element(e);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const double t = sp_reference_points(space.degree()).back();
    return {mid - t * half, mid + t * half};
}

void require_odd_degree_supported(int p) {
    if (p < 3 || p > 7 || p % 2 == 0)
        throw InvalidArgument("clustered selection supports odd degrees 3, 5, 7 only; "
                              "got degree " + std::to_string(p));
}

std::vector<double> map_reference_to_elements(const SplineSpace1D& space) {
    const auto ref = sp_reference_points(space.degree());
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(space.element_count()) * ref.size());
    for (int e = 0; e < space.element_count(); ++e) {
        const auto [a, b] = space.element(e);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (double t : ref) pts.push_back(mid + t * half);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double x, double y) { return std::abs(x - y) < kDedupTol; }),
              pts.end());
    return pts;
}

void check_strictly_increasing(const std::vector<double>& pts, const char* where) {
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i] > pts[i - 1] + kDedupTol))
            throw NumericalError(std::string(where) + ": collocation points not distinct");
}

// Tracks chosen points so duplicates are rejected up front.
class PointSet {
public:
    bool contains(double x) const {
        auto it = set_.lower_bound(x - kDedupTol);
        return it != set_.end() && *it < x + kDedupTol;
    }
    bool insert(double x) {
        if (contains(x)) return false;
        set_.insert(x);
        return true;
    }
    std::vector<double> sorted() const { return {set_.begin(), set_.end()}; }
    int size() const { return static_cast<int>(set_.size()); }

private:
    std::set<double> set_;
};

}  // namespace

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::gp: return "gp";
        case Scheme::lssp: return "lssp";
        case Scheme::asp: return "asp";
        case Scheme::csp: return "csp";
        case Scheme::csp_sym: return "csp-sym";
        case Scheme::galerkin: return "galerkin";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "gp") return Scheme::gp;
    if (name == "lssp") return Scheme::lssp;
    if (name == "asp") return Scheme::asp;
    if (name == "csp") return Scheme::csp;
    if (name == "csp-sym" || name == "csp_sym") return Scheme::csp_sym;
    if (name == "galerkin") return Scheme::galerkin;
    throw ConfigError("unknown scheme '" + name + "'");
}

std::span<const double> sp_reference_points(int degree) {
    switch (degree) {
        case 3: return kSp3;
        case 4: return kSpEven;
        case 5: return kSp5;
        case 6: return kSpEven;
        case 7: return kSp7;
        default:
            throw InvalidArgument("superconvergent points tabulated for degrees 3..7 only; "
                                  "got degree " + std::to_string(degree));
    }
}

std::vector<double> surrogate_sp_all(const KnotVector& kv) {
    return map_reference_to_elements(SplineSpace1D::open(kv));
}

std::vector<double> surrogate_sp_all(const SplineSpace1D& space) {
    std::vector<double> pts = map_reference_to_elements(space);
    if (space.kind() == SpaceKind::periodic) {
        // 1 is identified with 0
        while (!pts.empty() && pts.back() > 1.0 - kDedupTol) pts.pop_back();
    }
    return pts;
}

CollocationSet1D select_gp(const SplineSpace1D& space) {
    CollocationSet1D cs;
    cs.scheme = Scheme::gp;
    if (space.kind() == SpaceKind::periodic) {
        cs.points = space.greville_points();
    } else {
        const std::vector<double> all = space.greville_points();
        cs.points.assign(all.begin() + 1, all.end() - 1);
    }
    check_strictly_increasing(cs.points, "select_gp");
    return cs;
}

CollocationSet1D select_lssp(const SplineSpace1D& space) {
    CollocationSet1D cs;
    cs.scheme = Scheme::lssp;
    cs.points = surrogate_sp_all(space);
    if (space.kind() == SpaceKind::open) {
        std::erase_if(cs.points,
                      [](double x) { return x < kDedupTol || x > 1.0 - kDedupTol; });
    }
    const int unknowns =
        space.kind() == SpaceKind::open ? space.dim() - 2 : space.dim();
    if (static_cast<int>(cs.points.size()) < unknowns)
        throw InvalidArgument("select_lssp: only " + std::to_string(cs.points.size()) +
                              " surrogate points for " + std::to_string(unknowns) +
                              " unknowns; refusing an underdetermined system");
    return cs;
}

CollocationSet1D select_asp(const SplineSpace1D& space) {
    const int p = space.degree();
    sp_reference_points(p);  // degree-support check
    CollocationSet1D cs;
    cs.scheme = Scheme::asp;

    if (space.kind() == SpaceKind::periodic) {
        for (int e = 0; e < space.element_count(); ++e) {
            const auto [a, b] = space.element(e);
            cs.points.push_back(p % 2 == 1 ? odd_pair(space, e).lo : 0.5 * (a + b));
        }
        check_strictly_increasing(cs.points, "select_asp");
        return cs;
    }

    const std::vector<double> gre = space.greville_points();
    const int n_el = space.element_count();

    // Whole elements fitting strictly between x and a domain boundary.
    auto elements_left_of = [&](double x) {
        int c = 0;
        for (int e = 0; e < n_el; ++e)
            if (space.element(e).second <= x + kDedupTol) ++c;
        return c;
    };
    auto elements_right_of = [&](double x) {
        int c = 0;
        for (int e = 0; e < n_el; ++e)
            if (space.element(e).first >= x - kDedupTol) ++c;
        return c;
    };
    auto element_pts = [&](int e) {
        const auto [a, b] = space.element(e);
        const auto ref = sp_reference_points(p);
        std::vector<double> pts;
        for (double t : ref) pts.push_back(0.5 * (a + b) + t * 0.5 * (b - a));
        return pts;
    };
    auto nearest_in_element = [&](int e, double x) {
        double best = x, bd = 1e300;
        for (double q : element_pts(e)) {
            if (std::abs(q - x) < bd) {
                bd = std::abs(q - x);
                best = q;
            }
        }
        return best;
    };

    PointSet chosen;
    std::vector<double> result;
    for (std::size_t gi = 1; gi + 1 < gre.size(); ++gi) {
        const double tau = gre[gi];
        if (elements_left_of(tau) < p - 1 || elements_right_of(tau) < p - 1) {
            if (!chosen.insert(tau))
                throw NumericalError("select_asp: duplicate Greville point");
            result.push_back(tau);
            continue;
        }
        // Candidate elements: the one containing tau, or both neighbours when
        // tau sits on a knot; ties go to the side of the domain center.
        std::vector<int> candidates;
        for (int e = 0; e < n_el; ++e) {
            const auto [a, b] = space.element(e);
            if (tau > a - kDedupTol && tau < b + kDedupTol) candidates.push_back(e);
        }
        std::sort(candidates.begin(), candidates.end(), [&](int ea, int eb) {
            const double da = std::abs(nearest_in_element(ea, tau) - tau);
            const double db = std::abs(nearest_in_element(eb, tau) - tau);
            if (std::abs(da - db) > kDedupTol) return da < db;
            // tie: prefer the element toward the center
            return tau <= 0.5 ? ea > eb : ea < eb;
        });
        bool placed = false;
        for (int e : candidates) {
            std::vector<double> pts = element_pts(e);
            std::sort(pts.begin(), pts.end(), [&](double x, double y) {
                return std::abs(x - tau) < std::abs(y - tau);
            });
            for (double q : pts) {
                if (chosen.insert(q)) {
                    result.push_back(q);
                    placed = true;
                    break;
                }
            }
            if (placed) break;
        }
        if (!placed) {
            if (!chosen.insert(tau))
                throw NumericalError("select_asp: could not place a collocation point");
            result.push_back(tau);
        }
    }
    std::sort(result.begin(), result.end());
    cs.points = std::move(result);
    check_strictly_increasing(cs.points, "select_asp");
    return cs;
}

CollocationSet1D select_csp(const SplineSpace1D& space, bool symmetric_variant) {
    const int p = space.degree();
    require_odd_degree_supported(p);
    const int n_el = space.element_count();
    CollocationSet1D cs;
    cs.scheme = symmetric_variant ? Scheme::csp_sym : Scheme::csp;

    if (space.kind() == SpaceKind::periodic) {
        if (symmetric_variant)
            throw InvalidArgument("select_csp: the symmetric variant applies to open "
                                  "knot vectors only");
        if (n_el % 2 != 0)
            throw InvalidArgument("select_csp: periodic selection needs an even number "
                                  "of elements");
        for (int e = 0; e < n_el; e += 2) {
            const ElementPoints pr = odd_pair(space, e);
            cs.points.push_back(pr.lo);
            cs.points.push_back(pr.hi);
        }
        check_strictly_increasing(cs.points, "select_csp");
        return cs;
    }

    const int target = n_el + p - 2;  // = dim - 2 interior unknowns
    if (2 * n_el < target + (symmetric_variant ? 1 : 0))
        throw InvalidArgument("select_csp: mesh of " + std::to_string(n_el) +
                              " elements is too small for degree " + std::to_string(p));

    PointSet chosen;
    auto add = [&](double x, const char* what) {
        if (!chosen.insert(x))
            throw NumericalError(std::string("select_csp: duplicate ") + what);
    };
    const int extras_per_side = (p - 3) / 2;

    if (!symmetric_variant && n_el % 2 == 1) {
        // clusters in elements 1, 3, ..., n_el (1-based)
        for (int e = 0; e < n_el; e += 2) {
            const ElementPoints pr = odd_pair(space, e);
            add(pr.lo, "cluster point");
            add(pr.hi, "cluster point");
        }
        for (int j = 1; j <= extras_per_side; ++j) {
            add(odd_pair(space, 2 * j - 1).lo, "left extra");
            add(odd_pair(space, n_el - 2 * j).hi, "right extra");
        }
    } else if (!symmetric_variant) {
        // clusters in elements 1, 3, ..., n_el-1 (1-based), then extras from
        // the skipped even elements and one final right-boundary extra
        for (int e = 0; e + 1 < n_el; e += 2) {
            const ElementPoints pr = odd_pair(space, e);
            add(pr.lo, "cluster point");
            add(pr.hi, "cluster point");
        }
        for (int j = 1; j <= extras_per_side; ++j) {
            if (2 * j - 1 >= n_el || n_el - 1 - 2 * j < 0)
                throw InvalidArgument("select_csp: mesh of " + std::to_string(n_el) +
                                      " elements is too small for degree " +
                                      std::to_string(p));
            add(odd_pair(space, 2 * j - 1).lo, "left extra");
            add(odd_pair(space, n_el - 1 - 2 * j).hi, "right extra");
        }
        add(odd_pair(space, n_el - 1).hi, "final extra");
    } else {
        // Symmetric variant: cluster the odd elements of the left half,
        // mirror the selection, and average the pair nearest the center.
        if (n_el % 2 != 0)
            throw InvalidArgument("select_csp: the symmetric variant applies to even "
                                  "element counts (odd counts are already symmetric)");
        const int half = n_el / 2;
        for (int e = 0; e < half; e += 2) {
            const ElementPoints l = odd_pair(space, e);
            add(l.lo, "cluster point");
            add(l.hi, "cluster point");
            const ElementPoints r = odd_pair(space, n_el - 1 - e);
            add(r.lo, "mirror cluster point");
            add(r.hi, "mirror cluster point");
        }
        // Extras: nearer-boundary points of the skipped left-half elements
        // first, then their partners if the half is exhausted.
        std::vector<double> pool;
        for (int pass = 0; pass < 2; ++pass)
            for (int e = 1; e < half; e += 2)
                pool.push_back(pass == 0 ? odd_pair(space, e).lo : odd_pair(space, e).hi);
        int added = 0;
        for (double q : pool) {
            if (added == extras_per_side) break;
            if (chosen.contains(q)) continue;
            add(q, "extra");
            add(1.0 - q, "mirror extra");
            ++added;
        }
        if (added != extras_per_side)
            throw InvalidArgument("select_csp: mesh of " + std::to_string(n_el) +
                                  " elements is too small for degree " + std::to_string(p));
        // Center pair: present already when element `half` (1-based) is
        // clustered, inserted otherwise.
        const double cl = odd_pair(space, half - 1).hi;
        const double cr = odd_pair(space, half).lo;
        if (!chosen.contains(cl)) {
            add(cl, "center point");
            add(cr, "center point");
        }
        cs.points = chosen.sorted();
        auto index_of = [&](double x) {
            for (std::size_t i = 0; i < cs.points.size(); ++i)
                if (std::abs(cs.points[i] - x) < kDedupTol) return static_cast<int>(i);
            throw NumericalError("select_csp: lost track of the center pair");
        };
        cs.averaging_groups.push_back({index_of(cl), index_of(cr)});
        if (cs.equation_count() != target)
            throw NumericalError("select_csp: symmetric variant produced " +
                                 std::to_string(cs.equation_count()) + " equations for " +
                                 std::to_string(target) + " unknowns");
        check_strictly_increasing(cs.points, "select_csp");
        return cs;
    }

    cs.points = chosen.sorted();
    if (static_cast<int>(cs.points.size()) != target)
        throw NumericalError("select_csp: produced " + std::to_string(cs.points.size()) +
                             " points for " + std::to_string(target) + " unknowns");
    check_strictly_increasing(cs.points, "select_csp");
    return cs;
}

CollocationSet2D tensorize(const CollocationSet1D& cs_x, const CollocationSet1D& cs_y) {
    if (!cs_x.averaging_groups.empty() || !cs_y.averaging_groups.empty())
        throw InvalidArgument("tensorize: averaging groups are not defined in 2D");
    CollocationSet2D out;
    out.scheme = cs_x.scheme;
    out.points.reserve(cs_x.points.size() * cs_y.points.size());
    for (double y : cs_y.points)
        for (double x : cs_x.points) out.points.push_back({x, y});
    return out;
}

}  // namespace isocolloc
