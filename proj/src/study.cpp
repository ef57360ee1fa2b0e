#include "isocolloc/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "isocolloc/errors.hpp"

namespace isocolloc {

namespace {

bool is_two_dimensional(const std::string& problem) {
    return !find_problem(problem).is_1d();
}

CollocationSet1D select_points(Scheme scheme, const SplineSpace1D& space) {
    switch (scheme) {
        case Scheme::gp: return select_gp(space);
        case Scheme::lssp: return select_lssp(space);
        case Scheme::asp: return select_asp(space);
        case Scheme::csp: return select_csp(space, false);
        case Scheme::csp_sym: return select_csp(space, true);
        case Scheme::galerkin:
            throw InvalidArgument("galerkin has no collocation points");
    }
    throw InvalidArgument("unknown scheme");
}

DiscreteSolution1D solve_level_1d(const Manufactured1D& mp, Scheme scheme,
                                  const SplineSpace1D& space) {
    if (scheme == Scheme::galerkin) return solve_galerkin_1d(mp.problem, space);
    return solve_collocation_1d(mp.problem, space, select_points(scheme, space));
}

DiscreteSolution2D solve_level_2d(const Manufactured2D& mp, Scheme scheme, int n_el,
                                  int degree) {
    TensorSpace space(SplineSpace1D::open_uniform(n_el, degree),
                      SplineSpace1D::open_uniform(n_el, degree));
    if (scheme == Scheme::galerkin) return solve_galerkin_2d(mp.problem, space);
    const CollocationSet1D cx = select_points(scheme, space.space_x());
    const CollocationSet1D cy = select_points(scheme, space.space_y());
    return solve_collocation_2d(mp.problem, space, tensorize(cx, cy));
}

void validate_scheme_for(const StudyConfig& config, Scheme scheme) {
    const bool two_d = is_two_dimensional(config.problem);
    const bool periodic =
        !two_d && find_problem(config.problem).as_1d().problem.bc == BoundaryKind::periodic;

    if (scheme == Scheme::galerkin) {
        if (config.degree < 1) throw ConfigError("galerkin needs degree >= 1");
        return;
    }
    if (scheme == Scheme::gp) {
        if (config.degree < 2) throw ConfigError("gp needs degree >= 2");
        return;
    }
    if (config.degree < 3 || config.degree > 7)
        throw ConfigError("scheme '" + scheme_name(scheme) +
                          "' needs the tabulated superconvergent points (degree 3..7)");
    if ((scheme == Scheme::csp || scheme == Scheme::csp_sym) && config.degree % 2 == 0)
        throw ConfigError("clustered selection is defined for odd degrees only");
    if (scheme == Scheme::csp && periodic) {
        for (int m : config.meshes)
            if (m % 2 != 0)
                throw ConfigError("periodic clustered selection needs even mesh sizes");
    }
    if (scheme == Scheme::csp_sym) {
        if (two_d) throw ConfigError("the averaged symmetric variant is univariate only");
        if (periodic)
            throw ConfigError("the averaged symmetric variant applies to the Dirichlet "
                              "problem");
        for (int m : config.meshes)
            if (m % 2 != 0)
                throw ConfigError("the symmetric variant targets even mesh sizes");
    }
    if (scheme == Scheme::lssp && two_d)
        throw ConfigError("least-squares selection is univariate only (2D systems are "
                          "collocation-square)");
}

void print_double(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

std::vector<Scheme> compare_schemes(const StudyConfig& config) {
    if (!config.schemes.empty()) return config.schemes;
    return {Scheme::galerkin, Scheme::gp, Scheme::asp, Scheme::csp, Scheme::lssp};
}

}  // namespace

StudyConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    StudyConfig config;
    try {
        if (j.contains("problem")) config.problem = j.at("problem").get<std::string>();
        if (j.contains("scheme"))
            config.scheme = scheme_from_name(j.at("scheme").get<std::string>());
        if (j.contains("schemes")) {
            config.schemes.clear();
            for (const auto& s : j.at("schemes"))
                config.schemes.push_back(scheme_from_name(s.get<std::string>()));
        }
        if (j.contains("degree")) config.degree = j.at("degree").get<int>();
        if (j.contains("meshes")) config.meshes = j.at("meshes").get<std::vector<int>>();
        if (j.contains("seed")) config.seed = j.at("seed").get<unsigned long long>();
        if (j.contains("perturb")) config.perturb = j.at("perturb").get<bool>();
        if (j.contains("out")) config.out = j.at("out").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    return config;
}

void validate_config(const StudyConfig& config) {
    find_problem(config.problem);
    if (config.meshes.empty()) throw ConfigError("mesh sequence is empty");
    for (std::size_t i = 0; i < config.meshes.size(); ++i) {
        if (config.meshes[i] < 1) throw ConfigError("mesh sizes must be positive");
        if (i > 0 && config.meshes[i] <= config.meshes[i - 1])
            throw ConfigError("mesh sequence must be strictly increasing");
    }
    if (config.perturb) {
        if (is_two_dimensional(config.problem))
            throw ConfigError("knot perturbation is defined for 1D problems");
        if (find_problem(config.problem).as_1d().problem.bc != BoundaryKind::dirichlet_homogeneous)
            throw ConfigError("knot perturbation applies to open knot vectors only");
    }
    validate_scheme_for(config, config.scheme);
}

ConvergenceStudy run_convergence(const StudyConfig& config) {
    validate_config(config);
    const ManufacturedProblem& mp = find_problem(config.problem);
    std::vector<ErrorReport> reports;
    std::mt19937_64 rng(config.seed);

    for (int n_el : config.meshes) {
        try {
            if (mp.is_1d()) {
                const auto& m = mp.as_1d();
                SplineSpace1D space =
                    m.problem.bc == BoundaryKind::periodic
                        ? SplineSpace1D::periodic_uniform(n_el, config.degree)
                        : (config.perturb
                               ? SplineSpace1D::open(perturb_knots(
                                     make_open_uniform(n_el, config.degree), rng))
                               : SplineSpace1D::open_uniform(n_el, config.degree));
                reports.push_back(error_norms(solve_level_1d(m, config.scheme, space), m));
            } else {
                const auto& m = mp.as_2d();
                reports.push_back(
                    error_norms(solve_level_2d(m, config.scheme, n_el, config.degree), m));
            }
        } catch (const NumericalError& e) {
            throw NumericalError("level n_el=" + std::to_string(n_el) + ": " + e.what());
        }
    }
    return convergence_rates(config.problem, config.scheme, config.degree,
                             std::move(reports));
}

ResidualData run_residual(const StudyConfig& config) {
    // the residual diagnostic always uses the Galerkin solution; the scheme
    // field is irrelevant here and not validated
    StudyConfig galerkin_config = config;
    galerkin_config.scheme = Scheme::galerkin;
    validate_config(galerkin_config);
    sp_reference_points(config.degree);  // surrogate overlay needs degree 3..7
    const ManufacturedProblem& mp = find_problem(config.problem);
    if (!mp.is_1d()) throw ConfigError("the residual command targets 1D problems");
    const auto& m = mp.as_1d();
    const int n_el = config.meshes.front();
    const SplineSpace1D space =
        m.problem.bc == BoundaryKind::periodic
            ? SplineSpace1D::periodic_uniform(n_el, config.degree)
            : SplineSpace1D::open_uniform(n_el, config.degree);
    const DiscreteSolution1D sol = solve_galerkin_1d(m.problem, space);

    ResidualData data;
    data.n_el = n_el;
    constexpr int kDense = 200;
    for (int e = 0; e < space.element_count(); ++e) {
        const auto [lo, hi] = space.element(e);
        for (int k = 0; k < kDense; ++k) {
            data.x.push_back(lo + (hi - lo) * (k + 0.5) / kDense);
            data.is_surrogate.push_back(false);
        }
    }
    for (double s : surrogate_sp_all(space)) {
        data.x.push_back(s);
        data.is_surrogate.push_back(true);
    }
    // order by position, surrogate flags travelling with their points
    std::vector<std::size_t> idx(data.x.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return data.x[a] < data.x[b]; });
    ResidualData sorted;
    sorted.n_el = n_el;
    for (std::size_t i : idx) {
        sorted.x.push_back(data.x[i]);
        sorted.is_surrogate.push_back(data.is_surrogate[i]);
    }
    const ResidualDiagnostics diag = residual_superconvergence(sol, m, sorted.x);
    sorted.residual = diag.samples;
    return sorted;
}

CompareData run_compare(const StudyConfig& config) {
    validate_config(config);
    CompareData data;
    data.schemes = compare_schemes(config);
    data.meshes = config.meshes;
    for (Scheme s : data.schemes) validate_scheme_for(config, s);

    bool first = true;
    for (Scheme s : data.schemes) {
        StudyConfig one = config;
        one.scheme = s;
        const ConvergenceStudy study = run_convergence(one);
        data.l2.emplace_back();
        for (const ErrorReport& r : study.levels) {
            data.l2.back().push_back(r.l2);
            if (first) data.h.push_back(r.h);
        }
        first = false;
    }
    return data;
}

void write_convergence_csv(const ConvergenceStudy& study, std::ostream& os) {
    os << "n_el,h,dof,L2,H1,H2,Linf,order_L2,order_H1\n";
    for (std::size_t i = 0; i < study.levels.size(); ++i) {
        const ErrorReport& r = study.levels[i];
        os << r.n_el << ',';
        print_double(os, r.h);
        os << ',' << r.dof << ',';
        print_double(os, r.l2);
        os << ',';
        print_double(os, r.h1);
        os << ',';
        if (std::isfinite(r.h2)) print_double(os, r.h2);
        os << ',';
        print_double(os, r.linf);
        os << ',';
        if (i > 0) print_double(os, study.step_order(Norm::l2, static_cast<int>(i) - 1));
        os << ',';
        if (i > 0) print_double(os, study.step_order(Norm::h1, static_cast<int>(i) - 1));
        os << '\n';
    }
}

void write_residual_csv(const ResidualData& data, std::ostream& os) {
    os << "x,residual,is_surrogate_point\n";
    for (std::size_t i = 0; i < data.x.size(); ++i) {
        print_double(os, data.x[i]);
        os << ',';
        print_double(os, data.residual[i]);
        os << ',' << (data.is_surrogate[i] ? 1 : 0) << '\n';
    }
}

void write_compare_csv(const CompareData& data, std::ostream& os) {
    os << "n_el,h";
    for (Scheme s : data.schemes) os << ",L2_" << scheme_name(s);
    os << '\n';
    for (std::size_t level = 0; level < data.meshes.size(); ++level) {
        os << data.meshes[level] << ',';
        print_double(os, data.h[level]);
        for (std::size_t s = 0; s < data.schemes.size(); ++s) {
            os << ',';
            print_double(os, data.l2[s][level]);
        }
        os << '\n';
    }
}

}  // namespace isocolloc
