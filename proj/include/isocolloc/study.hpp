#ifndef ISOCOLLOC_STUDY_HPP
#define ISOCOLLOC_STUDY_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "isocolloc/analysis.hpp"

namespace isocolloc {

/** One named study: a problem from the registry, a scheme, a degree, and a
 *  mesh sequence. Loaded from a flat JSON object; command-line flags override
 *  file values.
 */
struct StudyConfig {
    std::string problem = "p1-dirichlet";
    Scheme scheme = Scheme::csp;
    std::vector<Scheme> schemes;  // compare command; empty = all five
    int degree = 3;
    std::vector<int> meshes = {8, 16, 32, 64};
    unsigned long long seed = 1;
    bool perturb = false;
    std::string out;
};

StudyConfig load_config_file(const std::string& path);

/// Scheme/degree/mesh compatibility checks shared by all commands.
void validate_config(const StudyConfig& config);

ConvergenceStudy run_convergence(const StudyConfig& config);

struct ResidualData {
    int n_el = 0;
    std::vector<double> x;
    std::vector<double> residual;
    std::vector<bool> is_surrogate;
};

/// Galerkin residual D^2(u - u_h) densely sampled (200 points per element)
/// plus the surrogate superconvergent points, on the first configured mesh.
ResidualData run_residual(const StudyConfig& config);

struct CompareData {
    std::vector<Scheme> schemes;
    std::vector<int> meshes;
    std::vector<double> h;
    std::vector<std::vector<double>> l2;  // [scheme][level]
};

CompareData run_compare(const StudyConfig& config);

void write_convergence_csv(const ConvergenceStudy& study, std::ostream& os);
void write_residual_csv(const ResidualData& data, std::ostream& os);
void write_compare_csv(const CompareData& data, std::ostream& os);

/// Runs `body` and maps exceptions to process exit codes: 0 ok,
/// 2 configuration error, 3 numerical failure.
int run_with_exit_codes(const std::function<int()>& body);

/// Full command-line driver; returns the process exit code
/// (0 ok, 2 configuration error, 3 numerical failure).
int cli_main(const std::vector<std::string>& args);

}  // namespace isocolloc

#endif
