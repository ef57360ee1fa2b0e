#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isocolloc/errors.hpp"
#include "isocolloc/study.hpp"

namespace isocolloc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::vector<int> parse_meshes(const std::string& list) {
    std::vector<int> meshes;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            meshes.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ConfigError("bad mesh list entry '" + tok + "'");
        }
    }
    if (meshes.empty()) throw ConfigError("empty mesh list");
    return meshes;
}

std::string default_out_name(const StudyConfig& config, const std::string& command) {
    return config.problem + "_" + scheme_name(config.scheme) + "_p" +
           std::to_string(config.degree) + "_" + command + ".csv";
}

struct CliOptions {
    std::string config_path;
    std::string problem, scheme, schemes, meshes, out;
    int degree = -1;
    long long seed = -1;
    bool perturb = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON config file");
    cmd->add_option("--problem", opt.problem, "registry problem name");
    cmd->add_option("--scheme", opt.scheme, "gp|asp|csp|csp-sym|lssp|galerkin");
    cmd->add_option("--degree", opt.degree, "spline degree");
    cmd->add_option("--meshes", opt.meshes, "comma-separated element counts");
    cmd->add_option("--seed", opt.seed, "seed for perturbation draws");
    cmd->add_flag("--perturb", opt.perturb, "perturb interior knots each level");
    cmd->add_option("--out", opt.out, "output CSV path");
}

StudyConfig build_config(const CliOptions& opt, const std::string& command) {
    StudyConfig config;
    if (!opt.config_path.empty()) config = load_config_file(opt.config_path);
    if (!opt.problem.empty()) config.problem = opt.problem;
    if (!opt.scheme.empty()) config.scheme = scheme_from_name(opt.scheme);
    if (!opt.schemes.empty()) {
        config.schemes.clear();
        std::stringstream ss(opt.schemes);
        std::string tok;
        while (std::getline(ss, tok, ',')) config.schemes.push_back(scheme_from_name(tok));
    }
    if (opt.degree > 0) config.degree = opt.degree;
    if (!opt.meshes.empty()) config.meshes = parse_meshes(opt.meshes);
    if (opt.seed >= 0) config.seed = static_cast<unsigned long long>(opt.seed);
    if (opt.perturb) config.perturb = true;
    if (!opt.out.empty()) config.out = opt.out;
    if (config.out.empty()) config.out = default_out_name(config, command);
    return config;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);  // LF line endings everywhere
    if (!os) throw ConfigError("cannot write output file '" + path + "'");
    return os;
}

void print_summary(const ConvergenceStudy& study) {
    std::printf("# %s  scheme=%s  p=%d\n", study.problem.c_str(),
                scheme_name(study.scheme).c_str(), study.degree);
    std::printf("%8s %12s %12s %12s %12s\n", "n_el", "L2", "H1", "Linf", "order_L2");
    for (std::size_t i = 0; i < study.levels.size(); ++i) {
        const ErrorReport& r = study.levels[i];
        if (i == 0)
            std::printf("%8d %12.4e %12.4e %12.4e %12s\n", r.n_el, r.l2, r.h1, r.linf, "-");
        else
            std::printf("%8d %12.4e %12.4e %12.4e %12.3f\n", r.n_el, r.l2, r.h1, r.linf,
                        study.step_order(Norm::l2, static_cast<int>(i) - 1));
    }
    std::printf("tail orders: L2 %.3f  H1 %.3f  Linf %.3f\n", study.tail_order(Norm::l2),
                study.tail_order(Norm::h1), study.tail_order(Norm::linf));
}

int run_command(const std::string& command, const CliOptions& opt) {
    const StudyConfig config = build_config(opt, command);
    if (command == "convergence") {
        const ConvergenceStudy study = run_convergence(config);
        auto os = open_out(config.out);
        write_convergence_csv(study, os);
        print_summary(study);
    } else if (command == "residual") {
        const ResidualData data = run_residual(config);
        auto os = open_out(config.out);
        write_residual_csv(data, os);
        std::printf("# residual samples: %zu (mesh %d)\n", data.x.size(), data.n_el);
    } else {
        const CompareData data = run_compare(config);
        auto os = open_out(config.out);
        write_compare_csv(data, os);
        std::printf("# compared %zu schemes on %zu levels\n", data.schemes.size(),
                    data.meshes.size());
    }
    std::printf("wrote %s\n", config.out.c_str());
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"isogeometric collocation convergence benchmarks"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* conv = app.add_subcommand("convergence", "mesh-refinement error study");
    add_common_flags(conv, opt);
    CLI::App* resid = app.add_subcommand("residual",
                                         "Galerkin residual samples with surrogate points");
    add_common_flags(resid, opt);
    CLI::App* comp = app.add_subcommand("compare", "one L2 error column per scheme");
    add_common_flags(comp, opt);
    comp->add_option("--schemes", opt.schemes, "comma-separated scheme list");

    // CLI11 wants argv-style reversed arguments
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const std::string command = conv->parsed()    ? "convergence"
                                : resid->parsed() ? "residual"
                                                  : "compare";
    return run_with_exit_codes([&] { return run_command(command, opt); });
}

int run_with_exit_codes(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InvalidArgument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace isocolloc
