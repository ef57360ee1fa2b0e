#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "isocolloc/analysis.hpp"
#include "isocolloc/assembly.hpp"
#include "isocolloc/errors.hpp"
#include "isocolloc/point_selection.hpp"
#include "isocolloc/problems.hpp"
#include "isocolloc/study.hpp"

namespace py = pybind11;
using namespace isocolloc;

namespace {

SplineSpace1D make_space(int n_el, int degree, bool periodic) {
    return periodic ? SplineSpace1D::periodic_uniform(n_el, degree)
                    : SplineSpace1D::open_uniform(n_el, degree);
}

py::dict report_to_dict(const ErrorReport& r) {
    py::dict d;
    d["n_el"] = r.n_el;
    d["h"] = r.h;
    d["dof"] = r.dof;
    d["L2"] = r.l2;
    d["H1"] = r.h1;
    d["H2"] = r.h2;
    d["Linf"] = r.linf;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Isogeometric collocation with superconvergent-point selections";

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    m.def("open_uniform_knots", [](int n_el, int degree) {
        const KnotVector kv = make_open_uniform(n_el, degree);
        return std::vector<double>(kv.knots().begin(), kv.knots().end());
    }, py::arg("n_el"), py::arg("degree"),
       "Open uniform knot vector on [0, 1].");

    m.def("basis_values",
          [](int n_el, int degree, double x, int max_order, bool periodic) {
              const SplineSpace1D space = make_space(n_el, degree, periodic);
              const BasisSpan bs = space.basis(x, max_order);
              std::vector<std::vector<double>> table(
                  static_cast<std::size_t>(max_order + 1));
              for (int d = 0; d <= max_order; ++d)
                  for (int j = 0; j < bs.count; ++j)
                      table[static_cast<std::size_t>(d)].push_back(bs.value(d, j));
              return py::make_tuple(bs.first_index, table);
          },
          py::arg("n_el"), py::arg("degree"), py::arg("x"), py::arg("max_order") = 0,
          py::arg("periodic") = false,
          "(first_index, values[order][local]) of the nonzero basis functions at x.");

    m.def("greville_points", [](int n_el, int degree, bool periodic) {
        return make_space(n_el, degree, periodic).greville_points();
    }, py::arg("n_el"), py::arg("degree"), py::arg("periodic") = false);

    m.def("superconvergent_points", [](int n_el, int degree, bool periodic) {
        return surrogate_sp_all(make_space(n_el, degree, periodic));
    }, py::arg("n_el"), py::arg("degree"), py::arg("periodic") = false,
       "All surrogate superconvergent points, deduplicated.");

    m.def("collocation_points",
          [](const std::string& scheme, int n_el, int degree, bool periodic) {
              const SplineSpace1D space = make_space(n_el, degree, periodic);
              const Scheme s = scheme_from_name(scheme);
              CollocationSet1D cs;
              switch (s) {
                  case Scheme::gp: cs = select_gp(space); break;
                  case Scheme::lssp: cs = select_lssp(space); break;
                  case Scheme::asp: cs = select_asp(space); break;
                  case Scheme::csp: cs = select_csp(space); break;
                  case Scheme::csp_sym: cs = select_csp(space, true); break;
                  default:
                      throw InvalidArgument("no collocation points for scheme " + scheme);
              }
              py::dict d;
              d["points"] = cs.points;
              d["averaging_groups"] = cs.averaging_groups;
              d["equations"] = cs.equation_count();
              return d;
          },
          py::arg("scheme"), py::arg("n_el"), py::arg("degree"),
          py::arg("periodic") = false);

    m.def("problems", [] {
        std::vector<std::string> names;
        for (const auto& mp : manufactured_registry()) names.push_back(mp.name);
        return names;
    });

    m.def("solve_errors",
          [](const std::string& problem, const std::string& scheme, int degree, int n_el) {
              StudyConfig config;
              config.problem = problem;
              config.scheme = scheme_from_name(scheme);
              config.degree = degree;
              config.meshes = {n_el};
              const ConvergenceStudy study = run_convergence(config);
              return report_to_dict(study.levels.front());
          },
          py::arg("problem"), py::arg("scheme"), py::arg("degree"), py::arg("n_el"),
          "Error norms of one solve of a registry problem.");

    m.def("convergence_study",
          [](const std::string& problem, const std::string& scheme, int degree,
             const std::vector<int>& meshes, unsigned long long seed, bool perturb) {
              StudyConfig config;
              config.problem = problem;
              config.scheme = scheme_from_name(scheme);
              config.degree = degree;
              config.meshes = meshes;
              config.seed = seed;
              config.perturb = perturb;
              const ConvergenceStudy study = run_convergence(config);
              py::list levels;
              for (const auto& r : study.levels) levels.append(report_to_dict(r));
              py::dict d;
              d["levels"] = levels;
              d["tail_order_L2"] = study.tail_order(Norm::l2);
              d["tail_order_H1"] = study.tail_order(Norm::h1);
              d["tail_order_Linf"] = study.tail_order(Norm::linf);
              return d;
          },
          py::arg("problem"), py::arg("scheme"), py::arg("degree"), py::arg("meshes"),
          py::arg("seed") = 1, py::arg("perturb") = false,
          "Run a refinement study; returns per-level errors and tail orders.");

    m.def("residual_samples",
          [](const std::string& problem, int degree, int n_el) {
              StudyConfig config;
              config.problem = problem;
              config.degree = degree;
              config.meshes = {n_el};
              const ResidualData data = run_residual(config);
              py::dict d;
              d["x"] = data.x;
              d["residual"] = data.residual;
              std::vector<int> flags(data.is_surrogate.begin(), data.is_surrogate.end());
              d["is_surrogate_point"] = flags;
              return d;
          },
          py::arg("problem"), py::arg("degree"), py::arg("n_el"),
          "Galerkin residual samples plus surrogate superconvergent points.");
}
