#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mapgerm/commands.hpp"
#include "mapgerm/parser.hpp"

namespace py = pybind11;
using namespace mapgerm;

namespace {

RunConfig make_config(unsigned max_degree, unsigned plateau, const std::vector<std::string>& vars,
                      const std::string& mode, std::uint64_t seed, const std::vector<unsigned>& p_values,
                      std::size_t samples) {
  RunConfig config;
  config.compute.max_degree = max_degree;
  config.compute.ae_plateau = plateau;
  config.variables = vars;
  config.marar_tari_mode = parse_generation_rule(mode);
  config.seed = seed;
  config.p_values = p_values;
  config.samples = samples;
  return config;
}

}  // namespace

PYBIND11_MODULE(_mapgerm, m) {
  m.doc() = "Exact computations on smooth map germs";
  m.attr("EXIT_SUCCESS") = kExitSuccess;
  m.attr("EXIT_ERROR") = kExitError;
  m.attr("EXIT_INCONCLUSIVE") = kExitInconclusive;
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def("commands", &command_names);

  m.def(
      "run_command",
      [](const std::string& command, const std::string& germ, unsigned max_degree, unsigned plateau,
         const std::vector<std::string>& vars, const std::string& mode, std::uint64_t seed,
         const std::vector<unsigned>& p_values, std::size_t samples) {
        RunConfig config = make_config(max_degree, plateau, vars, mode, seed, p_values, samples);
        CommandResult result;
        {
          py::gil_scoped_release release;
          result = run_command(command, germ, config);
        }
        return py::make_tuple(result.exit_code, result.report.dump());
      },
      py::arg("command"), py::arg("germ") = "", py::arg("max_degree") = ComputeOptions{}.max_degree,
      py::arg("plateau") = ComputeOptions{}.ae_plateau, py::arg("vars") = std::vector<std::string>{},
      py::arg("mode") = "auto", py::arg("seed") = 0, py::arg("p_values") = std::vector<unsigned>{5, 6, 7},
      py::arg("samples") = 5,
      "Run one command; returns (exit_code, JSON report string).");

  m.def(
      "render_text",
      [](int exit_code, const std::string& report) {
        CommandResult result{exit_code, nlohmann::ordered_json::parse(report)};
        return render(result, OutputFormat::text);
      },
      py::arg("exit_code"), py::arg("report"));

  m.def(
      "parse",
      [](const std::string& text, const std::vector<std::string>& vars) {
        try {
          const GermExpression e = parse_germ(text, vars);
          return py::make_tuple(e.germ.to_string(), e.variables);
        } catch (const std::invalid_argument& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("text"), py::arg("vars") = std::vector<std::string>{},
      "Parse a germ; returns (canonical text, source variables).");
}
