#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "mapgerm/commands.hpp"
#include "mapgerm/parser.hpp"

namespace {

const std::map<std::string, std::string> kDescriptions = {
    {"analyze", "Run every invariant and decision on a germ"},
    {"ke-codim", "K_e-codimension"},
    {"ae-codim", "A_e-codimension (heuristic plateau)"},
    {"nf", "The space N(f) and its dimension"},
    {"c", "Contribution c(f) of the constant vector fields"},
    {"opsu", "Decide whether the germ admits a one-parameter stable unfolding"},
    {"minimal-unfolding", "Minimal stable unfolding from the N(f) basis"},
    {"mather", "Mather's stable unfolding from the rank-0 core"},
    {"opsu-normal-form", "OPSU and versal unfolding in normal form"},
    {"marar-tari", "G_e-codimension of a (x, y, z^4+P*z+Q*z^2) preform"},
    {"multiplicity", "Local algebra dimension dim O_n / f^*m_p"},
    {"corank", "Corank of the differential at the origin"},
    {"family-scan", "Random family f_p = (x, y, z^4 + phi_p) screening"},
};

std::vector<unsigned> parse_p_list(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& item : mapgerm::split_names(text)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw CLI::ValidationError("--p", "expected a list like 5,6,7");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Map-germ invariants, stable unfoldings and OPSU decisions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  unsigned max_degree = 14;
  unsigned plateau = 3;
  std::uint64_t seed = 0;
  std::string vars;
  std::string out_path;
  std::string mode = "auto";
  std::string p_list = "5,6,7";
  std::size_t samples = 5;
  std::string germ_text;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", max_degree, "Jet degree cap for escalating computations");
  app.add_option("--plateau", plateau, "Consecutive equal values needed for an A_e plateau");
  app.add_option("--seed", seed, "Seed for family-scan");
  app.add_option("--vars", vars, "Source variable order, e.g. x,y,z");
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_option("--mode", mode, "Marar-Tari generation rule")
      ->check(CLI::IsMember({"auto", "all_module", "mixed"}));

  for (const auto& name : mapgerm::command_names()) {
    CLI::App* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->fallthrough();
    if (name == "family-scan") {
      sub->add_option("--p", p_list, "Comma-separated degrees p >= 5");
      sub->add_option("--samples", samples, "Samples per degree");
    } else {
      sub->add_option("germ", germ_text, "Germ such as \"(x, y^4+x*y)\"")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? mapgerm::kExitSuccess : mapgerm::kExitError;
  }

  mapgerm::RunConfig config;
  config.compute.max_degree = max_degree;
  config.compute.ae_plateau = plateau;
  config.seed = seed;
  config.format = format == "json" ? mapgerm::OutputFormat::json : mapgerm::OutputFormat::text;
  config.variables = mapgerm::split_names(vars);
  config.marar_tari_mode = mapgerm::parse_generation_rule(mode);
  config.samples = samples;
  try {
    config.p_values = parse_p_list(p_list);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mapgerm::kExitError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const mapgerm::CommandResult result = mapgerm::run_command(command, germ_text, config);
  const std::string rendered = mapgerm::render(result, config.format);

  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return mapgerm::kExitError;
    }
    file << rendered;
  }
  const bool echoed = out_path.empty() && config.format == mapgerm::OutputFormat::text;
  if (!echoed && result.report.contains("error")) std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}
