#include "mapgerm/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "mapgerm/family.hpp"
#include "mapgerm/invariants.hpp"
#include "mapgerm/parser.hpp"
#include "mapgerm/unfoldings.hpp"

namespace mapgerm {

using Json = nlohmann::ordered_json;

namespace {

Json vectors_json(const std::vector<GermVector>& vs, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.to_string(names));
  return out;
}

Json codim_json(const CodimReport& r, const std::vector<std::string>& names) {
  return Json{{"value", r.value},
              {"status", to_string(r.status)},
              {"degree", r.truncation_degree},
              {"basis", vectors_json(r.complement_basis, names)}};
}

Json multiplicity_json(const CodimReport& r, const std::vector<std::string>& names) {
  Json basis = Json::array();
  for (const auto& v : r.complement_basis) basis.push_back(v[0].to_string(names));
  return Json{{"value", r.value}, {"status", to_string(r.status)}, {"degree", r.truncation_degree}, {"basis", basis}};
}

Json opsu_json(const MapGerm& f, const ComputeOptions& opts) {
  const OpsuVerdict v = opsu(f, opts);
  Json out{{"value", to_string(v.admits)},
           {"status", "certified"},
           {"admits", to_string(v.admits)},
           {"nf_dimension", v.nf_dimension}};
  if (v.witness) {
    out["witness"] = to_string(*v.witness);
    out["witness_stable"] = verify_stable(*v.witness, opts);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json unfolding_json(const Unfolding& u, const ComputeOptions& opts) {
  return Json{{"value", u.parameters.size()},
              {"status", "certified"},
              {"parameters", u.parameters},
              {"witness", to_string(u)},
              {"basis", vectors_json(u.velocities, u.base.source_names())},
              {"stable", verify_stable(u, opts)}};
}

Json nf_json(const MapGerm& f, const ComputeOptions& opts) {
  const NfReport nf = nf_space(f, opts);
  return Json{{"value", nf.dimension},
              {"status", "certified"},
              {"degree", nf.truncation_degree},
              {"basis", vectors_json(nf.basis, f.source_names())},
              {"ke_codim", nf.ke_codim},
              {"c", nf.c_value}};
}

Json c_json(const MapGerm& f, const ComputeOptions& opts) {
  const ConstantFieldCount c = c_of_f(f, opts);
  return Json{{"value", c.dimension}, {"status", "certified"}, {"literal_count", c.literal_count}};
}

Json corank_json(const MapGerm& f) {
  return Json{{"value", corank(f)}, {"status", "exact"}, {"rank", f.jacobian_at_origin().rank()}};
}

Json mather_json(const MapGerm& f, const ComputeOptions& opts) {
  const Unfolding u = mather_unfolding(f, opts);
  Json out = unfolding_json(u, opts);
  out["rank"] = f.jacobian_at_origin().rank();
  return out;
}

Json normal_form_json(const MapGerm& f, const ComputeOptions& opts) {
  const VersalNormalForm nf = opsu_normal_form(f, opts);
  Json multipliers = Json::array();
  for (const auto& p : nf.multipliers) multipliers.push_back(p.to_string(f.target_names()));
  return Json{{"value", nf.multipliers.size() + 1},
              {"status", "heuristic"},
              {"degree", nf.working_degree},
              {"witness", to_string(nf.opsu)},
              {"versal", to_string(nf.versal)},
              {"gamma_1", nf.gamma_1.to_string(f.source_names())},
              {"basis", vectors_json(nf.gammas, f.source_names())},
              {"multipliers", multipliers},
              {"opsu_stable", verify_stable(nf.opsu, opts)},
              {"versal_stable", verify_stable(nf.versal, opts)}};
}

Json marar_tari_json(const MapGerm& f, const RunConfig& config) {
  const PQPair pq = extract_pq(f);
  const std::vector<std::string> xy(f.source_names().begin(), f.source_names().begin() + 2);
  const Calibration& cal = calibration(config.compute);
  const GenerationRule used =
      config.marar_tari_mode == GenerationRule::automatic ? cal.chosen : config.marar_tari_mode;
  const CodimReport ge = ge_codim(pq, used, config.compute);
  const CodimReport ae = ae_codim(f, config.compute);

  Json entries = Json::array();
  bool reproduced = false;
  for (const auto& e : cal.entries) {
    entries.push_back(Json{{"mode", to_string(e.rule)},
                           {"example_value", e.example_value ? Json(*e.example_value) : Json(nullptr)},
                           {"reproduces_example", e.reproduces_example},
                           {"cross_validates", e.cross_validates}});
    if (e.rule == cal.chosen) reproduced = e.reproduces_example;
  }
  Json out = codim_json(ge, xy);
  out["P"] = pq.P.to_string(xy);
  out["Q"] = pq.Q.to_string(xy);
  out["mode"] = to_string(used);
  out["calibration"] = Json{{"chosen", to_string(cal.chosen)},
                            {"target_value", cal.target_value},
                            {"target_reproduced", reproduced},
                            {"entries", entries}};
  out["ae_codim"] = Json{{"value", ae.value}, {"status", to_string(ae.status)}, {"degree", ae.truncation_degree}};
  if (ge.status != CertStatus::inconclusive && ae.status != CertStatus::inconclusive)
    out["agrees_with_ae"] = ge.value == ae.value;
  return out;
}

Json family_json(const RunConfig& config) {
  FamilyOptions options;
  options.compute = config.compute;
  const ScanReport report = scan(config.p_values, config.samples, config.seed, options);
  const std::vector<std::string> names{"x", "y", "z"};
  Json rows = Json::array();
  for (const auto& s : report.rows) {
    const auto& r = s.report;
    rows.push_back(Json{
        {"p", s.p},
        {"seed", s.seed},
        {"phi", s.phi.to_string(names)},
        {"multiplicity", Json{{"value", r.multiplicity.value}, {"status", to_string(r.multiplicity.status)}}},
        {"ke_codim", Json{{"value", r.ke_codim.value}, {"status", to_string(r.ke_codim.status)}}},
        {"nf_dimension", r.nf_dimension ? Json(*r.nf_dimension) : Json(nullptr)},
        {"opsu", r.opsu ? Json(to_string(r.opsu->admits)) : Json(nullptr)},
        {"ae_codim",
         Json{{"value", r.ae_codim.value},
              {"status", to_string(r.ae_codim.status)},
              {"degree", r.ae_codim.truncation_degree}}},
        {"passes", s.passes_screens()},
        {"passes_with_ae", s.passes_with_ae()},
        {"notes", r.notes}});
  }
  Json summary = Json::array();
  for (const auto& s : report.summary)
    summary.push_back(Json{{"p", s.p},
                           {"samples", s.samples},
                           {"passing", s.passing},
                           {"passing_with_ae", s.passing_with_ae}});
  return Json{{"seed", config.seed}, {"rows", rows}, {"summary", summary}};
}

using Handler = std::function<Json(const MapGerm&, const RunConfig&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"ke-codim", [](const MapGerm& f, const RunConfig& c) { return codim_json(ke_codim(f, c.compute), f.source_names()); }},
      {"ae-codim", [](const MapGerm& f, const RunConfig& c) { return codim_json(ae_codim(f, c.compute), f.source_names()); }},
      {"nf", [](const MapGerm& f, const RunConfig& c) { return nf_json(f, c.compute); }},
      {"c", [](const MapGerm& f, const RunConfig& c) { return c_json(f, c.compute); }},
      {"opsu", [](const MapGerm& f, const RunConfig& c) { return opsu_json(f, c.compute); }},
      {"minimal-unfolding",
       [](const MapGerm& f, const RunConfig& c) { return unfolding_json(minimal_stable_unfolding(f, c.compute), c.compute); }},
      {"mather", [](const MapGerm& f, const RunConfig& c) { return mather_json(f, c.compute); }},
      {"opsu-normal-form", [](const MapGerm& f, const RunConfig& c) { return normal_form_json(f, c.compute); }},
      {"marar-tari", [](const MapGerm& f, const RunConfig& c) { return marar_tari_json(f, c); }},
      {"multiplicity",
       [](const MapGerm& f, const RunConfig& c) { return multiplicity_json(multiplicity(f, c.compute), f.source_names()); }},
      {"corank", [](const MapGerm& f, const RunConfig&) { return corank_json(f); }},
  };
  return table;
}

struct Section {
  Json body;
  int exit_code = kExitSuccess;
};

Section guarded(const std::function<Json()>& body) {
  try {
    return {body(), kExitSuccess};
  } catch (const InconclusiveError& e) {
    return {Json{{"status", "inconclusive"}, {"error", e.what()}}, kExitInconclusive};
  } catch (const std::exception& e) {
    return {Json{{"status", "error"}, {"error", e.what()}}, kExitError};
  }
}

int code_for(const Json& body) {
  if (body.contains("status") && body["status"] == "inconclusive") return kExitInconclusive;
  if (body.contains("status") && body["status"] == "error") return kExitError;
  return kExitSuccess;
}

void validate(const RunConfig& config, const MapGerm* f) {
  if (config.compute.ae_plateau < 2) throw std::invalid_argument("--plateau must be at least 2");
  if (f && config.compute.max_degree < f->degree())
    throw std::invalid_argument("--max-degree " + std::to_string(config.compute.max_degree) +
                                " is below the degree " + std::to_string(f->degree()) + " of the germ");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "analyze",      "ke-codim",         "ae-codim", "nf",         "c",      "opsu",       "minimal-unfolding",
      "mather",       "opsu-normal-form", "marar-tari", "multiplicity", "corank", "family-scan"};
  return names;
}

CommandResult run_command(const std::string& command, const std::string& germ_text, const RunConfig& config) {
  CommandResult result;
  Json& out = result.report;
  out["schema"] = kSchemaVersion;
  out["command"] = command;

  if (std::find(command_names().begin(), command_names().end(), command) == command_names().end()) {
    out["status"] = "error";
    out["error"] = "unknown command '" + command + "'";
    result.exit_code = kExitError;
    return result;
  }

  if (command == "family-scan") {
    Section s = guarded([&] {
      validate(config, nullptr);
      return family_json(config);
    });
    out.update(s.body);
    result.exit_code = s.exit_code;
    return result;
  }

  std::optional<MapGerm> germ;
  Section parsed = guarded([&] {
    GermExpression e = parse_germ(germ_text, config.variables);
    validate(config, &e.germ);
    germ = std::move(e.germ);
    return Json::object();
  });
  if (!germ) {
    out.update(parsed.body);
    result.exit_code = parsed.exit_code;
    return result;
  }
  const MapGerm& f = *germ;
  out["germ"] = f.to_string();

  if (command == "analyze") {
    int code = kExitSuccess;
    auto run = [&](const std::string& key, const std::function<Json()>& body) {
      Section s = guarded(body);
      const int c = code_for(s.body);
      code = (c == kExitError || code == kExitError) ? kExitError : std::max(code, c);
      out[key] = std::move(s.body);
    };
    run("corank", [&] { return corank_json(f); });
    run("multiplicity", [&] { return multiplicity_json(multiplicity(f, config.compute), f.source_names()); });
    run("ke_codim", [&] { return codim_json(ke_codim(f, config.compute), f.source_names()); });
    run("c", [&] { return c_json(f, config.compute); });
    run("nf", [&] { return nf_json(f, config.compute); });
    run("ae_codim", [&] { return codim_json(ae_codim(f, config.compute), f.source_names()); });
    run("opsu", [&] { return opsu_json(f, config.compute); });
    run("minimal_unfolding", [&] { return unfolding_json(minimal_stable_unfolding(f, config.compute), config.compute); });
    result.exit_code = code;
    return result;
  }

  Section s = guarded([&] { return handlers().at(command)(f, config); });
  out.update(s.body);
  result.exit_code = s.exit_code == kExitSuccess ? code_for(s.body) : s.exit_code;
  return result;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render_text(const Json& node, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : node.items()) {
    if (key == "schema") continue;
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(value, indent + 2, os);
    } else if (value.is_array()) {
      if (value.empty()) {
        os << pad << key << ": []\n";
        continue;
      }
      os << pad << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          std::ostringstream inner;
          render_text(item, indent + 4, inner);
          std::string block = inner.str();
          block.replace(static_cast<std::size_t>(indent) + 2, 2, "- ");
          os << block;
        } else {
          os << pad << "  - " << scalar_text(item) << "\n";
        }
      }
    } else {
      os << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

std::string family_table(const Json& report) {
  std::ostringstream os;
  os << "p  seed                  mult  ke  nf  opsu  ae                pass\n";
  for (const auto& row : report["rows"]) {
    std::string ae = row["ae_codim"]["value"].dump() + " (" + row["ae_codim"]["status"].get<std::string>() + ")";
    char line[160];
    std::snprintf(line, sizeof line, "%-2s %-21s %-5s %-3s %-3s %-5s %-17s %s\n", row["p"].dump().c_str(),
                  row["seed"].dump().c_str(), row["multiplicity"]["value"].dump().c_str(),
                  row["ke_codim"]["value"].dump().c_str(), scalar_text(row["nf_dimension"]).c_str(),
                  scalar_text(row["opsu"]).c_str(), ae.c_str(), row["passes"].get<bool>() ? "yes" : "no");
    os << line;
  }
  os << "summary:\n";
  for (const auto& s : report["summary"])
    os << "  p=" << s["p"].dump() << ": " << s["passing"].dump() << "/" << s["samples"].dump()
       << " pass the screens, " << s["passing_with_ae"].dump() << " also with a stabilized A_e-codimension\n";
  return os.str();
}

}  // namespace

std::string render(const CommandResult& result, OutputFormat format) {
  if (format == OutputFormat::json) return result.report.dump(2) + "\n";
  const Json& r = result.report;
  if (r.value("command", "") == "family-scan" && r.contains("rows")) {
    return "command: family-scan\nseed: " + r["seed"].dump() + "\n" + family_table(r);
  }
  std::ostringstream os;
  render_text(r, 0, os);
  return os.str();
}

}  // namespace mapgerm
