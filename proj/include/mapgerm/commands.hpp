#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mapgerm/codim_report.hpp"
#include "mapgerm/marar_tari.hpp"

namespace mapgerm {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { text, json };

struct RunConfig {
  ComputeOptions compute;
  GenerationRule marar_tari_mode = GenerationRule::automatic;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::text;
  /// Declared source variables; inferred from the input when empty.
  std::vector<std::string> variables;
  std::vector<unsigned> p_values{5, 6, 7};
  std::size_t samples = 5;
};

struct CommandResult {
  int exit_code = kExitSuccess;
  nlohmann::ordered_json report;
};

/// Every command accepted by run_command, in help order.
const std::vector<std::string>& command_names();

/// Runs one command. Never throws: failures become an "error" field and
/// exit code 1, inconclusive results exit code 2.
CommandResult run_command(const std::string& command, const std::string& germ_text, const RunConfig& config);

/// JSON (pretty-printed) or the equivalent indented text.
std::string render(const CommandResult& result, OutputFormat format);

}  // namespace mapgerm
