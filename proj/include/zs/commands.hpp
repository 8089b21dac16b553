#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zs/graph.hpp"

namespace zs {

inline constexpr const char* kToolVersion = "0.1.0";

/// Bad parameters; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds the graph named by params["graph"]: either {"file": path} or
/// {"family": name, "params": [..], "seed": s}.
Graph graphFromParams(const nlohmann::json& graph);

/// Runs one command from its full parameter record and returns
/// {"manifest": ..., "result": ...}. Recognised commands: gen, solve,
/// zombie-number, cop-number, simulate, formulas.
/// Throws UsageError on bad parameters and BudgetExceeded when a solver is
/// over budget.
nlohmann::json runCommand(const nlohmann::json& params);

/// FNV-1a over the canonical dump of `result` with timing fields removed.
std::string resultDigest(const nlohmann::json& result);

/// Re-runs the parameter record of a saved {"manifest", "result"} document and
/// compares digests.
struct ReplayCheck {
  bool match = false;
  std::string expected;
  std::string actual;
};
ReplayCheck replayManifest(const nlohmann::json& document);

}  // namespace zs
