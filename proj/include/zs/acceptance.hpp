#pragma once

#include <string>
#include <vector>

namespace zs {

struct AcceptanceRow {
  std::string quantity;
  std::string computed;
  std::string expected;
  bool pass = true;
};

struct CriterionResult {
  int id = 0;
  std::string group;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
  std::vector<AcceptanceRow> rows;
};

struct AcceptanceOptions {
  /// Group name ("cycles", "hypercube", "grids", "projective", "sandwich",
  /// "montecarlo", "torus", "leafy", "determinism") or criterion number; empty
  /// runs everything.
  std::string only;
  unsigned threads = 0;
  /// Mutation check: run the exact solver with zombies allowed to stay put.
  bool lazy_zombies = false;
};

std::vector<std::string> acceptanceGroups();

/// Runs the selected criteria in order. A criterion also fails when it exceeds
/// its runtime budget.
std::vector<CriterionResult> runAcceptance(const AcceptanceOptions& options);

/// "criterion,quantity,computed,expected,pass" rows.
std::string acceptanceCsv(const std::vector<CriterionResult>& results);

}  // namespace zs
