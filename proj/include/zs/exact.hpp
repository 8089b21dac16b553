#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zs/engine.hpp"
#include "zs/graph.hpp"
#include "zs/multiset.hpp"

namespace zs {

struct ExactOptions {
  double tol = 1e-12;
  std::uint64_t max_iters = 1'000'000;
  unsigned threads = 1;  // 0 = hardware concurrency; results do not depend on it
  std::uint64_t state_budget = 50'000'000;
  /// Solve the 0/1 states by graph analysis before iterating. Turning it off
  /// leaves plain value iteration from below.
  bool qualitative = true;
  /// Mutation-testing hook: zombies may also stay put (uniform over options
  /// plus staying). Not the game; used to check that oracles catch a broken law.
  bool lazy_zombies = false;
};

/// Capture probabilities under optimal survivor play, indexed by
/// (zombie multiset rank, survivor vertex). States with a zombie on the
/// survivor have value 1.
class ValueTable {
 public:
  ValueTable(std::size_t n, std::size_t k, std::vector<double> values);

  std::size_t order() const { return index_.n(); }
  std::size_t zombies() const { return index_.k(); }
  const MultisetIndex& index() const { return index_; }
  std::uint64_t stateCount() const { return values_.size(); }

  double captureProbability(std::span<const Vertex> sorted_zombies, Vertex survivor) const;
  double at(std::uint64_t multiset_rank, Vertex survivor) const {
    return values_[multiset_rank * order() + survivor];
  }
  const std::vector<double>& values() const { return values_; }

  std::uint64_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
  std::uint64_t certain_escape = 0;   // states solved to exactly 0
  std::uint64_t certain_capture = 0;  // non-terminal states solved to exactly 1
  std::string graph_hash;
  double tol = 0.0;

  /// Binary cache keyed by (graph hash, k, tol).
  void save(const std::string& path) const;
  static ValueTable load(const std::string& path);

 private:
  MultisetIndex index_;
  std::vector<double> values_;
};

/// Least fixed point of the min-reachability Bellman operator (zombies move at
/// random, capture check, survivor picks the move minimising capture).
/// Throws BudgetExceeded when the state count exceeds options.state_budget.
ValueTable captureValueTable(const Graph& g, std::size_t k, const ExactOptions& options = {});

/// Bellman operator applied once to `values` at one state; exposed for
/// fixed-point residual checks.
double bellmanValue(const Graph& g, const ValueTable& table, std::span<const Vertex> zombies,
                    Vertex survivor);

struct SkResult {
  std::size_t k = 0;
  double s_k = 0.0;
  std::string method;  // "exact-mdp" or "combinatorial"
  double residual = 0.0;
  bool converged = true;
};

/// s_k = n^-k * sum over ordered placements of max over starts of survival.
SkResult skFromTable(const ValueTable& table);
SkResult skExact(const Graph& g, std::size_t k, const ExactOptions& options = {});

/// Best start for a zombie placement: argmax of survival, smallest id on ties.
Vertex optimalStart(const ValueTable& table, std::span<const Vertex> sorted_zombies);

using SkProvider = std::function<SkResult(std::size_t k)>;

struct ZombieNumberResult {
  std::optional<std::size_t> z;  // nullopt: no k <= k_max qualifies
  std::size_t cop_number = 0;
  std::map<std::size_t, SkResult> profile;
  bool monotone = true;  // s_k non-increasing over the scanned range
};

/// Scans k = c, c+1, ..., k_max for the first s_k <= 1/2.
ZombieNumberResult zombieNumber(std::size_t cop_number, std::size_t k_max,
                                const SkProvider& provider);

/// Stationary policy reading the table: argmin of the Bellman operator, smallest
/// vertex id on ties.
std::unique_ptr<SurvivorStrategy> extractOptimalPolicy(std::shared_ptr<const ValueTable> table);

/// CSV "k,s_k,method,residual".
std::string profileCsv(const std::map<std::size_t, SkResult>& profile);

}  // namespace zs
