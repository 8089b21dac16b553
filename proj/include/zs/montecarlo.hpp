#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zs/engine.hpp"
#include "zs/graph.hpp"

namespace zs {

struct Interval {
  double low = 0.0;
  double high = 1.0;
  bool contains(double x) const { return low <= x && x <= high; }
};

/// Wilson score interval for a binomial proportion.
Interval wilsonInterval(std::uint64_t wins, std::uint64_t samples, double confidence);

struct McOptions {
  std::uint64_t samples = 10'000;
  std::uint64_t cutoff = 0;  // 0 = defaultCutoff(g)
  std::uint64_t seed = 1;
  double confidence = 0.95;
  unsigned threads = 1;  // 0 = hardware concurrency; results do not depend on it
  bool censored_as_loss = false;
};

/// 4 n diam, with n the side length for grids and tori and the order otherwise.
std::uint64_t defaultCutoff(const Graph& g);

struct EstimateResult {
  std::size_t k = 0;
  std::string strategy;
  std::uint64_t samples = 0;
  std::uint64_t wins = 0;
  std::uint64_t captures = 0;
  std::uint64_t censored = 0;  // runs that reached the cutoff
  bool censored_as_win = true;
  std::uint64_t forfeits = 0;
  double estimate = 0.0;
  Interval ci;
  double confidence = 0.95;
  std::uint64_t cutoff = 0;
  std::uint64_t seed = 0;
  double runtime_seconds = 0.0;

  nlohmann::json toJson() const;
};

/// Plays samples games with game indices 0..samples-1 under the master seed.
/// A run that survives to the cutoff is a win unless censored_as_loss is set.
EstimateResult estimateSk(const Graph& g, std::size_t k, const SurvivorStrategy& strategy,
                          const McOptions& options);

using StrategyFactory = std::function<std::unique_ptr<SurvivorStrategy>(std::size_t k)>;

struct ZombieNumberEstimate {
  std::map<std::size_t, EstimateResult> profile;
  std::optional<std::size_t> z;             // smallest k with the interval entirely <= 1/2
  std::optional<std::size_t> last_above;    // largest k with the interval entirely > 1/2
  std::vector<std::size_t> undecided;       // intervals straddling 1/2
};

ZombieNumberEstimate zombieNumberMC(const Graph& g, const StrategyFactory& strategy,
                                    std::size_t k_lo, std::size_t k_hi, const McOptions& options);

/// Result rows: graph_hash,family,n,k,strategy,samples,cutoff,wins,estimate,ci_low,ci_high,seed
std::string estimateCsvHeader();
std::string estimateCsvRow(const Graph& g, const EstimateResult& r);

}  // namespace zs
