#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "zs/engine.hpp"

namespace zs {

/// floor(20 ln n): turning-point spacing and regularity window.
std::size_t stableSpacing(std::size_t n);
/// ceil(ln n): required first-place count per direction and window.
std::size_t regularCount(std::size_t n);

/// Axis-aligned square of torus cells, top-left corner plus side.
struct BoxSpec {
  std::size_t n = 0;
  std::size_t row = 0, col = 0, side = 0;
  bool contains(Vertex v) const;
};

/// Lengths for the boxed torus strategy, all in survivor steps. `unit` is the
/// minimum spacing between turns; the other lengths are multiples of it.
struct TorusBoxedConfig {
  std::size_t n = 0;
  std::size_t unit = 0;
  std::size_t inner_side = 0;  // C
  std::size_t box_side = 0;    // B
  std::size_t arm_radius = 0;  // start luring a zombie this close
  std::size_t run_out = 0;      // minimum run-out
  std::size_t max_run_out = 0;  // run-out cap while the zombie falls in line
  std::size_t jog = 0;
  std::size_t approach_min = 0;
  std::size_t descend = 0;
  std::uint64_t period = 0;           // after this many rounds only straight moves
  std::size_t arrival_spacing = 0;    // scenario condition between zombie arrivals

  /// Scaled so the boxes fit on tori of a few hundred cells per side.
  static TorusBoxedConfig desk(std::size_t n);
  /// Unit floor(20 ln n) and box side floor(K ln n) with K = 5e4. Throws when
  /// the boxes do not fit.
  static TorusBoxedConfig fullScale(std::size_t n);

  BoxSpec outerBox() const;
  BoxSpec innerBox() const;
  nlohmann::json toJson() const;
};

std::unique_ptr<SurvivorStrategy> torusBoxed(const TorusBoxedConfig& config);

/// Every window of stableSpacing(n) consecutive rounds in [1, horizon] has each
/// direction first at least regularCount(n) times.
bool checkRegular(const ZombieScript& script, std::size_t n, std::uint64_t horizon);

/// Turning points are indices where consecutive step vectors differ; the first
/// and last index also count. Stable iff no turn reverses direction and all
/// turning points are at least `spacing` apart.
bool checkStable(std::span<const Vertex> trajectory, std::size_t n, std::size_t spacing);
bool checkStable(std::span<const Vertex> trajectory, std::size_t n);

/// Uniform priority per round, rounds 1..horizon.
ZombieScript randomScript(Vertex v0, std::uint64_t horizon, std::uint64_t seed);

struct ScriptedGameResult {
  std::vector<Vertex> trajectory;  // survivor positions u_0..u_T
  bool captured = false;
  bool forfeited = false;
  std::uint64_t rounds = 0;
  std::vector<std::optional<std::uint64_t>> arrivals;  // first round inside the box
  std::vector<std::uint32_t> final_distances;
  std::vector<std::optional<std::uint32_t>> locked_at;  // distance once locked
  std::uint64_t lock_violations = 0;
  std::vector<std::string> flags;
};

/// Plays scripted zombies (identities kept) against a strategy on a torus.
ScriptedGameResult playScripted(const Graph& g, std::span<const ZombieScript> scripts,
                                const SurvivorStrategy& strategy, std::uint64_t cutoff,
                                const BoxSpec* box = nullptr);

struct ScenarioOutcome {
  bool valid = false;    // scenario conditions hold
  bool success = false;  // stable, every zombie at distance 2 or 3, survived
  bool stable = false;
  ScriptedGameResult game;
};

/// Zombies start outside B with uniform random scripts. A draw is valid when all
/// scripts are regular, every zombie reaches B by round 3n and arrivals are at
/// least cfg.arrival_spacing apart.
ScenarioOutcome runTorusScenario(const Graph& g, const TorusBoxedConfig& cfg,
                                 const SurvivorStrategy& strategy, std::size_t k, std::uint64_t seed);

}  // namespace zs
