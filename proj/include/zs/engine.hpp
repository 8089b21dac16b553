#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "zs/graph.hpp"

namespace zs {

/// Zombie multiset (sorted ascending), survivor position, capture flag, round.
struct GameState {
  std::vector<Vertex> zombies;
  Vertex survivor = 0;
  bool captured = false;
  std::uint64_t round = 0;

  bool zombieAt(Vertex v) const;
};

/// Neighbours of z strictly closer to s. Uniform over this set is the zombie law.
std::vector<Vertex> zombieMoveOptions(const Graph& g, Vertex z, Vertex s);

/// Canonical successor multisets of one zombie step with their probabilities.
/// Ordered choices are enumerated, then collapsed by sorting.
struct ZombieOutcome {
  std::vector<Vertex> zombies;
  double probability = 0.0;
};
std::vector<ZombieOutcome> zombieStepDistribution(const Graph& g, std::span<const Vertex> zombies,
                                                  Vertex survivor);

/// Picks, for zombie i (in sorted order) with `options` candidates, an index.
using ZombieChooser = std::function<std::size_t(std::size_t zombie, std::size_t options)>;

/// One round: zombies move (chooser), capture check, survivor moves, capture
/// check. Throws std::invalid_argument on an illegal survivor move or a state
/// that is already captured.
GameState stepRound(const Graph& g, const GameState& state, Vertex survivor_move,
                    const ZombieChooser& choose);
/// Same, with explicit per-zombie option indices.
GameState stepRound(const Graph& g, const GameState& state, Vertex survivor_move,
                    std::span<const std::size_t> choices);

// Split form of stepRound, used by the game loop so the survivor can observe
// the zombies' new positions before committing to a move.
GameState moveZombies(const Graph& g, const GameState& state, const ZombieChooser& choose);
GameState moveSurvivor(const Graph& g, const GameState& after_zombies, Vertex survivor_move);

bool legalSurvivorMove(const Graph& g, Vertex from, Vertex to);

// --- torus script formalism ---------------------------------------------------

enum class Direction : std::uint8_t { U, D, L, R };
using Priority = std::array<Direction, 4>;

char directionSymbol(Direction d);
Vertex stepTorus(std::size_t side, Vertex v, Direction d);
/// Side length of a torus graph (from its family tag); throws otherwise.
std::size_t torusSide(const Graph& g);

struct ZombieScript {
  Vertex v0 = 0;
  std::vector<Priority> sigma;  // sigma[t-1] drives round t
};

/// First direction in sigma_t that strictly decreases the toroidal distance to s.
Vertex scriptedZombieStep(const Graph& g, const ZombieScript& script, std::uint64_t t, Vertex z,
                          Vertex s);

/// All 24 permutations of U, D, L, R in lexicographic order.
const std::array<Priority, 24>& allPriorities();

// --- strategies and games -----------------------------------------------------

/// Per-game survivor decision maker. May carry phase state.
class SurvivorPolicy {
 public:
  virtual ~SurvivorPolicy() = default;
  virtual Vertex chooseStart(const Graph& g, std::span<const Vertex> zombies) = 0;
  /// `state` holds the zombies after their move; state.round is the round being
  /// played (1-based).
  virtual Vertex chooseMove(const Graph& g, const GameState& state) = 0;
  /// Situations the strategy could not handle as designed.
  virtual std::vector<std::string> flags() const { return {}; }
};

/// Immutable strategy description; hands out fresh policies per game.
class SurvivorStrategy {
 public:
  virtual ~SurvivorStrategy() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<SurvivorPolicy> newGame(const Graph& g) const = 0;
};

struct RoundRecord {
  std::vector<Vertex> zombies;  // after the zombie step
  Vertex survivor = 0;          // after the survivor step
};

struct Transcript {
  std::vector<Vertex> initial_zombies;
  Vertex start = 0;
  std::vector<RoundRecord> rounds;
  bool captured = false;
  std::uint64_t capture_round = 0;  // round of capture, 0 if at placement
  std::uint64_t rounds_played = 0;
  bool forfeited = false;  // strategy made an illegal move
  std::vector<std::string> flags;

  std::uint64_t seed = 0;
  std::uint64_t cutoff = 0;
  std::string strategy;
  std::string graph_hash;

  nlohmann::json toJson() const;
};

struct PlayOptions {
  bool record_rounds = true;
  std::uint64_t game_index = 0;
};

/// Plays one game: k zombies iid uniform, strategy picks the start, rounds until
/// capture or cutoff. Fully determined by (graph, k, strategy, seed, cutoff,
/// game_index).
Transcript playGame(const Graph& g, std::size_t k, const SurvivorStrategy& strategy,
                    std::uint64_t seed, std::uint64_t cutoff, const PlayOptions& options = {});

/// Per-(seed, game, zombie, round) stream word.
std::uint64_t streamWord(std::uint64_t seed, std::uint64_t game, std::uint64_t zombie,
                         std::uint64_t round);

}  // namespace zs
