#include "zs/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "zs/rng.hpp"

namespace zs {

bool GameState::zombieAt(Vertex v) const {
  return std::binary_search(zombies.begin(), zombies.end(), v);
}

std::vector<Vertex> zombieMoveOptions(const Graph& g, Vertex z, Vertex s) {
  if (z == s) throw std::invalid_argument("zombie already on the survivor");
  const auto d = g.distance(z, s);
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(z))
    if (g.distance(w, s) + 1 == d) out.push_back(w);
  return out;
}

std::vector<ZombieOutcome> zombieStepDistribution(const Graph& g, std::span<const Vertex> zombies,
                                                  Vertex survivor) {
  std::vector<std::vector<Vertex>> options;
  double weight = 1.0;
  for (Vertex z : zombies) {
    options.push_back(zombieMoveOptions(g, z, survivor));
    weight /= static_cast<double>(options.back().size());
  }
  std::map<std::vector<Vertex>, double> acc;
  std::vector<std::size_t> idx(zombies.size(), 0);
  std::vector<Vertex> cur(zombies.size());
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) cur[i] = options[i][idx[i]];
    auto key = cur;
    std::sort(key.begin(), key.end());
    acc[key] += weight;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  std::vector<ZombieOutcome> out;
  out.reserve(acc.size());
  for (auto& [z, p] : acc) out.push_back({z, p});
  return out;
}

bool legalSurvivorMove(const Graph& g, Vertex from, Vertex to) {
  return from == to || g.adjacent(from, to);
}

GameState moveZombies(const Graph& g, const GameState& state, const ZombieChooser& choose) {
  if (state.captured) throw std::invalid_argument("game already over");
  GameState next = state;
  for (std::size_t i = 0; i < state.zombies.size(); ++i) {
    auto opts = zombieMoveOptions(g, state.zombies[i], state.survivor);
    auto pick = choose(i, opts.size());
    if (pick >= opts.size()) throw std::out_of_range("zombie choice out of range");
    next.zombies[i] = opts[pick];
  }
  std::sort(next.zombies.begin(), next.zombies.end());
  next.captured = next.zombieAt(state.survivor);
  return next;
}

GameState moveSurvivor(const Graph& g, const GameState& after, Vertex to) {
  GameState next = after;
  ++next.round;
  if (after.captured) return next;
  if (!legalSurvivorMove(g, after.survivor, to))
    throw std::invalid_argument("illegal survivor move " + std::to_string(after.survivor) +
                                " -> " + std::to_string(to));
  next.survivor = to;
  // Walking onto a zombie is folded into the same round.
  next.captured = next.zombieAt(to);
  return next;
}

GameState stepRound(const Graph& g, const GameState& state, Vertex survivor_move,
                    const ZombieChooser& choose) {
  if (!legalSurvivorMove(g, state.survivor, survivor_move))
    throw std::invalid_argument("illegal survivor move");
  return moveSurvivor(g, moveZombies(g, state, choose), survivor_move);
}

GameState stepRound(const Graph& g, const GameState& state, Vertex survivor_move,
                    std::span<const std::size_t> choices) {
  if (choices.size() != state.zombies.size())
    throw std::invalid_argument("need one choice per zombie");
  return stepRound(g, state, survivor_move,
                   [&](std::size_t i, std::size_t) { return choices[i]; });
}

// --- torus --------------------------------------------------------------------

char directionSymbol(Direction d) {
  switch (d) {
    case Direction::U: return 'U';
    case Direction::D: return 'D';
    case Direction::L: return 'L';
    case Direction::R: return 'R';
  }
  return '?';
}

Vertex stepTorus(std::size_t side, Vertex v, Direction d) {
  std::size_t r = v / side, c = v % side;
  switch (d) {
    case Direction::U: r = (r + side - 1) % side; break;
    case Direction::D: r = (r + 1) % side; break;
    case Direction::L: c = (c + side - 1) % side; break;
    case Direction::R: c = (c + 1) % side; break;
  }
  return static_cast<Vertex>(r * side + c);
}

std::size_t torusSide(const Graph& g) {
  if (g.family().family != "torus" || g.family().params.empty())
    throw std::invalid_argument("graph is not a torus");
  return static_cast<std::size_t>(g.family().params[0]);
}

Vertex scriptedZombieStep(const Graph& g, const ZombieScript& script, std::uint64_t t, Vertex z,
                          Vertex s) {
  if (z == s) throw std::invalid_argument("zombie already on the survivor");
  if (t == 0 || t > script.sigma.size()) throw std::out_of_range("script has no step " + std::to_string(t));
  const auto side = torusSide(g);
  const auto d = g.distance(z, s);
  for (Direction dir : script.sigma[t - 1]) {
    Vertex w = stepTorus(side, z, dir);
    if (g.distance(w, s) + 1 == d) return w;
  }
  throw std::logic_error("no improving direction");  // unreachable on a torus
}

const std::array<Priority, 24>& allPriorities() {
  static const std::array<Priority, 24> table = [] {
    std::array<Priority, 24> out{};
    Priority p{Direction::U, Direction::D, Direction::L, Direction::R};
    std::size_t i = 0;
    do out[i++] = p;
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return table;
}

// --- games ----------------------------------------------------------------------

std::uint64_t streamWord(std::uint64_t seed, std::uint64_t game, std::uint64_t zombie,
                         std::uint64_t round) {
  return mixWords({seed, game, zombie, round});
}

nlohmann::json Transcript::toJson() const {
  nlohmann::json j;
  j["initial_zombies"] = initial_zombies;
  j["start"] = start;
  auto rs = nlohmann::json::array();
  for (const auto& r : rounds) rs.push_back({{"zombies", r.zombies}, {"survivor", r.survivor}});
  j["rounds"] = std::move(rs);
  j["outcome"] = {{"captured", captured},
                  {"capture_round", capture_round},
                  {"rounds_played", rounds_played},
                  {"forfeited", forfeited},
                  {"survived_to_cutoff", !captured}};
  j["flags"] = flags;
  j["manifest"] = {{"graph_hash", graph_hash},
                   {"seed", seed},
                   {"strategy", strategy},
                   {"cutoff", cutoff}};
  return j;
}

Transcript playGame(const Graph& g, std::size_t k, const SurvivorStrategy& strategy,
                    std::uint64_t seed, std::uint64_t cutoff, const PlayOptions& options) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  Transcript tr;
  tr.seed = seed;
  tr.cutoff = cutoff;
  tr.strategy = strategy.name();
  tr.graph_hash = g.hashHex();
  const auto game = options.game_index;
  const auto n = g.order();

  GameState state;
  state.zombies.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    state.zombies[i] = static_cast<Vertex>(reduce(streamWord(seed, game, i, 0), n));
  std::sort(state.zombies.begin(), state.zombies.end());
  tr.initial_zombies = state.zombies;

  auto policy = strategy.newGame(g);
  Vertex start = policy->chooseStart(g, state.zombies);
  if (start >= n) {
    tr.forfeited = true;
    tr.captured = true;
    tr.flags = policy->flags();
    tr.flags.push_back("illegal start vertex");
    return tr;
  }
  tr.start = start;
  state.survivor = start;
  if (state.zombieAt(start)) {
    tr.captured = true;
    tr.flags = policy->flags();
    return tr;
  }

  for (std::uint64_t t = 1; t <= cutoff; ++t) {
    state.round = t - 1;
    auto after = moveZombies(g, state, [&](std::size_t i, std::size_t opts) {
      return static_cast<std::size_t>(reduce(streamWord(seed, game, i + 1, t), opts));
    });
    after.round = t;
    Vertex move = after.survivor;
    if (!after.captured) {
      move = policy->chooseMove(g, after);
      if (!legalSurvivorMove(g, after.survivor, move)) {
        tr.forfeited = true;
        tr.captured = true;
        tr.capture_round = t;
        tr.rounds_played = t;
        tr.flags.push_back("illegal move in round " + std::to_string(t));
        break;
      }
    }
    after.round = t - 1;
    state = moveSurvivor(g, after, move);
    if (options.record_rounds) tr.rounds.push_back({after.zombies, state.survivor});
    tr.rounds_played = t;
    if (state.captured) {
      tr.captured = true;
      tr.capture_round = t;
      break;
    }
  }
  auto pf = policy->flags();
  tr.flags.insert(tr.flags.begin(), pf.begin(), pf.end());
  return tr;
}

}  // namespace zs
