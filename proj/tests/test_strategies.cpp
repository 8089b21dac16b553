#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "zs/generators.hpp"
#include "zs/rng.hpp"
#include "zs/strategies.hpp"

using namespace zs;

namespace {

GameState stateOf(std::vector<Vertex> zombies, Vertex s, std::uint64_t round = 1) {
  std::sort(zombies.begin(), zombies.end());
  GameState st;
  st.zombies = std::move(zombies);
  st.survivor = s;
  st.round = round;
  return st;
}

struct Played {
  bool captured = false;
  bool illegal = false;
  bool adjacent_move = false;  // survivor stepped next to a zombie
};

// Plays from a fixed placement with the random zombie law.
Played playFrom(const Graph& g, const SurvivorStrategy& st, std::vector<Vertex> zombies,
                std::uint64_t rounds, std::uint64_t seed) {
  Played out;
  SplitMix64 rng(seed);
  auto pol = st.newGame(g);
  std::sort(zombies.begin(), zombies.end());
  Vertex s = pol->chooseStart(g, zombies);
  if (std::find(zombies.begin(), zombies.end(), s) != zombies.end()) {
    out.captured = true;
    return out;
  }
  for (std::uint64_t t = 1; t <= rounds; ++t) {
    for (auto& z : zombies) {
      auto opt = zombieMoveOptions(g, z, s);
      z = opt[rng.below(opt.size())];
    }
    std::sort(zombies.begin(), zombies.end());
    if (std::find(zombies.begin(), zombies.end(), s) != zombies.end()) {
      out.captured = true;
      return out;
    }
    Vertex next = pol->chooseMove(g, stateOf(zombies, s, t));
    if (next != s && !g.adjacent(s, next)) {
      out.illegal = true;
      return out;
    }
    s = next;
    for (Vertex z : zombies) {
      if (z == s) {
        out.captured = true;
        return out;
      }
      if (g.adjacent(z, s)) out.adjacent_move = true;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("greedy on a cycle starts opposite the zombie") {
  auto g = cycle(6);
  auto pol = greedyEvade()->newGame(g);
  std::vector<Vertex> z{0};
  CHECK(pol->chooseStart(g, z) == 3);
  CHECK(pol->chooseMove(g, stateOf({1}, 3)) == 4);
}

TEST_CASE("entry distribution sums to one") {
  auto g = grid(4);
  auto p = entryDistribution(g, 0, 15);
  CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0));
  auto q = entryDistribution(cycle(7), 0, 3);
  CHECK(std::accumulate(q.begin(), q.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("parity rule on Q4") {
  auto g = hypercube(4);
  auto pol = hypercubeParity()->newGame(g);
  std::vector<Vertex> far{0b0011};
  pol->chooseStart(g, far);
  CHECK(pol->chooseMove(g, stateOf({0b0011}, 0b0000)) == 0b0000);

  std::vector<Vertex> two{0b0001, 0b0110};
  CHECK(parityFreeCoordinate(4, 0, two) == 1);
  CHECK(pol->chooseMove(g, stateOf(two, 0b0000)) == 0b1000);

  std::vector<Vertex> all{0b0001, 0b0010, 0b0100, 0b1000};
  CHECK(parityFreeCoordinate(4, 0, all) == 0);
}

// Outcome counts over 20 placements with `per` zombies of each parity.
static std::pair<int, int> parityRun(std::size_t dim, std::size_t per) {
  auto g = hypercube(dim);
  auto st = hypercubeParity();
  int cap = 0, adj = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SplitMix64 rng(mixWords({seed, 0x51}));
    std::vector<Vertex> z;
    while (z.size() < 2 * per) {
      auto v = static_cast<Vertex>(rng.below(g.order()));
      std::size_t even = std::count_if(z.begin(), z.end(), [](Vertex x) { return std::popcount(x) % 2 == 0; });
      bool is_even = std::popcount(v) % 2 == 0;
      if ((is_even && even < per) || (!is_even && z.size() - even < per)) z.push_back(v);
    }
    auto r = playFrom(g, *st, z, 10'000, seed);
    CHECK_FALSE(r.illegal);
    cap += r.captured;
    adj += r.adjacent_move;
  }
  return {cap, adj};
}

TEST_CASE("parity never steps next to a zombie below n/3 per parity class") {
  for (auto [dim, per] : {std::pair<std::size_t, std::size_t>{5, 1}, {6, 1}, {7, 2}, {8, 2}}) {
    auto [cap, adj] = parityRun(dim, per);
    CHECK(cap == 0);
    CHECK(adj == 0);
  }
}

TEST_CASE("parity on Q5 with two zombies per class can run out of coordinates") {
  // Two forbidden by distance-1 zombies plus four by distance-2 zombies exceed five.
  auto [cap, adj] = parityRun(5, 2);
  CHECK(cap > 0);
}

TEST_CASE("incidence start avoids the zombie's line") {
  auto g = projectiveIncidence(2);
  const Vertex line = 7;
  auto pol = incidenceEscape()->newGame(g);
  std::vector<Vertex> z{line};
  Vertex s = pol->chooseStart(g, z);
  CHECK(s < 7);
  CHECK_FALSE(g.adjacent(s, line));
  CHECK(pol->flags().empty());
}

TEST_CASE("incidence forced move when every neighbour is guarded") {
  auto g = projectiveIncidence(2);
  const Vertex p = 0;
  std::vector<Vertex> guards;
  for (Vertex l : g.neighbors(p))
    for (Vertex q : g.neighbors(l))
      if (q != p) {
        guards.push_back(q);
        break;
      }
  REQUIRE(guards.size() == 3);
  auto pol = incidenceEscape()->newGame(g);
  pol->chooseStart(g, guards);
  Vertex m = pol->chooseMove(g, stateOf(guards, p));
  CHECK(g.adjacent(p, m));
  auto f = pol->flags();
  CHECK(std::any_of(f.begin(), f.end(), [](const std::string& s) { return s.find("blocked") != std::string::npos; }));
}

TEST_CASE("incidence escape beats one zombie on G5 most of the time") {
  auto g = projectiveIncidence(5);
  auto st = incidenceEscape();
  int won = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto t = playGame(g, 1, *st, seed, 200, {.record_rounds = false});
    won += !t.captured;
  }
  CHECK(won > 500);
}

TEST_CASE("every strategy plays legally") {
  struct Case {
    Graph g;
    std::string name;
    std::size_t k;
  };
  std::vector<Case> cases{{cycle(9), "greedy", 2},        {grid(4), "greedy", 2},
                          {hypercube(4), "parity", 3},    {hypercube(3), "greedy", 2},
                          {projectiveIncidence(3), "incidence", 2},
                          {leafyCycle(10), "greedy", 2},  {cycle(8), "optimal-table", 2},
                          {hypercube(3), "optimal-table", 2}};
  for (auto& c : cases) {
    StrategyContext ctx;
    ctx.k = c.k;
    auto st = makeStrategy(c.name, c.g, ctx);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto t = playGame(c.g, c.k, *st, seed, 100);
      CHECK_FALSE(t.forfeited);
    }
  }
  CHECK_THROWS(makeStrategy("nonsense", cycle(5), {}));
}
