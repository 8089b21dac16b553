#include <doctest.h>

#include <numeric>

#include "zs/engine.hpp"
#include "zs/generators.hpp"

using namespace zs;

TEST_CASE("zombie options are the geodesic neighbours") {
  auto g = cycle(6);
  auto o = zombieMoveOptions(g, 0, 3);
  CHECK(o == std::vector<Vertex>{1, 5});
  CHECK(zombieMoveOptions(g, 0, 2) == std::vector<Vertex>{1});
  CHECK_THROWS(zombieMoveOptions(g, 2, 2));
}

TEST_CASE("step distribution sums to one and merges permutations") {
  auto g = hypercube(3);
  std::vector<Vertex> z{0, 0};
  auto dist = zombieStepDistribution(g, z, 7);
  double total = 0;
  for (auto& o : dist) total += o.probability;
  CHECK(total == doctest::Approx(1.0));
  CHECK(dist.size() == 6);  // 3 doubles and 3 distinct pairs
}

TEST_CASE("capture on zombie arrival and on stepping onto a zombie") {
  auto g = path(4);
  GameState st{{0}, 1, false, 0};
  auto after = moveZombies(g, st, [](std::size_t, std::size_t) { return 0; });
  CHECK(after.captured);

  GameState s2{{0}, 3, false, 0};
  auto a2 = moveZombies(g, s2, [](std::size_t, std::size_t) { return 0; });
  CHECK_FALSE(a2.captured);
  CHECK(a2.zombies == std::vector<Vertex>{1});
  auto b2 = moveSurvivor(g, a2, 2);
  CHECK_FALSE(b2.captured);
  auto a3 = moveZombies(g, b2, [](std::size_t, std::size_t) { return 0; });
  CHECK(a3.captured);

  GameState s3{{0}, 3, false, 0};
  auto a4 = moveZombies(g, s3, [](std::size_t, std::size_t) { return 0; });
  CHECK_THROWS(moveSurvivor(g, a4, 0));
  GameState s4{{1}, 3, false, 0};
  auto a5 = moveZombies(g, s4, [](std::size_t, std::size_t) { return 0; });  // zombie to 2
  CHECK_FALSE(a5.captured);
  CHECK(moveSurvivor(g, a5, 2).captured);
}

TEST_CASE("explicit choices must be legal") {
  auto g = cycle(6);
  GameState st{{0}, 3, false, 0};
  std::vector<std::size_t> bad{2};
  CHECK_THROWS(stepRound(g, st, 3, bad));
  std::vector<std::size_t> ok{1};
  auto next = stepRound(g, st, 3, ok);
  CHECK(next.zombies == std::vector<Vertex>{5});
  CHECK(next.round == 1);
  CHECK_THROWS(stepRound(g, st, 0, ok));
}

TEST_CASE("torus stepping and scripted zombies") {
  auto g = torus(5);
  CHECK(stepTorus(5, 0, Direction::U) == 20);
  CHECK(stepTorus(5, 0, Direction::L) == 4);
  CHECK(stepTorus(5, 24, Direction::D) == 4);
  ZombieScript sc{0, {Priority{Direction::U, Direction::L, Direction::D, Direction::R}}};
  // survivor at (1,1): U and L increase distance, D is first improving.
  CHECK(scriptedZombieStep(g, sc, 1, 0, 6) == 5);
  CHECK(allPriorities().size() == 24);
}

namespace {
class Stay final : public SurvivorStrategy {
  struct P final : SurvivorPolicy {
    Vertex chooseStart(const Graph& g, std::span<const Vertex>) override {
      return static_cast<Vertex>(g.order() - 1);
    }
    Vertex chooseMove(const Graph&, const GameState& s) override { return s.survivor; }
  };

 public:
  std::string name() const override { return "stay"; }
  std::unique_ptr<SurvivorPolicy> newGame(const Graph&) const override {
    return std::make_unique<P>();
  }
};
class Teleport final : public SurvivorStrategy {
  struct P final : SurvivorPolicy {
    Vertex chooseStart(const Graph&, std::span<const Vertex>) override { return 0; }
    Vertex chooseMove(const Graph& g, const GameState& s) override {
      return static_cast<Vertex>((s.survivor + g.order() / 2) % g.order());
    }
  };

 public:
  std::string name() const override { return "teleport"; }
  std::unique_ptr<SurvivorPolicy> newGame(const Graph&) const override {
    return std::make_unique<P>();
  }
};
}  // namespace

TEST_CASE("games are reproducible and illegal moves forfeit") {
  auto g = path(12);
  Stay stay;
  auto a = playGame(g, 2, stay, 99, 100);
  auto b = playGame(g, 2, stay, 99, 100);
  CHECK(a.toJson() == b.toJson());
  CHECK(a.captured);
  CHECK(a.capture_round <= 11);

  Teleport tp;
  auto big = cycle(40);
  bool saw_forfeit = false;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = playGame(big, 1, tp, seed, 50);
    CHECK(t.captured);
    saw_forfeit |= t.forfeited;
  }
  CHECK(saw_forfeit);
}

TEST_CASE("stream words depend on every coordinate") {
  auto w = streamWord(1, 2, 3, 4);
  CHECK(w != streamWord(2, 2, 3, 4));
  CHECK(w != streamWord(1, 3, 3, 4));
  CHECK(w != streamWord(1, 2, 4, 4));
  CHECK(w != streamWord(1, 2, 3, 5));
}
