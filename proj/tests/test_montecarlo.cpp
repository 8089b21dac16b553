#include <doctest.h>

#include "zs/analytic.hpp"
#include "zs/exact.hpp"
#include "zs/generators.hpp"
#include "zs/montecarlo.hpp"
#include "zs/strategies.hpp"

using namespace zs;

TEST_CASE("Wilson interval") {
  CHECK(wilsonInterval(0, 100, 0.95).low == 0.0);
  CHECK(wilsonInterval(100, 100, 0.95).high == 1.0);
  auto iv = wilsonInterval(50, 100, 0.95);
  // Tabulated: 0.4038 to 0.5962 for 50/100 at 95%.
  CHECK(iv.low == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(iv.high == doctest::Approx(0.5962).epsilon(1e-3));
  CHECK(iv.low + iv.high == doctest::Approx(1.0));
  CHECK(iv.high - iv.low == doctest::Approx(0.19).epsilon(0.02));
  // 1/10 at 95%: 0.0179 to 0.4042.
  auto one = wilsonInterval(1, 10, 0.95);
  CHECK(one.low == doctest::Approx(0.0179).epsilon(1e-2));
  CHECK(one.high == doctest::Approx(0.4042).epsilon(1e-3));
  CHECK_THROWS(wilsonInterval(3, 2, 0.95));
  CHECK_THROWS(wilsonInterval(0, 0, 0.95));
}

TEST_CASE("the triangle is always lost") {
  auto g = cycle(3);
  McOptions o;
  o.samples = 1000;
  auto r = estimateSk(g, 1, *greedyEvade(), o);
  CHECK(r.wins == 0);
  CHECK(r.estimate == 0.0);
  CHECK(r.wins + r.captures == r.samples);
}

TEST_CASE("estimates do not depend on the thread count") {
  auto g = cycle(12);
  McOptions o;
  o.samples = 3000;
  o.seed = 77;
  auto st = greedyEvade();
  o.threads = 1;
  auto a = estimateSk(g, 3, *st, o);
  o.threads = 4;
  auto b = estimateSk(g, 3, *st, o);
  CHECK(a.wins == b.wins);
  CHECK(a.censored == b.censored);
}

TEST_CASE("a longer cutoff never adds wins") {
  auto g = grid(5);
  auto st = greedyEvade();
  McOptions o;
  o.samples = 500;
  std::uint64_t prev = o.samples + 1;
  for (std::uint64_t c : {5, 20, 80, 320}) {
    o.cutoff = c;
    auto r = estimateSk(g, 2, *st, o);
    CHECK(r.wins <= prev);
    prev = r.wins;
  }
}

TEST_CASE("censored runs can be counted as losses") {
  auto g = cycle(20);
  auto st = greedyEvade();
  McOptions o;
  o.samples = 200;
  auto win = estimateSk(g, 2, *st, o);
  o.censored_as_loss = true;
  auto loss = estimateSk(g, 2, *st, o);
  CHECK(loss.wins == 0);
  CHECK(win.censored == loss.censored);
}

TEST_CASE("greedy matches the cycle formula") {
  auto g = cycle(20);
  McOptions o;
  o.samples = 20'000;
  o.confidence = 0.99;
  auto r = estimateSk(g, 2, *greedyEvade(), o);
  CHECK(r.ci.contains(toDouble(cycleSkCombinatorial(20, 2))));
}

TEST_CASE("zombie number estimate on C40") {
  auto g = cycle(40);
  McOptions o;
  o.samples = 4000;
  o.seed = 5;
  auto est = zombieNumberMC(g, [](std::size_t) { return greedyEvade(); }, 2, 6, o);
  REQUIRE(est.z.has_value());
  CHECK(*est.z == 4);
  CHECK(est.last_above == 3);
}

TEST_CASE("intervals cover exact values across small instances") {
  struct Cell {
    Graph g;
    std::size_t k;
  };
  std::vector<Cell> cells{{cycle(7), 2}, {cycle(10), 2}, {cycle(11), 3}, {hypercube(3), 2},
                          {grid(3), 1}, {leafyCycle(8), 2}, {path(6), 1}, {hypercube(3), 1}};
  int covered = 0;
  for (auto& c : cells) {
    auto table = std::make_shared<ValueTable>(captureValueTable(c.g, c.k));
    double exact = skFromTable(*table).s_k;
    McOptions o;
    o.samples = 4000;
    o.confidence = 0.99;
    o.seed = 11;
    auto r = estimateSk(c.g, c.k, *extractOptimalPolicy(table), o);
    covered += r.ci.contains(exact);
  }
  CHECK(covered >= 7);
}
