#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "zs/exact.hpp"
#include "zs/generators.hpp"
#include "zs/multiset.hpp"

using namespace zs;

TEST_CASE("multiset ranking is a bijection") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 3}, {9, 2}, {4, 4}, {7, 1}}) {
    MultisetIndex idx(n, k);
    std::vector<Vertex> z(k, 0), back(k);
    std::uint64_t seen = 0;
    while (true) {
      auto r = idx.rank(z);
      REQUIRE(r == seen);
      idx.unrank(r, back);
      REQUIRE(back == z);
      ++seen;
      // next non-decreasing sequence in colex order
      std::size_t i = 0;
      while (i < k) {
        Vertex limit = (i + 1 < k) ? z[i + 1] : static_cast<Vertex>(n - 1);
        if (z[i] < limit) {
          ++z[i];
          for (std::size_t j = 0; j < i; ++j) z[j] = 0;
          break;
        }
        ++i;
      }
      if (i == k) break;
    }
    CHECK(seen == idx.count());
  }
  std::vector<Vertex> z{1, 1, 4};
  CHECK(orderedPlacements(z) == 3.0);
}

TEST_CASE("one zombie never catches on a long cycle") {
  auto g = cycle(6);
  auto t = captureValueTable(g, 1);
  std::vector<Vertex> z{0};
  CHECK(t.captureProbability(z, 3) == 0.0);
  CHECK(skFromTable(t).s_k == 1.0);
}

TEST_CASE("s_k on small graphs") {
  CHECK(skExact(hypercube(3), 2).s_k == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(skExact(cycle(10), 2).s_k == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(skExact(cycle(9), 2).s_k == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(skExact(cycle(11), 3).s_k == doctest::Approx(37.0 / 121.0).epsilon(1e-12));
  CHECK(skExact(grid(3), 2).s_k == 0.0);
  CHECK(skExact(path(5), 1).s_k == 0.0);
}

TEST_CASE("qualitative pre-pass agrees with plain iteration") {
  ExactOptions plain;
  plain.qualitative = false;
  plain.tol = 1e-13;
  for (auto g : {cycle(7), hypercube(3), leafyCycle(8)}) {
    auto a = captureValueTable(g, 2);
    auto b = captureValueTable(g, 2, plain);
    for (std::size_t i = 0; i < a.values().size(); ++i)
      REQUIRE(a.values()[i] == doctest::Approx(b.values()[i]).epsilon(1e-6));
  }
}

TEST_CASE("values are a Bellman fixed point") {
  auto g = leafyCycle(9);
  auto t = captureValueTable(g, 2);
  std::vector<Vertex> z(2);
  double worst = 0;
  for (std::uint64_t r = 0; r < t.index().count(); ++r) {
    t.index().unrank(r, z);
    for (Vertex s = 0; s < g.order(); ++s) {
      if (z[0] == s || z[1] == s) continue;
      worst = std::max(worst, std::abs(bellmanValue(g, t, z, s) - t.at(r, s)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("thread count does not change values") {
  auto g = hypercube(4);
  ExactOptions one, many;
  many.threads = 4;
  CHECK(captureValueTable(g, 2, one).values() == captureValueTable(g, 2, many).values());
}

TEST_CASE("lazy zombie mutation is detected") {
  ExactOptions lazy;
  lazy.lazy_zombies = true;
  CHECK(std::abs(skExact(cycle(9), 2, lazy).s_k - 5.0 / 9.0) > 1e-3);
}

TEST_CASE("budget is enforced") {
  ExactOptions tiny;
  tiny.state_budget = 100;
  CHECK_THROWS_AS(captureValueTable(cycle(20), 2, tiny), BudgetExceeded);
}

TEST_CASE("cache round trip") {
  auto t = captureValueTable(cycle(8), 2);
  auto path = std::filesystem::temp_directory_path() / "zs_table_test.bin";
  t.save(path.string());
  auto u = ValueTable::load(path.string());
  std::filesystem::remove(path);
  CHECK(u.values() == t.values());
  CHECK(u.graph_hash == t.graph_hash);
  CHECK(u.converged == t.converged);
}

TEST_CASE("optimal policy never loses from a sure-escape state") {
  auto g = hypercube(3);
  auto t = std::make_shared<const ValueTable>(captureValueTable(g, 2));
  auto strat = extractOptimalPolicy(t);
  int escapes = 0, expected = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto tr = playGame(g, 2, *strat, seed, 200, {false, 0});
    bool safe = t->captureProbability(tr.initial_zombies, tr.start) == 0.0;
    if (safe) {
      ++expected;
      CHECK_FALSE(tr.captured);
    }
    escapes += !tr.captured;
  }
  CHECK(escapes == expected);
}

TEST_CASE("zombie number scan") {
  auto g = cycle(9);
  auto res = zombieNumber(2, 6, [&](std::size_t k) { return skExact(g, k); });
  REQUIRE(res.z.has_value());
  CHECK(*res.z == 3);
  CHECK(res.monotone);
  CHECK(res.profile.size() == 2);
}
