#include <doctest.h>

#include <cmath>

#include "zs/analytic.hpp"
#include "zs/exact.hpp"
#include "zs/generators.hpp"

using namespace zs;

namespace {
// Naive arc: try every start and length.
std::size_t naiveArc(std::size_t n, const std::vector<Vertex>& p) {
  for (std::size_t len = 1; len <= n; ++len)
    for (std::size_t a = 0; a < n; ++a) {
      bool all = true;
      for (auto v : p) all = all && ((v + n - a) % n) < len;
      if (all) return len;
    }
  return n;
}
}  // namespace

TEST_CASE("minimal arc") {
  std::vector<Vertex> a{0, 1}, b{0, 5}, c{11, 0, 3};
  CHECK(cycleMinimalArc(10, a) == 2);
  CHECK(cycleMinimalArc(10, b) == 6);
  CHECK(cycleMinimalArc(12, c) == 5);
  CHECK(cycleSurvivorWins(10, a));
  CHECK_FALSE(cycleSurvivorWins(10, b));
  std::vector<Vertex> border{2, 3, 4, 5, 6};  // n/2 - 1 consecutive vertices on C_12
  CHECK_FALSE(cycleSurvivorWins(12, border));
  for (std::size_t n = 3; n <= 9; ++n)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y)
        for (Vertex z = 0; z < n; ++z) {
          std::vector<Vertex> p{x, y, z};
          REQUIRE(cycleMinimalArc(n, p) == naiveArc(n, p));
        }
}

TEST_CASE("hand-counted cycle values") {
  CHECK(cycleSkCombinatorial(9, 2) == Rational(5, 9));
  CHECK(cycleSkCombinatorial(11, 3) == Rational(37, 121));
  CHECK(cycleSkCombinatorial(20, 2) == Rational(3, 4));
  CHECK(cycleSkCombinatorial(9, 3) == Rational(171, 729));
  CHECK(cycleSkCombinatorial(3, 1) == 0);
  CHECK(cycleSkCombinatorial(4, 1) == 1);
  CHECK(toString(Rational(6, 8)) == "3/4");
}

TEST_CASE("enumeration and arc counting agree") {
  for (std::size_t n = 3; n <= 60; ++n)
    for (std::size_t k = 2; k <= 4; ++k) REQUIRE(cycleSkEnumerate(n, k) == cycleSkArcCount(n, k));
}

TEST_CASE("sandwich bounds") {
  for (std::size_t n = 9; n <= 200; ++n)
    for (std::size_t k = 2; k <= 6; ++k) {
      auto [lo, hi] = cycleSkBounds(n, k);
      auto s = cycleSkCombinatorial(n, k);
      REQUIRE(lo <= s);
      REQUIRE(s < hi);
    }
  auto [lo, hi] = cycleSkBounds(100, 2);
  CHECK(lo == Rational(92, 100));
  CHECK(hi == 1);
  CHECK(cycleSkBounds(9, 2).first == Rational(1, 9));
  CHECK(cycleSkBounds(1000, 4).second == Rational(1, 2));
}

TEST_CASE("exact solver agrees with the cycle formula") {
  for (std::size_t n = 9; n <= 12; ++n)
    for (std::size_t k = 2; k <= 3; ++k)
      CHECK(std::abs(skExact(cycle(n), k).s_k - toDouble(cycleSkCombinatorial(n, k))) <= 1e-9);
}

TEST_CASE("cycle zombie numbers") {
  auto expected = [](std::size_t n) -> std::size_t {
    if (n == 3) return 1;
    if ((n >= 4 && n <= 8) || n == 10) return 2;
    if ((n >= 11 && n <= 22) || n == 9 || n == 24 || n == 26) return 3;
    return 4;
  };
  for (std::size_t n = 3; n <= 60; ++n) CHECK_MESSAGE(zombieNumberCycle(n) == expected(n), n);
}

TEST_CASE("hypercube formula") {
  CHECK(hypercubeSk(3, 2) == Rational(1, 2));
  CHECK(hypercubeSk(4, 3) == Rational(1, 4));
  CHECK(hypercubeSk(4, 4) == 0);
}

TEST_CASE("leafy cycle") {
  CHECK(leafyCycleStats(10, 1).p_all_leaves == Rational(1, 2));
  CHECK(leafyCycleStats(10, 3).p_all_leaves == Rational(1, 8));
  CHECK(leafyCycleStats(1000, 138).p_all_leaves > Rational(1, 2));
  CHECK(leafyCycleStats(1000, 139).p_all_leaves < Rational(1, 2));
  CHECK(leafyCycleStats(1000, 1).z_asymptotic == doctest::Approx(138.63).epsilon(1e-4));
}

TEST_CASE("asymptotic bands") {
  CHECK(asymptoticBand("hypercube", 300).center == doctest::Approx(200));
  CHECK(asymptoticBand("projective_incidence", 100).center == doctest::Approx(200));
  CHECK(asymptoticBand("torus", 1e4, 2.0).low == doctest::Approx(100.0 / (2.0 * std::log(1e4))));
  CHECK_THROWS(asymptoticBand("cycle", 10));
}
