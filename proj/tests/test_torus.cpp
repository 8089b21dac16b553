#include <doctest.h>

#include "zs/generators.hpp"
#include "zs/torus.hpp"

using namespace zs;

namespace {

ZombieScript constantScript(std::uint64_t horizon) {
  ZombieScript s;
  s.sigma.assign(horizon, Priority{Direction::U, Direction::D, Direction::L, Direction::R});
  return s;
}

ZombieScript rotatingScript(std::uint64_t horizon) {
  ZombieScript s;
  const Priority base{Direction::U, Direction::D, Direction::L, Direction::R};
  for (std::uint64_t t = 0; t < horizon; ++t) {
    Priority p;
    for (std::size_t i = 0; i < 4; ++i) p[i] = base[(i + t) % 4];
    s.sigma.push_back(p);
  }
  return s;
}

std::vector<Vertex> walk(std::size_t n, Vertex start, const std::vector<std::pair<Direction, int>>& legs) {
  std::vector<Vertex> t{start};
  for (auto [d, len] : legs)
    for (int i = 0; i < len; ++i) t.push_back(stepTorus(n, t.back(), d));
  return t;
}

}  // namespace

TEST_CASE("scale constants") {
  CHECK(stableSpacing(256) == 110);
  CHECK(regularCount(256) == 6);
  auto c = TorusBoxedConfig::desk(256);
  CHECK(c.unit == 8);
  CHECK(c.box_side < 256);
  CHECK_THROWS(TorusBoxedConfig::fullScale(256));
}

TEST_CASE("regular scripts") {
  CHECK_FALSE(checkRegular(constantScript(400), 16, 400));
  CHECK(checkRegular(rotatingScript(400), 16, 400));
  CHECK(checkRegular(rotatingScript(1024), 256, 1024));

  // One direction missing from the lead for a whole window breaks regularity.
  auto s = rotatingScript(400);
  for (std::uint64_t t = 100; t < 180; ++t)
    if (s.sigma[t][0] == Direction::L) std::swap(s.sigma[t][0], s.sigma[t][1]);
  CHECK_FALSE(checkRegular(s, 16, 400));
}

TEST_CASE("random scripts are almost always regular") {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    ok += checkRegular(randomScript(0, 1024, seed), 256, 1024);
  CHECK(ok >= 198);
}

TEST_CASE("stable trajectories") {
  const std::size_t n = 64;
  CHECK(checkStable(walk(n, 0, {{Direction::R, 200}}), n));
  CHECK_FALSE(checkStable(walk(n, 0, {{Direction::R, 10}, {Direction::L, 10}}), n, 4));
  CHECK(checkStable(walk(n, 0, {{Direction::R, 10}, {Direction::D, 10}, {Direction::L, 10}}), n, 10));
  CHECK_FALSE(checkStable(walk(n, 0, {{Direction::R, 10}, {Direction::D, 9}, {Direction::L, 10}}), n, 10));
  // The start counts as a turning point.
  CHECK_FALSE(checkStable(walk(n, 0, {{Direction::R, 3}, {Direction::D, 20}}), n, 10));
}

TEST_CASE("boxed strategy locks scripted zombies") {
  auto g = torus(256);
  auto cfg = TorusBoxedConfig::desk(256);
  auto st = torusBoxed(cfg);
  for (std::size_t k : {1, 2}) {
    int valid = 0, ok = 0;
    for (std::uint64_t seed = 0; valid < 40 && seed < 2000; ++seed) {
      auto o = runTorusScenario(g, cfg, *st, k, seed);
      if (!o.valid) continue;
      ++valid;
      ok += o.success;
      CHECK(o.game.lock_violations == 0);
    }
    CHECK(valid == 40);
    CHECK(ok >= 38);
  }
}

TEST_CASE("boxed strategy is legal against arbitrary placements") {
  auto g = torus(256);
  auto st = torusBoxed(TorusBoxedConfig::desk(256));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::vector<ZombieScript> scripts;
    for (std::size_t i = 0; i < 3; ++i) scripts.push_back(randomScript(static_cast<Vertex>((seed * 7919 + i * 104729) % (256 * 256)), 1024, seed * 3 + i));
    auto r = playScripted(g, scripts, *st, 1024);
    for (std::size_t t = 1; t < r.trajectory.size(); ++t) {
      auto a = r.trajectory[t - 1], b = r.trajectory[t];
      CHECK((a == b || g.adjacent(a, b)));
    }
  }
}
