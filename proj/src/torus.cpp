#include "zs/torus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "zs/generators.hpp"
#include "zs/rng.hpp"

namespace zs {

std::size_t stableSpacing(std::size_t n) {
  return static_cast<std::size_t>(std::floor(20.0 * std::log(static_cast<double>(n))));
}

std::size_t regularCount(std::size_t n) {
  return static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n))));
}

bool BoxSpec::contains(Vertex v) const {
  auto c = cellOf(v, n);
  auto dr = (c.row + n - row) % n, dc = (c.col + n - col) % n;
  return dr < side && dc < side;
}

TorusBoxedConfig TorusBoxedConfig::desk(std::size_t n) {
  TorusBoxedConfig c;
  c.n = n;
  c.unit = std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))));
  const auto L = c.unit;
  c.inner_side = 2 * L;
  c.arm_radius = 8 * L;
  c.run_out = 2 * L;
  c.max_run_out = 12 * L;
  c.jog = L;
  c.approach_min = L;
  c.descend = L;
  c.box_side = c.inner_side + 2 * (c.arm_radius + 2 * L);
  c.period = 4 * static_cast<std::uint64_t>(n);
  c.arrival_spacing = 8 * L;
  if (c.box_side + 8 > n) throw std::invalid_argument("torus too small for the boxed strategy");
  return c;
}

TorusBoxedConfig TorusBoxedConfig::fullScale(std::size_t n) {
  TorusBoxedConfig c;
  c.n = n;
  const double ln = std::log(static_cast<double>(n));
  c.unit = stableSpacing(n);
  const auto L = c.unit;
  c.box_side = static_cast<std::size_t>(std::floor(5e4 * ln));
  c.inner_side = 20 * L;
  c.arm_radius = static_cast<std::size_t>(std::floor(542 * ln));
  c.run_out = static_cast<std::size_t>(std::floor(500 * ln));
  c.max_run_out = 2 * c.run_out;
  c.jog = L;
  c.approach_min = L;
  c.descend = L;
  c.period = 4 * static_cast<std::uint64_t>(n);
  c.arrival_spacing = static_cast<std::size_t>(12 * c.box_side);
  if (c.box_side * 4 >= n)
    throw std::invalid_argument("boxes with K = 5e4 need n > 4 floor(K ln n); n = " +
                                std::to_string(n) + " is too small");
  return c;
}

BoxSpec TorusBoxedConfig::outerBox() const {
  return {n, (n - box_side) / 2, (n - box_side) / 2, box_side};
}

BoxSpec TorusBoxedConfig::innerBox() const {
  return {n, (n - inner_side) / 2, (n - inner_side) / 2, inner_side};
}

nlohmann::json TorusBoxedConfig::toJson() const {
  return {{"n", n},           {"unit", unit},         {"inner_side", inner_side},
          {"box_side", box_side}, {"arm_radius", arm_radius}, {"run_out", run_out}, {"max_run_out", max_run_out},
          {"jog", jog},       {"approach_min", approach_min}, {"descend", descend},
          {"period", period}, {"arrival_spacing", arrival_spacing}};
}

namespace {

struct Vec {
  long long r = 0, c = 0;
  bool operator==(const Vec&) const = default;
};

Vec dirVec(Direction d) {
  switch (d) {
    case Direction::U: return {-1, 0};
    case Direction::D: return {1, 0};
    case Direction::L: return {0, -1};
    case Direction::R: return {0, 1};
  }
  return {};
}

Direction cw(Direction d) {
  switch (d) {
    case Direction::R: return Direction::D;
    case Direction::D: return Direction::L;
    case Direction::L: return Direction::U;
    case Direction::U: return Direction::R;
  }
  return d;
}
Direction ccw(Direction d) { return cw(cw(cw(d))); }
Direction opposite(Direction d) { return cw(cw(d)); }

long long wrapDiff(long long a, long long b, long long n) {
  long long d = ((b - a) % n + n) % n;
  return d > n / 2 ? d - n : d;
}

Vec offset(std::size_t n, Vertex from, Vertex to) {
  auto a = cellOf(from, n), b = cellOf(to, n);
  return {wrapDiff(static_cast<long long>(a.row), static_cast<long long>(b.row), static_cast<long long>(n)),
          wrapDiff(static_cast<long long>(a.col), static_cast<long long>(b.col), static_cast<long long>(n))};
}

long long along(Vec o, Direction d) {
  auto v = dirVec(d);
  return o.r * v.r + o.c * v.c;
}

long long norm1(Vec o) { return std::llabs(o.r) + std::llabs(o.c); }

struct Leg {
  Direction dir;
  long long remaining;
};

class TorusBoxedPolicy final : public SurvivorPolicy {
 public:
  explicit TorusBoxedPolicy(const TorusBoxedConfig& cfg)
      : cfg_(cfg), n_(cfg.n), box_(cfg.outerBox()), inner_(cfg.innerBox()) {
    c0_ = static_cast<long long>(inner_.row);
    S_ = static_cast<long long>(inner_.side);
  }

  Vertex chooseStart(const Graph& g, std::span<const Vertex> zombies) override {
    if (torusSide(g) != n_) throw std::invalid_argument("configuration is for another torus size");
    k_ = zombies.size();
    Vertex u0 = corner(Direction::U);
    if (std::find(zombies.begin(), zombies.end(), u0) != zombies.end())
      flag("zombie placed on the start corner");
    heading_ = Direction::R;
    since_ = 0;
    phase_ = Phase::Circle;
    return u0;
  }

  Vertex chooseMove(const Graph&, const GameState& st) override {
    round_ = st.round;
    pos_ = st.survivor;
    observe(st.zombies);
    Direction d = decide();
    if (d != heading_) {
      heading_ = d;
      since_ = 1;
    } else {
      ++since_;
    }
    return stepTorus(n_, pos_, d);
  }

  std::vector<std::string> flags() const override { return flags_; }

 private:
  enum class Phase { Circle, Return, Arm, Detour, RunOut, Jog1, Jog, Approach, Descend, Straight, Fallback };

  struct Seen {
    Vec o;
    long long e;
  };

  void flag(std::string s) {
    if (std::find(flags_.begin(), flags_.end(), s) == flags_.end()) flags_.push_back(std::move(s));
  }

  // Loop corner where the edge travelled in direction d ends.
  Vertex corner(Direction d) const {
    long long r = c0_, c = c0_;
    switch (d) {
      case Direction::R: c += S_; break;
      case Direction::D: r += S_; c += S_; break;
      case Direction::L: r += S_; break;
      case Direction::U: break;
    }
    return vertexOf({static_cast<std::size_t>(r), static_cast<std::size_t>(c)}, n_);
  }

  bool onEdge(Direction d) const {
    auto p = cellOf(pos_, n_);
    long long r = static_cast<long long>(p.row), c = static_cast<long long>(p.col);
    auto in = [&](long long x) { return x >= c0_ && x <= c0_ + S_; };
    switch (d) {
      case Direction::R: return r == c0_ && in(c);
      case Direction::D: return c == c0_ + S_ && in(r);
      case Direction::L: return r == c0_ + S_ && in(c);
      case Direction::U: return c == c0_ && in(r);
    }
    return false;
  }

  void observe(std::span<const Vertex> zombies) {
    seen_.clear();
    for (Vertex z : zombies) {
      if (!box_.contains(z)) continue;
      auto o = offset(n_, pos_, z);
      seen_.push_back({o, norm1(o)});
    }
    locked_ = 0;
    for (const auto& z : seen_) locked_ += z.e <= 2;
    if (phase_ != Phase::Straight && !box_.contains(pos_)) flag("survivor left the box");
    if (target_) {
      // The target moved one step and we moved one step along heading_.
      Vec v = dirVec(heading_);
      Vec pred{target_->r - v.r, target_->c - v.c};
      const Seen* hit = nullptr;
      for (const auto& z : seen_)
        if (z.e > 2 && norm1({z.o.r - pred.r, z.o.c - pred.c}) <= 1) hit = &z;
      if (hit) target_ = hit->o;
      else target_.reset();
    }
  }

  // The zombie being lured; nullptr once it is locked or gone.
  const Seen* tracked() const {
    if (!target_) return nullptr;
    for (const auto& z : seen_)
      if (z.o == *target_) return &z;
    return nullptr;
  }

  bool lockedAligned() const {
    for (const auto& z : seen_)
      if (z.e <= 2) {
        Direction lat = cw(heading_);
        if (along(z.o, lat) != 0 || along(z.o, heading_) >= 0) return false;
      }
    return true;
  }

  bool turnsLeft() const { return round_ + cfg_.unit <= cfg_.period + 1; }

  bool canTurn() const { return since_ >= cfg_.unit && turnsLeft() && lockedAligned(); }

  // Perpendicular direction moving away from every nearby zombie.
  Direction escapeTurn() {
    for (Direction cand : {ccw(heading_), cw(heading_)}) {
      bool ok = true;
      for (const auto& z : seen_)
        if (z.e <= 4 && along(z.o, cand) > 0) ok = false;
      if (ok) return cand;
    }
    flag("no perpendicular escape in round " + std::to_string(round_));
    return ccw(heading_);
  }

  Direction afterLockTurn(Direction d) {
    locked_ = 0;
    for (const auto& z : seen_) locked_ += z.e <= 2;
    if (locked_ >= k_) phase_ = Phase::Straight;
    else {
      phase_ = Phase::Descend;
      counter_ = 1;
    }
    return d;
  }

  bool armCheck() {
    if (phase_ == Phase::Fallback) return false;
    std::size_t near = 0;
    for (const auto& z : seen_)
      if (z.e > 2 && z.e <= static_cast<long long>(cfg_.arm_radius)) ++near;
    if (near >= 2) {
      flag("two zombies arrived together; fallback");
      phase_ = Phase::Fallback;
      legs_.clear();
      return false;
    }
    if (near == 1) {
      for (const auto& z : seen_)
        if (z.e > 2 && z.e <= static_cast<long long>(cfg_.arm_radius)) target_ = z.o;
      phase_ = Phase::Arm;
      return true;
    }
    return false;
  }

  Direction decide() {
    if (!turnsLeft() && phase_ != Phase::Straight) phase_ = Phase::Straight;

    // A zombie within two steps ahead: moving on would walk into it.
    bool danger = false;
    for (const auto& z : seen_)
      if (z.e <= 2 && along(z.o, heading_) > 0) danger = true;
    if (danger) {
      if (phase_ == Phase::Approach) {
        if (since_ < cfg_.approach_min) flag("approach shorter than its minimum");
        return afterLockTurn(escapeTurn());
      }
      if (since_ < cfg_.unit) flag("forced turn in round " + std::to_string(round_));
      return afterLockTurn(escapeTurn());
    }

    switch (phase_) {
      case Phase::Straight: return heading_;
      case Phase::Circle:
      case Phase::Fallback:
        if (armCheck()) return decide();
        return circle();
      case Phase::Return:
        if (armCheck()) return decide();
        return followPlan();
      case Phase::Arm: return arm();
      case Phase::Detour: return detour();
      case Phase::RunOut: return runOut();
      case Phase::Jog1: return jog1();
      case Phase::Jog: return jog();
      case Phase::Approach: return approach();
      case Phase::Descend:
        if (counter_ < cfg_.descend) {
          ++counter_;
          return heading_;
        }
        phase_ = Phase::Return;
        legs_.clear();
        return decide();
    }
    return heading_;
  }

  Direction circle() {
    if (onEdge(heading_)) {
      if (pos_ != corner(heading_)) return heading_;
      if (canTurn()) return cw(heading_);
    }
    if (phase_ == Phase::Fallback) fallback_return_ = true;
    else phase_ = Phase::Return;
    legs_.clear();
    return followPlan();
  }

  // Direction pointing away from the zombie along its larger offset axis.
  static Direction awayAxis(Vec o) {
    if (std::llabs(o.r) >= std::llabs(o.c)) return o.r > 0 ? Direction::U : Direction::D;
    return o.c > 0 ? Direction::L : Direction::R;
  }

  Direction arm() {
    const Seen* f = tracked();
    if (!f) {
      phase_ = Phase::Return;
      legs_.clear();
      return followPlan();
    }
    const Direction target = awayAxis(f->o);
    if (target == heading_) {
      phase_ = Phase::RunOut;
      counter_ = 0;
      return runOut();
    }
    if (!canTurn()) return heading_;
    counter_ = 1;
    if (target != opposite(heading_)) {
      phase_ = Phase::RunOut;
      return target;
    }
    // Reversing takes two turns; sidestep away from the zombie first.
    run_heading_ = target;
    phase_ = Phase::Detour;
    return along(f->o, cw(heading_)) <= 0 ? cw(heading_) : ccw(heading_);
  }

  Direction detour() {
    if (counter_ < cfg_.unit || !canTurn()) {
      ++counter_;
      return heading_;
    }
    phase_ = Phase::RunOut;
    counter_ = 1;
    return run_heading_;
  }

  // Run away until the zombie trails nearly in line.
  Direction runOut() {
    const Seen* f = tracked();
    const long long lat = f ? along(f->o, cw(heading_)) : 0;
    const long long tol = static_cast<long long>(cfg_.jog / 2);
    if (f && along(f->o, heading_) > 0) {
      phase_ = Phase::Arm;
      return arm();
    }
    if (counter_ < cfg_.run_out || (std::llabs(lat) > tol && counter_ < cfg_.max_run_out)) {
      ++counter_;
      return heading_;
    }
    if (std::llabs(lat) > tol) flag("zombie still off line after the longest run-out");
    run_heading_ = heading_;
    jog_cw_ = lat <= 0;
    phase_ = Phase::Jog1;
    return jog1();
  }

  Direction jog1() {
    if (!canTurn()) return heading_;
    phase_ = Phase::Jog;
    counter_ = 1;
    return jog_cw_ ? cw(run_heading_) : ccw(run_heading_);
  }

  Direction jog() {
    if (counter_ < cfg_.jog) {
      ++counter_;
      return heading_;
    }
    if (!canTurn()) return heading_;
    phase_ = Phase::Approach;
    counter_ = 1;
    return opposite(run_heading_);
  }

  Direction approach() {
    const Seen* f = tracked();
    if (f && along(f->o, heading_) > 0) {
      ++counter_;
      return heading_;
    }
    if (locked_ >= k_) {
      phase_ = Phase::Straight;
      return heading_;
    }
    if (f) {
      flag("zombie passed beside the survivor; luring again");
      phase_ = Phase::RunOut;
      counter_ = 0;
      return runOut();
    }
    phase_ = Phase::Descend;
    counter_ = 0;
    return decide();
  }

  // --- return to the loop ----------------------------------------------------

  // Cheapest sequence of straight legs from the current state that ends at a
  // loop corner travelling along the loop, with every leg after the first at
  // least one unit long.
  bool plan() {
    legs_.clear();
    const long long L = static_cast<long long>(cfg_.unit);
    const long long first_min = since_ >= cfg_.unit ? 0 : L - static_cast<long long>(since_);
    long long best_cost = std::numeric_limits<long long>::max();
    std::vector<Leg> best;
    for (Direction arrive : {Direction::U, Direction::R, Direction::D, Direction::L}) {
      Vec delta = offset(n_, pos_, corner(arrive));
      for (std::size_t m = 1; m <= 6; ++m) {
        for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
          std::vector<Direction> dirs{heading_};
          for (std::size_t i = 1; i < m; ++i)
            dirs.push_back((mask >> (i - 1)) & 1 ? ccw(dirs.back()) : cw(dirs.back()));
          if (dirs.back() != arrive) continue;
          std::vector<long long> len(m);
          for (std::size_t i = 0; i < m; ++i) len[i] = i == 0 ? first_min : L;
          if (m == 1) len[0] = std::max(len[0], L - static_cast<long long>(since_));
          if (m > 1) len[m - 1] = std::max(len[m - 1], L);
          if (!solveAxis(dirs, len, delta)) continue;
          long long cost = 0;
          for (auto l : len) cost += l;
          if (cost < best_cost) {
            best_cost = cost;
            best.clear();
            for (std::size_t i = 0; i < m; ++i) best.push_back({dirs[i], len[i]});
          }
        }
      }
    }
    if (best.empty()) return false;
    legs_ = best;
    return true;
  }

  static bool solveAxis(const std::vector<Direction>& dirs, std::vector<long long>& len, Vec delta) {
    for (int axis = 0; axis < 2; ++axis) {
      long long target = axis == 0 ? delta.r : delta.c;
      long long sum = 0;
      std::vector<std::size_t> legs;
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        Vec v = dirVec(dirs[i]);
        long long s = axis == 0 ? v.r : v.c;
        if (s == 0) continue;
        legs.push_back(i);
        sum += s * len[i];
      }
      long long rest = target - sum;
      if (rest == 0) continue;
      bool done = false;
      for (auto i : legs) {
        Vec v = dirVec(dirs[i]);
        long long s = axis == 0 ? v.r : v.c;
        if ((rest > 0) == (s > 0)) {
          len[i] += std::llabs(rest);
          done = true;
          break;
        }
      }
      if (!done) return false;
    }
    // A first leg of zero means turning now; that needs a full unit behind us.
    return true;
  }

  Direction followPlan() {
    if (legs_.empty() && !plan()) {
      flag("no return plan in round " + std::to_string(round_));
      return heading_;
    }
    if (legs_.front().remaining > 0) {
      --legs_.front().remaining;
      return heading_;
    }
    if (legs_.size() == 1) {
      // Arrived on a loop corner travelling along the loop.
      legs_.clear();
      if (!canTurn()) return heading_;
      phase_ = fallback_return_ ? Phase::Fallback : Phase::Circle;
      fallback_return_ = false;
      return cw(heading_);
    }
    if (!canTurn()) {
      legs_.clear();  // postponed; plan again next round
      return heading_;
    }
    legs_.erase(legs_.begin());
    --legs_.front().remaining;
    return legs_.front().dir;
  }

  TorusBoxedConfig cfg_;
  std::size_t n_;
  BoxSpec box_, inner_;
  long long c0_ = 0, S_ = 0;
  std::size_t k_ = 0;

  Phase phase_ = Phase::Circle;
  Direction heading_ = Direction::R;
  std::size_t since_ = 0;
  std::size_t counter_ = 0;
  Direction run_heading_ = Direction::R;
  bool jog_cw_ = true;
  bool fallback_return_ = false;
  std::vector<Leg> legs_;

  std::uint64_t round_ = 0;
  Vertex pos_ = 0;
  std::vector<Seen> seen_;
  std::optional<Vec> target_;
  std::size_t locked_ = 0;
  std::vector<std::string> flags_;
};

class TorusBoxedStrategy final : public SurvivorStrategy {
 public:
  explicit TorusBoxedStrategy(TorusBoxedConfig c) : cfg_(c) {}
  std::string name() const override { return "torus-boxed"; }
  std::unique_ptr<SurvivorPolicy> newGame(const Graph&) const override {
    return std::make_unique<TorusBoxedPolicy>(cfg_);
  }

 private:
  TorusBoxedConfig cfg_;
};

}  // namespace

std::unique_ptr<SurvivorStrategy> torusBoxed(const TorusBoxedConfig& config) {
  return std::make_unique<TorusBoxedStrategy>(config);
}

bool checkRegular(const ZombieScript& script, std::size_t n, std::uint64_t horizon) {
  const std::size_t w = stableSpacing(n), need = regularCount(n);
  if (horizon > script.sigma.size()) throw std::out_of_range("script shorter than the horizon");
  if (horizon < w) return true;
  std::array<std::size_t, 4> count{};
  auto first = [&](std::uint64_t t) { return static_cast<std::size_t>(script.sigma[t - 1][0]); };
  for (std::uint64_t t = 1; t <= w; ++t) ++count[first(t)];
  for (std::uint64_t start = 1;; ++start) {
    for (auto c : count)
      if (c < need) return false;
    if (start + w > horizon) break;
    --count[first(start)];
    ++count[first(start + w)];
  }
  return true;
}

bool checkStable(std::span<const Vertex> traj, std::size_t n, std::size_t spacing) {
  if (traj.size() < 2) return true;
  std::vector<Vec> steps;
  for (std::size_t j = 1; j < traj.size(); ++j) {
    Vec v = offset(n, traj[j - 1], traj[j]);
    if (norm1(v) > 1) return false;  // not a walk
    steps.push_back(v);
  }
  std::vector<std::size_t> turning{0};
  for (std::size_t j = 1; j + 1 < traj.size(); ++j) {
    const Vec& a = steps[j - 1];
    const Vec& b = steps[j];
    if (a == b) continue;
    if (norm1(a) == 1 && b.r == -a.r && b.c == -a.c) return false;  // reversal
    turning.push_back(j);
  }
  turning.push_back(traj.size() - 1);
  for (std::size_t i = 1; i < turning.size(); ++i)
    if (turning[i] - turning[i - 1] < spacing) return false;
  return true;
}

bool checkStable(std::span<const Vertex> traj, std::size_t n) {
  return checkStable(traj, n, stableSpacing(n));
}

ZombieScript randomScript(Vertex v0, std::uint64_t horizon, std::uint64_t seed) {
  ZombieScript s{v0, {}};
  s.sigma.reserve(horizon);
  const auto& all = allPriorities();
  for (std::uint64_t t = 1; t <= horizon; ++t) s.sigma.push_back(all[reduce(mixWords({seed, t}), 24)]);
  return s;
}

ScriptedGameResult playScripted(const Graph& g, std::span<const ZombieScript> scripts,
                                const SurvivorStrategy& strategy, std::uint64_t cutoff,
                                const BoxSpec* box) {
  const std::size_t k = scripts.size();
  ScriptedGameResult res;
  res.arrivals.assign(k, std::nullopt);
  res.locked_at.assign(k, std::nullopt);
  std::vector<Vertex> z(k);
  for (std::size_t i = 0; i < k; ++i) {
    z[i] = scripts[i].v0;
    if (box && box->contains(z[i])) res.arrivals[i] = 0;
  }
  auto sorted = [&] {
    auto s = z;
    std::sort(s.begin(), s.end());
    return s;
  };
  auto policy = strategy.newGame(g);
  auto zs = sorted();
  Vertex s = policy->chooseStart(g, zs);
  res.trajectory.push_back(s);
  std::vector<std::uint32_t> prev(k);
  for (std::size_t i = 0; i < k; ++i) prev[i] = g.distance(z[i], s);
  if (std::find(z.begin(), z.end(), s) != z.end()) res.captured = true;

  for (std::uint64_t t = 1; t <= cutoff && !res.captured; ++t) {
    for (std::size_t i = 0; i < k; ++i) {
      z[i] = scriptedZombieStep(g, scripts[i], t, z[i], s);
      if (z[i] == s) res.captured = true;
    }
    res.rounds = t;
    if (res.captured) break;
    GameState st{sorted(), s, false, t};
    Vertex m = policy->chooseMove(g, st);
    if (!legalSurvivorMove(g, s, m)) {
      res.forfeited = res.captured = true;
      break;
    }
    s = m;
    res.trajectory.push_back(s);
    for (std::size_t i = 0; i < k; ++i) {
      if (z[i] == s) res.captured = true;
      if (box && !res.arrivals[i] && box->contains(z[i])) res.arrivals[i] = t;
      auto d = g.distance(z[i], s);
      if (res.locked_at[i]) {
        if (d != *res.locked_at[i]) ++res.lock_violations;
      } else if ((prev[i] == 2 || prev[i] == 3) && d == prev[i]) {
        res.locked_at[i] = d;
      }
      prev[i] = d;
    }
  }
  for (std::size_t i = 0; i < k; ++i) res.final_distances.push_back(g.distance(z[i], s));
  res.flags = policy->flags();
  return res;
}

ScenarioOutcome runTorusScenario(const Graph& g, const TorusBoxedConfig& cfg,
                                 const SurvivorStrategy& strategy, std::size_t k, std::uint64_t seed) {
  const std::size_t n = cfg.n;
  const auto box = cfg.outerBox();
  const std::uint64_t cutoff = cfg.period;
  SplitMix64 rng(mixWords({seed, 0x70u}));
  std::vector<ZombieScript> scripts;
  ScenarioOutcome out;
  for (std::size_t i = 0; i < k; ++i) {
    Vertex v0;
    do v0 = static_cast<Vertex>(rng.below(n * n));
    while (box.contains(v0));
    scripts.push_back(randomScript(v0, cutoff, mixWords({seed, i, 0x5c})));
    if (!checkRegular(scripts.back(), n, cutoff)) return out;
  }
  out.game = playScripted(g, scripts, strategy, cutoff, &box);
  std::vector<std::uint64_t> arr;
  for (auto& a : out.game.arrivals) {
    if (!a || *a > 3 * n) return out;
    arr.push_back(*a);
  }
  std::sort(arr.begin(), arr.end());
  for (std::size_t i = 1; i < arr.size(); ++i)
    if (arr[i] - arr[i - 1] < cfg.arrival_spacing) return out;
  out.valid = true;
  out.stable = checkStable(out.game.trajectory, n, cfg.unit);
  bool near = std::all_of(out.game.final_distances.begin(), out.game.final_distances.end(),
                          [](auto d) { return d == 2 || d == 3; });
  out.success = out.stable && near && !out.game.captured && out.game.rounds == cutoff;
  return out;
}


}  // namespace zs
