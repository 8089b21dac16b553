#include "zs/strategies.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <tuple>

#include "zs/torus.hpp"

namespace zs {

namespace {

constexpr std::size_t kEntryRuleMaxOrder = 1024;

std::uint32_t minDistance(const Graph& g, Vertex v, std::span<const Vertex> zombies) {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (Vertex z : zombies) best = std::min(best, g.distance(v, z));
  return best;
}

// Neighbour (or stay) maximising the distance to the nearest zombie.
Vertex maxMinMove(const Graph& g, Vertex s, std::span<const Vertex> zombies,
                  const std::vector<Vertex>* exclude = nullptr) {
  Vertex best = s;
  long long best_d = -1;
  auto consider = [&](Vertex v) {
    if (exclude && std::find(exclude->begin(), exclude->end(), v) != exclude->end()) return;
    long long d = minDistance(g, v, zombies);
    if (d > best_d || (d == best_d && v < best)) {
      best_d = d;
      best = v;
    }
  };
  consider(s);
  for (Vertex v : g.neighbors(s)) consider(v);
  return best;
}

// Vertices of the 2-core (repeatedly strip degree <= 1). Empty for forests.
std::vector<char> twoCore(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<char> in(n, 1);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.neighbors(v).size();
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (!in[v]) continue;
    in[v] = 0;
    for (Vertex u : g.neighbors(v))
      if (in[u] && --deg[u] <= 1) stack.push_back(u);
  }
  return in;
}

class GreedyPolicy final : public SurvivorPolicy {
 public:
  explicit GreedyPolicy(const Graph& g) : core_(twoCore(g)) {}

  Vertex chooseStart(const Graph& g, std::span<const Vertex> zombies) override {
    const bool entry_rule = g.order() <= kEntryRuleMaxOrder;
    Vertex best = 0;
    double best_free = -1.0;
    long long best_d = -1;
    bool best_core = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      long long d = minDistance(g, v, zombies);
      if (d == 0) continue;
      const bool core = core_[v] && d >= 2;
      if (best_core && !core) continue;
      double free = 0.0;
      if (entry_rule) {
        const auto nb = g.neighbors(v);
        std::vector<double> open(nb.size(), 1.0);
        for (Vertex z : zombies) {
          auto p = entryDistribution(g, z, v);
          for (std::size_t i = 0; i < nb.size(); ++i) open[i] *= 1.0 - p[i];
        }
        for (double o : open) free += o;
      }
      if ((core && !best_core) || free > best_free + 1e-12 ||
          (std::abs(free - best_free) <= 1e-12 && d > best_d)) {
        best_free = free;
        best_d = d;
        best = v;
        best_core = core;
      }
    }
    return best;
  }

  // Safe moves (no zombie within one step) into the 2-core first, then the
  // largest distance to the nearest zombie.
  Vertex chooseMove(const Graph& g, const GameState& st) override {
    Vertex best = st.survivor;
    std::tuple<bool, bool, long long> best_key{false, false, -1};
    auto consider = [&](Vertex v) {
      const long long d = minDistance(g, v, st.zombies);
      std::tuple<bool, bool, long long> key{d >= 2, d >= 2 && core_[v], d};
      if (key > best_key || (key == best_key && v < best)) {
        best_key = key;
        best = v;
      }
    };
    consider(st.survivor);
    for (Vertex v : g.neighbors(st.survivor)) consider(v);
    return best;
  }

 private:
  std::vector<char> core_;
};

class ParityPolicy final : public SurvivorPolicy {
 public:
  explicit ParityPolicy(std::size_t dim) : dim_(dim) {}

  Vertex chooseStart(const Graph& g, std::span<const Vertex> zombies) override {
    for (Vertex v = 0; v < g.order(); ++v)
      if (minDistance(g, v, zombies) >= 2) return v;
    flags_.push_back("no start at distance >= 2");
    Vertex best = 0;
    std::uint32_t best_d = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto d = minDistance(g, v, zombies);
      if (d > best_d) {
        best_d = d;
        best = v;
      }
    }
    return best;
  }

  Vertex chooseMove(const Graph& g, const GameState& st) override {
    if (minDistance(g, st.survivor, st.zombies) > 1) return st.survivor;
    auto c = parityFreeCoordinate(dim_, st.survivor, st.zombies);
    if (c != 0) return st.survivor ^ (Vertex{1} << (dim_ - c));
    flags_.push_back("no free coordinate in round " + std::to_string(st.round));
    return maxMinMove(g, st.survivor, st.zombies);
  }

  std::vector<std::string> flags() const override { return flags_; }

 private:
  std::size_t dim_;
  std::vector<std::string> flags_;
};

class IncidencePolicy final : public SurvivorPolicy {
 public:
  explicit IncidencePolicy(std::size_t points) : points_(points) {}

  Vertex chooseStart(const Graph& g, std::span<const Vertex> zombies) override {
    Vertex best = 0;
    long long best_d = -1;
    for (Vertex v = 0; v < points_; ++v) {
      long long d = minDistance(g, v, zombies);
      if (d > best_d) {
        best_d = d;
        best = v;
      }
    }
    if (best_d < 3) flags_.push_back("no point at distance >= 3 from all zombies");
    return best;
  }

  Vertex chooseMove(const Graph& g, const GameState& st) override {
    std::vector<Vertex> blocked;
    for (Vertex u : g.neighbors(st.survivor))
      if (minDistance(g, u, st.zombies) <= 1) blocked.push_back(u);
    Vertex best = st.survivor;
    long long best_d = -1;
    for (Vertex u : g.neighbors(st.survivor)) {
      if (std::find(blocked.begin(), blocked.end(), u) != blocked.end()) continue;
      long long d = minDistance(g, u, st.zombies);
      if (d > best_d) {
        best_d = d;
        best = u;
      }
    }
    if (best_d >= 0) return best;
    flags_.push_back("all neighbours blocked in round " + std::to_string(st.round));
    for (Vertex u : g.neighbors(st.survivor)) {
      long long d = minDistance(g, u, st.zombies);
      if (d > best_d) {
        best_d = d;
        best = u;
      }
    }
    return best;
  }

  std::vector<std::string> flags() const override { return flags_; }

 private:
  std::size_t points_;
  std::vector<std::string> flags_;
};

class FactoryStrategy final : public SurvivorStrategy {
 public:
  FactoryStrategy(std::string name, std::function<std::unique_ptr<SurvivorPolicy>(const Graph&)> make)
      : name_(std::move(name)), make_(std::move(make)) {}
  std::string name() const override { return name_; }
  std::unique_ptr<SurvivorPolicy> newGame(const Graph& g) const override { return make_(g); }

 private:
  std::string name_;
  std::function<std::unique_ptr<SurvivorPolicy>(const Graph&)> make_;
};

}  // namespace

std::vector<double> entryDistribution(const Graph& g, Vertex z, Vertex v) {
  const auto nb = g.neighbors(v);
  std::vector<double> out(nb.size(), 0.0);
  if (z == v) return out;
  std::map<Vertex, double> layer{{z, 1.0}};
  auto d = g.distance(z, v);
  while (d > 1) {
    std::map<Vertex, double> next;
    for (auto [x, p] : layer) {
      auto opts = zombieMoveOptions(g, x, v);
      for (Vertex y : opts) next[y] += p / static_cast<double>(opts.size());
    }
    layer = std::move(next);
    --d;
  }
  for (std::size_t i = 0; i < nb.size(); ++i) {
    auto it = layer.find(nb[i]);
    if (it != layer.end()) out[i] = it->second;
  }
  return out;
}

std::size_t parityFreeCoordinate(std::size_t dim, Vertex s, std::span<const Vertex> zombies) {
  std::vector<char> forbidden(dim + 1, 0);
  for (Vertex z : zombies) {
    Vertex diff = z ^ s;
    int w = std::popcount(diff);
    if (w != 1 && w != 2) continue;
    for (std::size_t c = 1; c <= dim; ++c)
      if (diff & (Vertex{1} << (dim - c))) forbidden[c] = 1;
  }
  for (std::size_t c = 1; c <= dim; ++c)
    if (!forbidden[c]) return c;
  return 0;
}

std::unique_ptr<SurvivorStrategy> greedyEvade() {
  return std::make_unique<FactoryStrategy>(
      "greedy", [](const Graph& g) { return std::make_unique<GreedyPolicy>(g); });
}

std::unique_ptr<SurvivorStrategy> hypercubeParity() {
  return std::make_unique<FactoryStrategy>("parity", [](const Graph& g) {
    if (g.family().family != "hypercube") throw std::invalid_argument("parity strategy needs a hypercube");
    return std::make_unique<ParityPolicy>(static_cast<std::size_t>(g.family().params.at(0)));
  });
}

std::unique_ptr<SurvivorStrategy> incidenceEscape() {
  return std::make_unique<FactoryStrategy>("incidence", [](const Graph& g) {
    if (g.family().family != "projective_incidence")
      throw std::invalid_argument("incidence strategy needs a projective incidence graph");
    auto q = static_cast<std::size_t>(g.family().params.at(0));
    return std::make_unique<IncidencePolicy>(q * q + q + 1);
  });
}

std::vector<std::string> strategyNames() {
  return {"greedy", "parity", "incidence", "torus-boxed", "optimal-table"};
}

std::unique_ptr<SurvivorStrategy> makeStrategy(const std::string& name, const Graph& g,
                                               const StrategyContext& ctx) {
  if (name == "greedy") return greedyEvade();
  if (name == "parity") return hypercubeParity();
  if (name == "incidence") return incidenceEscape();
  if (name == "torus-boxed") return torusBoxed(TorusBoxedConfig::desk(torusSide(g)));
  if (name == "optimal-table")
    return extractOptimalPolicy(
        std::make_shared<const ValueTable>(captureValueTable(g, ctx.k, ctx.exact)));
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

}  // namespace zs
