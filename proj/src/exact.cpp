#include "zs/exact.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "zs/parallel.hpp"

namespace zs {

namespace {

struct Transition {
  std::uint32_t successor;  // multiset rank after the zombie step
  bool caught;              // a zombie landed on the survivor
  double probability;
};

// Transition structure of the game: per state, the distribution of zombie
// outcomes. The survivor's choice is resolved at evaluation time.
struct Model {
  std::size_t n = 0;
  MultisetIndex index;
  std::vector<std::vector<Vertex>> closed;  // N[s] including s, ascending
  std::vector<std::uint64_t> offset;        // CSR over states, terminal states empty
  std::vector<Transition> transitions;
  std::vector<char> terminal;

  Model(std::size_t n_, std::size_t k) : n(n_), index(n_, k) {}
};

Model buildModel(const Graph& g, std::size_t k, const ExactOptions& opt) {
  const std::size_t n = g.order();
  Model m(n, k);
  const std::uint64_t states = m.index.count() * n;
  if (m.index.count() > opt.state_budget / n || states > opt.state_budget)
    throw BudgetExceeded("exact solver needs " + std::to_string(states) +
                         " states, budget is " + std::to_string(opt.state_budget) +
                         "; use Monte Carlo estimation instead");
  if (m.index.count() > std::numeric_limits<std::uint32_t>::max())
    throw BudgetExceeded("too many zombie configurations");

  m.closed.resize(n);
  for (Vertex s = 0; s < n; ++s) {
    auto& c = m.closed[s];
    c.assign(g.neighbors(s).begin(), g.neighbors(s).end());
    c.push_back(s);
    std::sort(c.begin(), c.end());
  }

  // Option lists per (zombie position, survivor position) on demand.
  m.terminal.assign(states, 0);
  m.offset.assign(states + 1, 0);
  std::vector<Vertex> zs(k), cur(k);
  std::vector<std::vector<Vertex>> options(k);
  std::vector<std::size_t> idx(k);
  std::vector<std::pair<std::uint32_t, double>> bucket;
  for (std::uint64_t r = 0; r < m.index.count(); ++r) {
    m.index.unrank(r, zs);
    for (Vertex s = 0; s < n; ++s) {
      const std::uint64_t state = r * n + s;
      m.offset[state] = m.transitions.size();
      if (std::binary_search(zs.begin(), zs.end(), s)) {
        m.terminal[state] = 1;
        continue;
      }
      double weight = 1.0;
      for (std::size_t i = 0; i < k; ++i) {
        options[i] = zombieMoveOptions(g, zs[i], s);
        if (opt.lazy_zombies) options[i].push_back(zs[i]);
        weight /= static_cast<double>(options[i].size());
      }
      bucket.clear();
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) cur[i] = options[i][idx[i]];
        std::sort(cur.begin(), cur.end());
        bucket.emplace_back(static_cast<std::uint32_t>(m.index.rank(cur)), weight);
        std::size_t i = 0;
        while (i < k && ++idx[i] == options[i].size()) idx[i++] = 0;
        if (i == k) break;
      }
      std::sort(bucket.begin(), bucket.end());
      for (std::size_t i = 0; i < bucket.size();) {
        std::size_t j = i;
        double p = 0.0;
        while (j < bucket.size() && bucket[j].first == bucket[i].first) p += bucket[j++].second;
        m.index.unrank(bucket[i].first, cur);
        bool caught = std::binary_search(cur.begin(), cur.end(), s);
        m.transitions.push_back({bucket[i].first, caught, p});
        i = j;
      }
    }
  }
  m.offset[states] = m.transitions.size();
  return m;
}

// Value of one zombie outcome once the survivor best-responds.
inline double outcomeValue(const Model& m, const std::vector<double>& v, const Transition& tr,
                           Vertex s) {
  if (tr.caught) return 1.0;
  const std::uint64_t base = std::uint64_t(tr.successor) * m.n;
  double best = 1.0;
  for (Vertex mv : m.closed[s]) best = std::min(best, v[base + mv]);
  return best;
}

// States from which the survivor can avoid capture surely: greatest set W with
// every zombie outcome leaving a move into W.
std::vector<char> sureEscape(const Model& m) {
  const std::uint64_t states = m.terminal.size();
  std::vector<char> w(states);
  for (std::uint64_t i = 0; i < states; ++i) w[i] = !m.terminal[i];
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t i = 0; i < states; ++i) {
      if (!w[i]) continue;
      const Vertex s = static_cast<Vertex>(i % m.n);
      for (auto t = m.offset[i]; t < m.offset[i + 1]; ++t) {
        const auto& tr = m.transitions[t];
        bool ok = false;
        if (!tr.caught) {
          const std::uint64_t base = std::uint64_t(tr.successor) * m.n;
          for (Vertex mv : m.closed[s])
            if (w[base + mv]) {
              ok = true;
              break;
            }
        }
        if (!ok) {
          w[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  return w;
}

// States from which some survivor behaviour reaches W with positive
// probability. Everything else is captured almost surely under every strategy.
std::vector<char> canReach(const Model& m, const std::vector<char>& target) {
  const std::uint64_t states = m.terminal.size();
  std::vector<char> a = target;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t i = 0; i < states; ++i) {
      if (a[i] || m.terminal[i]) continue;
      const Vertex s = static_cast<Vertex>(i % m.n);
      for (auto t = m.offset[i]; t < m.offset[i + 1] && !a[i]; ++t) {
        const auto& tr = m.transitions[t];
        if (tr.caught) continue;
        const std::uint64_t base = std::uint64_t(tr.successor) * m.n;
        for (Vertex mv : m.closed[s])
          if (a[base + mv]) {
            a[i] = 1;
            changed = true;
            break;
          }
      }
    }
  }
  return a;
}

}  // namespace

ValueTable::ValueTable(std::size_t n, std::size_t k, std::vector<double> values)
    : index_(n, k), values_(std::move(values)) {
  if (values_.size() != index_.count() * n)
    throw std::invalid_argument("value vector has the wrong size");
}

double ValueTable::captureProbability(std::span<const Vertex> sorted, Vertex survivor) const {
  return at(index_.rank(sorted), survivor);
}

void ValueTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  auto put = [&](const auto& x) { out.write(reinterpret_cast<const char*>(&x), sizeof x); };
  out.write("ZSVT1\0\0\0", 8);
  put(std::uint64_t(order()));
  put(std::uint64_t(zombies()));
  put(std::uint64_t(graph_hash.size()));
  out.write(graph_hash.data(), static_cast<std::streamsize>(graph_hash.size()));
  put(tol);
  put(iterations);
  put(residual);
  put(std::uint8_t(converged));
  put(certain_escape);
  put(certain_capture);
  out.write(reinterpret_cast<const char*>(values_.data()),
            static_cast<std::streamsize>(values_.size() * sizeof(double)));
}

ValueTable ValueTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  char magic[8];
  in.read(magic, 8);
  if (std::string_view(magic, 5) != "ZSVT1") throw std::runtime_error("not a value table cache");
  auto get = [&](auto& x) { in.read(reinterpret_cast<char*>(&x), sizeof x); };
  std::uint64_t n, k, hl;
  get(n);
  get(k);
  get(hl);
  std::string hash(hl, '\0');
  in.read(hash.data(), static_cast<std::streamsize>(hl));
  double tol, residual;
  std::uint64_t iterations, esc, cap;
  std::uint8_t conv;
  get(tol);
  get(iterations);
  get(residual);
  get(conv);
  get(esc);
  get(cap);
  std::vector<double> values(MultisetIndex::multisetCount(n, k) * n);
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("truncated value table cache " + path);
  ValueTable t(n, k, std::move(values));
  t.graph_hash = hash;
  t.tol = tol;
  t.iterations = iterations;
  t.residual = residual;
  t.converged = conv != 0;
  t.certain_escape = esc;
  t.certain_capture = cap;
  return t;
}

ValueTable captureValueTable(const Graph& g, std::size_t k, const ExactOptions& opt) {
  if (k == 0) throw std::invalid_argument("need at least one zombie");
  const Model m = buildModel(g, k, opt);
  const std::uint64_t states = m.terminal.size();
  const std::size_t n = m.n;

  std::vector<double> v(states, 0.0);
  for (std::uint64_t i = 0; i < states; ++i)
    if (m.terminal[i]) v[i] = 1.0;

  std::uint64_t escape = 0, capture = 0;
  std::vector<std::uint64_t> open;
  if (opt.qualitative) {
    auto w = sureEscape(m);
    auto a = canReach(m, w);
    for (std::uint64_t i = 0; i < states; ++i) {
      if (m.terminal[i]) continue;
      if (w[i]) ++escape;
      else if (!a[i]) {
        v[i] = 1.0;
        ++capture;
      } else open.push_back(i);
    }
  } else {
    for (std::uint64_t i = 0; i < states; ++i)
      if (!m.terminal[i]) open.push_back(i);
  }

  std::vector<double> next(open.size());
  std::uint64_t iters = 0;
  double residual = open.empty() ? 0.0 : 1.0;
  const unsigned threads = opt.threads;
  while (!open.empty() && iters < opt.max_iters) {
    ++iters;
    parallelFor(open.size(), threads, 256, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t j = lo; j < hi; ++j) {
        const auto i = open[j];
        const Vertex s = static_cast<Vertex>(i % n);
        double acc = 0.0;
        for (auto t = m.offset[i]; t < m.offset[i + 1]; ++t)
          acc += m.transitions[t].probability * outcomeValue(m, v, m.transitions[t], s);
        next[j] = std::min(acc, 1.0);
      }
    });
    residual = 0.0;
    for (std::size_t j = 0; j < open.size(); ++j) {
      const double old = v[open[j]];
      if (next[j] < old - 1e-12)
        throw std::logic_error("value iteration decreased a value; operator is not monotone");
      residual = std::max(residual, std::abs(next[j] - old));
      v[open[j]] = next[j];
    }
    if (residual < opt.tol) break;
  }
  // Values within 1e-6 of one are taken as one.
  for (auto i : open)
    if (1.0 - v[i] < 1e-6) v[i] = 1.0;

  ValueTable table(n, k, std::move(v));
  table.iterations = iters;
  table.residual = residual;
  table.converged = residual < opt.tol;
  table.certain_escape = escape;
  table.certain_capture = capture;
  table.graph_hash = g.hashHex();
  table.tol = opt.tol;
  return table;
}

double bellmanValue(const Graph& g, const ValueTable& table, std::span<const Vertex> zombies,
                    Vertex survivor) {
  if (std::find(zombies.begin(), zombies.end(), survivor) != zombies.end()) return 1.0;
  double acc = 0.0;
  for (const auto& o : zombieStepDistribution(g, zombies, survivor)) {
    if (std::binary_search(o.zombies.begin(), o.zombies.end(), survivor)) {
      acc += o.probability;
      continue;
    }
    double best = 1.0;
    const auto r = table.index().rank(o.zombies);
    best = std::min(best, table.at(r, survivor));
    for (Vertex mv : g.neighbors(survivor)) best = std::min(best, table.at(r, mv));
    acc += o.probability * best;
  }
  return acc;
}

Vertex optimalStart(const ValueTable& table, std::span<const Vertex> sorted) {
  const auto r = table.index().rank(sorted);
  Vertex best = 0;
  double best_p = 2.0;
  for (Vertex v = 0; v < table.order(); ++v) {
    double p = table.at(r, v);
    if (p < best_p) {
      best_p = p;
      best = v;
    }
  }
  return best;
}

SkResult skFromTable(const ValueTable& table) {
  const auto n = table.order();
  const auto k = table.zombies();
  std::vector<Vertex> zs(k);
  long double total = 0.0L;
  for (std::uint64_t r = 0; r < table.index().count(); ++r) {
    table.index().unrank(r, zs);
    double best = 0.0;
    for (Vertex v = 0; v < n; ++v) best = std::max(best, 1.0 - table.at(r, v));
    total += static_cast<long double>(orderedPlacements(zs)) * best;
  }
  SkResult res;
  res.k = k;
  res.s_k = static_cast<double>(total / std::pow(static_cast<long double>(n), static_cast<long double>(k)));
  res.method = "exact-mdp";
  res.residual = table.residual;
  res.converged = table.converged;
  return res;
}

SkResult skExact(const Graph& g, std::size_t k, const ExactOptions& options) {
  return skFromTable(captureValueTable(g, k, options));
}

ZombieNumberResult zombieNumber(std::size_t cop_number, std::size_t k_max,
                                const SkProvider& provider) {
  if (k_max < cop_number) throw std::invalid_argument("k_max must be >= the cop number");
  ZombieNumberResult out;
  out.cop_number = cop_number;
  std::optional<double> prev;
  for (std::size_t k = std::max<std::size_t>(cop_number, 1); k <= k_max; ++k) {
    auto r = provider(k);
    if (prev && r.s_k > *prev + 1e-9) out.monotone = false;
    prev = r.s_k;
    out.profile[k] = r;
    if (r.s_k <= 0.5 + 1e-9) {
      out.z = k;
      break;
    }
  }
  return out;
}

std::string profileCsv(const std::map<std::size_t, SkResult>& profile) {
  std::ostringstream os;
  os.precision(17);
  os << "k,s_k,method,residual\n";
  for (const auto& [k, r] : profile) os << k << ',' << r.s_k << ',' << r.method << ',' << r.residual << '\n';
  return os.str();
}

namespace {

class TablePolicy final : public SurvivorPolicy {
 public:
  explicit TablePolicy(std::shared_ptr<const ValueTable> t) : table_(std::move(t)) {}

  Vertex chooseStart(const Graph&, std::span<const Vertex> zombies) override {
    return optimalStart(*table_, zombies);
  }

  Vertex chooseMove(const Graph& g, const GameState& st) override {
    const auto r = table_->index().rank(st.zombies);
    Vertex best = st.survivor;
    double best_p = 2.0;
    auto consider = [&](Vertex mv) {
      double p = table_->at(r, mv);
      if (p < best_p || (p == best_p && mv < best)) {
        best_p = p;
        best = mv;
      }
    };
    consider(st.survivor);
    for (Vertex mv : g.neighbors(st.survivor)) consider(mv);
    return best;
  }

 private:
  std::shared_ptr<const ValueTable> table_;
};

class TableStrategy final : public SurvivorStrategy {
 public:
  explicit TableStrategy(std::shared_ptr<const ValueTable> t) : table_(std::move(t)) {}
  std::string name() const override { return "optimal-table"; }
  std::unique_ptr<SurvivorPolicy> newGame(const Graph& g) const override {
    if (g.order() != table_->order()) throw std::invalid_argument("table belongs to another graph");
    return std::make_unique<TablePolicy>(table_);
  }

 private:
  std::shared_ptr<const ValueTable> table_;
};

}  // namespace

std::unique_ptr<SurvivorStrategy> extractOptimalPolicy(std::shared_ptr<const ValueTable> table) {
  return std::make_unique<TableStrategy>(std::move(table));
}

}  // namespace zs
