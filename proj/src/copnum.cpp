#include "zs/copnum.hpp"

#include <algorithm>

#include "zs/multiset.hpp"

namespace zs {

CopGameResult copsWin(const Graph& g, std::size_t k, std::uint64_t state_budget) {
  if (k == 0) throw std::invalid_argument("need at least one cop");
  const std::size_t n = g.order();
  if (MultisetIndex::multisetCount(n, k) > state_budget / n)
    throw BudgetExceeded("cop game with " + std::to_string(k) + " cops exceeds the state budget");
  MultisetIndex idx(n, k);
  const std::uint64_t m = idx.count();

  std::vector<std::vector<Vertex>> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    closed[v].push_back(v);
  }

  // Distinct successor configurations of every cop configuration.
  std::vector<std::vector<std::uint32_t>> moves(m);
  std::vector<Vertex> c(k), cur(k);
  std::vector<std::size_t> pos(k);
  for (std::uint64_t r = 0; r < m; ++r) {
    idx.unrank(r, c);
    std::fill(pos.begin(), pos.end(), 0);
    auto& out = moves[r];
    while (true) {
      for (std::size_t i = 0; i < k; ++i) cur[i] = closed[c[i]][pos[i]];
      std::sort(cur.begin(), cur.end());
      out.push_back(static_cast<std::uint32_t>(idx.rank(cur)));
      std::size_t i = 0;
      while (i < k && ++pos[i] == closed[c[i]].size()) pos[i++] = 0;
      if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  std::vector<char> occupied(m * n, 0);
  for (std::uint64_t r = 0; r < m; ++r) {
    idx.unrank(r, c);
    for (Vertex v : c) occupied[r * n + v] = 1;
  }

  // cops_turn[C*n+r]: cops to move and win. robber_turn: robber to move, cops win.
  std::vector<char> cops_turn = occupied, robber_turn = occupied;
  CopGameResult res;
  res.k = k;
  res.states = m * n;
  bool changed = true;
  while (changed) {
    changed = false;
    ++res.iterations;
    for (std::uint64_t C = 0; C < m; ++C)
      for (Vertex r = 0; r < n; ++r) {
        auto s = C * n + r;
        if (robber_turn[s]) continue;
        bool all = true;
        for (Vertex w : closed[r])
          if (!cops_turn[C * n + w]) {
            all = false;
            break;
          }
        if (all) robber_turn[s] = changed = true;
      }
    for (std::uint64_t C = 0; C < m; ++C)
      for (Vertex r = 0; r < n; ++r) {
        auto s = C * n + r;
        if (cops_turn[s]) continue;
        for (auto D : moves[C])
          if (robber_turn[D * n + r]) {
            cops_turn[s] = changed = true;
            break;
          }
      }
  }

  for (std::uint64_t C = 0; C < m; ++C) {
    bool all = true;
    for (Vertex r = 0; r < n && all; ++r) all = cops_turn[C * n + r];
    if (all) {
      res.cop_win = true;
      idx.unrank(C, c);
      res.placement = c;
      break;
    }
  }
  return res;
}

std::size_t copNumber(const Graph& g, std::size_t k_max, std::uint64_t state_budget) {
  for (std::size_t k = 1; k <= k_max; ++k)
    if (copsWin(g, k, state_budget).cop_win) return k;
  throw std::runtime_error("cop number of " + g.name() + " exceeds " + std::to_string(k_max));
}

std::optional<std::size_t> knownCopNumber(const FamilyTag& tag) {
  const auto& f = tag.family;
  auto p = [&](std::size_t i) -> long long { return i < tag.params.size() ? tag.params[i] : -1; };
  if (f == "cycle") {
    if (p(0) == 3) return 1;
    if (p(0) >= 4) return 2;
    return std::nullopt;
  }
  if (f == "path" || f == "tree" || f == "random_tree") return 1;
  if (f == "hypercube" && p(0) >= 1) return static_cast<std::size_t>((p(0) + 2) / 2);
  if (f == "projective_incidence" && p(0) >= 2) return static_cast<std::size_t>(p(0) + 1);
  if (f == "grid" && p(0) >= 2) return 2;
  if (f == "torus" && p(0) >= 4) return 3;
  if (f == "leafy_cycle" && p(0) >= 6) return 2;
  return std::nullopt;
}

}  // namespace zs
