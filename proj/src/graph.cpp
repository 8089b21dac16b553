#include "zs/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <deque>
#include <limits>
#include <sstream>

namespace zs {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::uint32_t wrapDistance(std::size_t a, std::size_t b, std::size_t n) {
  std::size_t d = a > b ? a - b : b - a;
  return static_cast<std::uint32_t>(std::min(d, n - d));
}

}  // namespace

std::string FamilyTag::to_string() const {
  std::string s = family;
  for (auto p : params) s += " " + std::to_string(p);
  return s;
}

std::string toHex(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

DistanceMatrix allPairsDistances(std::span<const std::vector<Vertex>> adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::uint32_t> table(n * n, kUnreached);
  std::vector<Vertex> queue(n);
  for (Vertex src = 0; src < n; ++src) {
    auto* row = table.data() + std::size_t(src) * n;
    std::size_t head = 0, tail = 0;
    row[src] = 0;
    queue[tail++] = src;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : adjacency[u]) {
        if (row[w] == kUnreached) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      auto it = std::find(row, row + n, kUnreached);
      throw std::invalid_argument("graph is disconnected: vertex " +
                                  std::to_string(it - row) + " unreachable from " +
                                  std::to_string(src));
    }
  }
  return DistanceMatrix(n, std::move(table));
}

Graph::Graph(std::string name, std::size_t n, std::vector<Edge> edges, FamilyTag tag,
             std::vector<std::string> labels, Metric metric) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  if (!labels.empty() && labels.size() != n)
    throw std::invalid_argument("label count does not match vertex count");
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->tag = std::move(tag);
  impl->metric = metric;
  impl->labels = std::move(labels);

  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("parallel edge");
  impl->edges = std::move(edges);

  impl->adjacency.assign(n, {});
  for (auto [u, v] : impl->edges) {
    impl->adjacency[u].push_back(v);
    impl->adjacency[v].push_back(u);
  }
  for (auto& adj : impl->adjacency) std::sort(adj.begin(), adj.end());

  switch (metric) {
    case Metric::Torus:
    case Metric::Grid: {
      std::size_t side = 0;
      while (side * side < n) ++side;
      if (side * side != n) throw std::invalid_argument("grid metric needs a square order");
      impl->side = side;
      break;
    }
    case Metric::Hypercube: {
      if (!std::has_single_bit(n)) throw std::invalid_argument("hypercube order must be 2^d");
      impl->side = std::countr_zero(n);
      break;
    }
    case Metric::Table:
      break;
  }

  if (metric == Metric::Table || n <= kMaxTableOrder) {
    if (metric == Metric::Table && n > kMaxTableOrder)
      throw BudgetExceeded("graph of order " + std::to_string(n) +
                           " too large for a dense distance table");
    impl->table = allPairsDistances(impl->adjacency);
    std::uint32_t diam = 0;
    for (Vertex u = 0; u < n; ++u)
      for (auto d : impl->table->row(u)) diam = std::max(diam, d);
    impl->diameter = diam;
  } else {
    // Connectivity check without the quadratic table.
    std::vector<char> seen(n, 0);
    std::deque<Vertex> q{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : impl->adjacency[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          q.push_back(w);
        }
    }
    if (count != n) throw std::invalid_argument("graph is disconnected");
    switch (metric) {
      case Metric::Torus: impl->diameter = 2 * (impl->side / 2); break;
      case Metric::Grid: impl->diameter = 2 * (impl->side - 1); break;
      case Metric::Hypercube: impl->diameter = impl->side; break;
      case Metric::Table: break;
    }
  }

  std::string canon = std::to_string(n) + ";";
  for (auto [u, v] : impl->edges) canon += std::to_string(u) + "," + std::to_string(v) + ";";
  impl->hash = fnv1a(canon);
  impl_ = std::move(impl);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::label(Vertex v) const {
  return impl_->labels.empty() ? std::to_string(v) : impl_->labels[v];
}

std::uint32_t Graph::distance(Vertex u, Vertex v) const {
  if (impl_->table) return (*impl_->table)(u, v);
  const std::size_t s = impl_->side;
  switch (impl_->metric) {
    case Metric::Torus:
      return wrapDistance(u / s, v / s, s) + wrapDistance(u % s, v % s, s);
    case Metric::Grid: {
      auto dr = std::max(u / s, v / s) - std::min(u / s, v / s);
      auto dc = std::max(u % s, v % s) - std::min(u % s, v % s);
      return static_cast<std::uint32_t>(dr + dc);
    }
    case Metric::Hypercube:
      return static_cast<std::uint32_t>(std::popcount(u ^ v));
    case Metric::Table:
      break;
  }
  throw std::logic_error("no distance table");
}

std::string Graph::hashHex() const { return toHex(hash()); }

nlohmann::json Graph::toJson() const {
  nlohmann::json j;
  j["name"] = name();
  j["n"] = order();
  auto edges_json = nlohmann::json::array();
  for (auto [u, v] : edges()) edges_json.push_back({u, v});
  j["edges"] = std::move(edges_json);
  if (!labels().empty()) j["labels"] = labels();
  if (!family().family.empty())
    j["family"] = {{"name", family().family}, {"params", family().params}};
  return j;
}

Graph Graph::fromJson(const nlohmann::json& j) {
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u, v]");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  FamilyTag tag;
  Metric metric = Metric::Table;
  if (j.contains("family")) {
    tag.family = j["family"].at("name").get<std::string>();
    tag.params = j["family"].at("params").get<std::vector<long long>>();
    if (tag.family == "torus") metric = Metric::Torus;
    else if (tag.family == "grid") metric = Metric::Grid;
    else if (tag.family == "hypercube") metric = Metric::Hypercube;
  }
  return Graph(j.value("name", std::string("graph")), n, std::move(edges), std::move(tag),
               std::move(labels), metric);
}

nlohmann::json ValidationReport::toJson() const {
  nlohmann::json j;
  j["connected"] = connected;
  j["bipartite"] = bipartite;
  j["regular_degree"] = regular_degree ? nlohmann::json(*regular_degree) : nlohmann::json();
  j["girth"] = girth ? nlohmann::json(*girth) : nlohmann::json();
  j["order"] = order;
  j["size"] = size;
  return j;
}

ValidationReport validate(std::span<const std::vector<Vertex>> adj) {
  ValidationReport r;
  const std::size_t n = adj.size();
  r.order = n;
  std::size_t deg_sum = 0;
  for (const auto& a : adj) deg_sum += a.size();
  r.size = deg_sum / 2;
  if (n == 0) return r;

  bool regular = true;
  for (const auto& a : adj) regular = regular && a.size() == adj[0].size();
  if (regular) r.regular_degree = adj[0].size();

  // Components, bipartiteness via 2-colouring.
  std::vector<int> colour(n, -1);
  std::size_t components = 0;
  r.bipartite = true;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    ++components;
    colour[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : adj[u]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          q.push_back(w);
        } else if (colour[w] == colour[u]) {
          r.bipartite = false;
        }
      }
    }
  }
  r.connected = components == 1;

  // Shortest cycle through each BFS root: a non-tree edge (u,w) closes a cycle of
  // length dist[u] + dist[w] + 1; the minimum over all roots is the girth.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    parent[s] = s;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      if (2 * std::size_t(dist[u]) + 1 >= best) break;
      for (Vertex w : adj[u]) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          best = std::min<std::size_t>(best, std::size_t(dist[u]) + dist[w] + 1);
        }
      }
    }
  }
  if (best != std::numeric_limits<std::size_t>::max()) r.girth = best;
  return r;
}

ValidationReport validate(const Graph& g) { return validate(g.adjacency()); }

}  // namespace zs
