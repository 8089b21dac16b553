#include "zs/generators.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

#include "zs/rng.hpp"

namespace zs {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string bits(std::size_t v, std::size_t dim) {
  std::string s(dim, '0');
  for (std::size_t j = 0; j < dim; ++j)
    if ((v >> (dim - 1 - j)) & 1U) s[j] = '1';
  return s;
}

std::vector<Edge> ringEdges(std::size_t n) {
  std::vector<Edge> e;
  if (n == 2) return {{0, 1}};
  for (std::size_t i = 0; i < n; ++i)
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return e;
}

std::vector<Edge> productEdges(const Graph& g, const Graph& h) {
  const auto nh = h.order();
  std::vector<Edge> e;
  for (Vertex a = 0; a < g.order(); ++a)
    for (auto [b, d] : h.edges())
      e.emplace_back(static_cast<Vertex>(a * nh + b), static_cast<Vertex>(a * nh + d));
  for (auto [a, c] : g.edges())
    for (Vertex b = 0; b < nh; ++b)
      e.emplace_back(static_cast<Vertex>(a * nh + b), static_cast<Vertex>(c * nh + b));
  return e;
}

std::vector<std::string> cellLabels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      labels.push_back("(" + std::to_string(r) + "," + std::to_string(c) + ")");
  return labels;
}

// Canonical representatives of the projective points of GF(q)^3: the first
// nonzero coordinate is 1.
std::vector<std::array<std::size_t, 3>> projectivePoints(std::size_t q) {
  std::vector<std::array<std::size_t, 3>> pts;
  for (std::size_t b = 0; b < q; ++b)
    for (std::size_t c = 0; c < q; ++c) pts.push_back({1, b, c});
  for (std::size_t c = 0; c < q; ++c) pts.push_back({0, 1, c});
  pts.push_back({0, 0, 1});
  return pts;
}

}  // namespace

bool isPrime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph("cycle(" + std::to_string(n) + ")", n, ringEdges(n),
               {"cycle", {static_cast<long long>(n)}}, std::move(labels));
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i)
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph("path(" + std::to_string(n) + ")", n, std::move(e),
               {"path", {static_cast<long long>(n)}}, std::move(labels));
}

Graph hypercube(std::size_t dim) {
  require(dim >= 1, "hypercube needs n >= 1");
  require(dim <= 24, "hypercube dimension too large");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> e;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) {
    labels.push_back(bits(v, dim));
    for (std::size_t j = 0; j < dim; ++j) {
      std::size_t w = v ^ (std::size_t{1} << j);
      if (v < w) e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  return Graph("hypercube(" + std::to_string(dim) + ")", n, std::move(e),
               {"hypercube", {static_cast<long long>(dim)}}, std::move(labels),
               Metric::Hypercube);
}

Graph cartesianProduct(const Graph& g, const Graph& h) {
  std::vector<std::string> labels;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < h.order(); ++b)
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  FamilyTag tag{"cartesian_product", {}};
  return Graph(g.name() + " x " + h.name(), g.order() * h.order(), productEdges(g, h),
               std::move(tag), std::move(labels));
}

Graph grid(std::size_t n) {
  require(n >= 2, "grid needs n >= 2");
  auto p = path(n);
  return Graph("grid(" + std::to_string(n) + ")", n * n, productEdges(p, p),
               {"grid", {static_cast<long long>(n)}}, cellLabels(n), Metric::Grid);
}

Graph torus(std::size_t n) {
  require(n >= 2, "torus needs n >= 2");
  // Ring factor built directly; cycle() rejects n = 2.
  const std::size_t nn = n * n;
  std::vector<Edge> e;
  for (auto [a, b] : ringEdges(n))
    for (std::size_t r = 0; r < n; ++r) {
      e.emplace_back(static_cast<Vertex>(r * n + a), static_cast<Vertex>(r * n + b));
      e.emplace_back(static_cast<Vertex>(a * n + r), static_cast<Vertex>(b * n + r));
    }
  std::vector<std::string> labels;
  if (nn <= 1u << 16) labels = cellLabels(n);
  return Graph("torus(" + std::to_string(n) + ")", nn, std::move(e),
               {"torus", {static_cast<long long>(n)}}, std::move(labels), Metric::Torus);
}

Graph leafyCycle(std::size_t n) {
  require(n >= 6, "leafy_cycle needs n >= 6");
  auto e = ringEdges(5);
  std::vector<std::string> labels{"v1", "v2", "v3", "v4", "v5"};
  for (std::size_t leaf = 5; leaf < n; ++leaf) {
    e.emplace_back(0, static_cast<Vertex>(leaf));
    labels.push_back("leaf" + std::to_string(leaf - 4));
  }
  return Graph("leafy_cycle(" + std::to_string(n) + ")", n, std::move(e),
               {"leafy_cycle", {static_cast<long long>(n)}}, std::move(labels));
}

Graph projectiveIncidence(std::size_t q) {
  if (!isPrime(q))
    throw std::invalid_argument("projective plane order " + std::to_string(q) +
                                " is not prime; only prime orders are supported");
  const auto pts = projectivePoints(q);
  const std::size_t m = pts.size();
  std::vector<Edge> e;
  std::vector<std::string> labels;
  auto fmt = [](const std::array<std::size_t, 3>& x, char open, char close) {
    return std::string(1, open) + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
           std::to_string(x[2]) + close;
  };
  for (const auto& p : pts) labels.push_back("P" + fmt(p, '(', ')'));
  for (const auto& l : pts) labels.push_back("L" + fmt(l, '[', ']'));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t dot = pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2];
      if (dot % q == 0) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(m + j));
    }
  return Graph("projective_incidence(" + std::to_string(q) + ")", 2 * m, std::move(e),
               {"projective_incidence", {static_cast<long long>(q)}}, std::move(labels));
}

Graph randomTree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  std::vector<Edge> e;
  if (n == 2) e.emplace_back(0, 1);
  if (n > 2) {
    SplitMix64 rng(seed);
    std::vector<std::size_t> pruefer(n - 2);
    for (auto& x : pruefer) x = rng.below(n);
    std::vector<std::size_t> degree(n, 1);
    for (auto x : pruefer) ++degree[x];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (auto x : pruefer) {
      auto leaf = leaves.top();
      leaves.pop();
      e.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(x));
      if (--degree[x] == 1) leaves.push(x);
    }
    auto u = leaves.top();
    leaves.pop();
    auto v = leaves.top();
    e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph("random_tree(" + std::to_string(n) + ")", n, std::move(e),
               {"random_tree", {static_cast<long long>(n), static_cast<long long>(seed)}});
}

Graph generate(const std::string& family_in, const std::vector<long long>& params,
               std::optional<std::uint64_t> seed) {
  std::string family = family_in;
  std::replace(family.begin(), family.end(), '-', '_');
  auto arg = [&](std::size_t i) -> std::size_t {
    if (i >= params.size())
      throw std::invalid_argument(family + ": missing parameter " + std::to_string(i + 1));
    if (params[i] < 0) throw std::invalid_argument(family + ": negative parameter");
    return static_cast<std::size_t>(params[i]);
  };
  if (family == "cycle") return cycle(arg(0));
  if (family == "path") return path(arg(0));
  if (family == "hypercube") return hypercube(arg(0));
  if (family == "grid") return grid(arg(0));
  if (family == "torus") return torus(arg(0));
  if (family == "leafy_cycle") return leafyCycle(arg(0));
  if (family == "projective" || family == "projective_incidence")
    return projectiveIncidence(arg(0));
  if (family == "random_tree") {
    std::uint64_t s = seed.value_or(params.size() > 1 ? static_cast<std::uint64_t>(params[1]) : 0);
    return randomTree(arg(0), s);
  }
  throw std::invalid_argument("unknown graph family '" + family_in + "'");
}

}  // namespace zs
