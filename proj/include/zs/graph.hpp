#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zs {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when a computation would exceed its configured state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family name plus integer parameters, e.g. {"torus", {256}}.
struct FamilyTag {
  std::string family;
  std::vector<long long> params;

  bool operator==(const FamilyTag&) const = default;
  std::string to_string() const;
};

/// Dense n x n table of hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> table)
      : n_(n), table_(std::move(table)) {}

  std::size_t order() const { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return table_[std::size_t(u) * n_ + v]; }
  std::span<const std::uint32_t> row(Vertex u) const {
    return {table_.data() + std::size_t(u) * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
};

/// Breadth-first search from every vertex. Throws std::invalid_argument if some
/// pair is unreachable.
DistanceMatrix allPairsDistances(std::span<const std::vector<Vertex>> adjacency);

/// How distances are answered. Families with a closed-form metric skip the
/// quadratic table, which matters for tori with tens of thousands of vertices.
enum class Metric { Table, Torus, Grid, Hypercube };

/// Immutable simple connected graph. Copies share the underlying storage.
class Graph {
 public:
  /// Vertices of graphs above this order get no dense distance table unless
  /// their family has a closed-form metric.
  static constexpr std::size_t kMaxTableOrder = 8192;

  Graph(std::string name, std::size_t n, std::vector<Edge> edges, FamilyTag tag = {},
        std::vector<std::string> labels = {}, Metric metric = Metric::Table);

  const std::string& name() const { return impl_->name; }
  std::size_t order() const { return impl_->adjacency.size(); }
  std::size_t size() const { return impl_->edges.size(); }
  const FamilyTag& family() const { return impl_->tag; }
  Metric metric() const { return impl_->metric; }

  std::span<const Vertex> neighbors(Vertex v) const { return impl_->adjacency[v]; }
  std::size_t degree(Vertex v) const { return impl_->adjacency[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<std::vector<Vertex>>& adjacency() const { return impl_->adjacency; }

  /// Sorted edge list, u < v, lexicographic.
  const std::vector<Edge>& edges() const { return impl_->edges; }
  const std::vector<std::string>& labels() const { return impl_->labels; }
  std::string label(Vertex v) const;

  std::uint32_t distance(Vertex u, Vertex v) const;
  std::uint32_t diameter() const { return impl_->diameter; }

  /// Dense table if one was built (Metric::Table graphs always have one).
  const DistanceMatrix* distanceTable() const {
    return impl_->table ? &*impl_->table : nullptr;
  }

  /// FNV-1a over order and canonical edge list.
  std::uint64_t hash() const { return impl_->hash; }
  std::string hashHex() const;

  nlohmann::json toJson() const;
  static Graph fromJson(const nlohmann::json& j);

 private:
  struct Impl {
    std::string name;
    FamilyTag tag;
    Metric metric = Metric::Table;
    std::size_t side = 0;  // torus/grid side length, hypercube dimension
    std::vector<std::vector<Vertex>> adjacency;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::optional<DistanceMatrix> table;
    std::uint32_t diameter = 0;
    std::uint64_t hash = 0;
  };
  std::shared_ptr<const Impl> impl_;
};

struct ValidationReport {
  bool connected = false;
  bool bipartite = false;
  std::optional<std::size_t> regular_degree;
  std::optional<std::size_t> girth;  // nullopt for acyclic graphs
  std::size_t order = 0;
  std::size_t size = 0;

  nlohmann::json toJson() const;
};

/// Structural report. Girth is exact (BFS from every vertex).
ValidationReport validate(const Graph& g);
ValidationReport validate(std::span<const std::vector<Vertex>> adjacency);

std::string toHex(std::uint64_t x);
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace zs
