#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zs/graph.hpp"

namespace zs {

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph hypercube(std::size_t dim);
Graph cartesianProduct(const Graph& g, const Graph& h);
/// P_n x P_n, vertex id r*n + c.
Graph grid(std::size_t n);
/// C_n x C_n, vertex id r*n + c. For n = 2 the factor is K_2.
Graph torus(std::size_t n);
/// 5-cycle v1..v5 (ids 0..4) with n-5 leaves hanging off v1.
Graph leafyCycle(std::size_t n);
/// Incidence graph of the projective plane over GF(q), q prime. Points are ids
/// 0..q^2+q, lines follow.
Graph projectiveIncidence(std::size_t q);
/// Uniform labelled tree via a seeded Pruefer sequence.
Graph randomTree(std::size_t n, std::uint64_t seed);

bool isPrime(std::size_t q);

/// Dispatch by family name ("cycle", "path", "hypercube", "grid", "torus",
/// "leafy_cycle", "projective_incidence", "random_tree"). Hyphenated aliases
/// and the short name "projective" are accepted.
Graph generate(const std::string& family, const std::vector<long long>& params,
               std::optional<std::uint64_t> seed = std::nullopt);

/// Torus coordinates for vertex ids produced by torus()/grid().
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
};
inline Cell cellOf(Vertex v, std::size_t side) { return {v / side, v % side}; }
inline Vertex vertexOf(Cell c, std::size_t side) {
  return static_cast<Vertex>(c.row * side + c.col);
}

/// Number of points (= number of lines) of the plane of order q.
inline std::size_t projectivePointCount(std::size_t q) { return q * q + q + 1; }

}  // namespace zs
