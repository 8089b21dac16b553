#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "zs/graph.hpp"

namespace zs {

/// Dense ranking of sorted k-multisets over {0..n-1}. A multiset z_0 <= ... <=
/// z_{k-1} maps to the strictly increasing combination c_i = z_i + i over
/// {0..n+k-2}, ranked in colexicographic order.
class MultisetIndex {
 public:
  MultisetIndex(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::uint64_t count() const { return count_; }

  std::uint64_t rank(std::span<const Vertex> sorted) const;
  void unrank(std::uint64_t r, std::span<Vertex> out) const;

  /// Number of k-multisets over n symbols, or UINT64_MAX on overflow.
  static std::uint64_t multisetCount(std::size_t n, std::size_t k);

 private:
  std::uint64_t binom(std::size_t a, std::size_t b) const {
    return b > a ? 0 : table_[a * (k_ + 1) + b];
  }
  std::size_t n_, k_;
  std::uint64_t count_;
  std::vector<std::uint64_t> table_;  // binom(a, b) for a < n+k, b <= k
};

/// Multinomial coefficient k! / prod(mult!) for a sorted multiset.
double orderedPlacements(std::span<const Vertex> sorted);

}  // namespace zs
