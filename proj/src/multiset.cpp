#include "zs/multiset.hpp"

#include <limits>

namespace zs {

std::uint64_t MultisetIndex::multisetCount(std::size_t n, std::size_t k) {
  // C(n+k-1, k) with overflow detection.
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n + i - 1) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

MultisetIndex::MultisetIndex(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (n == 0) throw std::invalid_argument("empty alphabet");
  count_ = multisetCount(n, k);
  if (count_ == std::numeric_limits<std::uint64_t>::max())
    throw BudgetExceeded("multiset count overflows 64 bits");
  const std::size_t rows = n + k;
  table_.assign(rows * (k + 1), 0);
  for (std::size_t a = 0; a < rows; ++a) {
    table_[a * (k + 1)] = 1;
    for (std::size_t b = 1; b <= k && b <= a; ++b)
      table_[a * (k + 1) + b] = table_[(a - 1) * (k + 1) + b - 1] +
                                (b <= a - 1 ? table_[(a - 1) * (k + 1) + b] : 0);
  }
}

std::uint64_t MultisetIndex::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i] + i, i + 1);
  return r;
}

void MultisetIndex::unrank(std::uint64_t r, std::span<Vertex> out) const {
  for (std::size_t i = k_; i-- > 0;) {
    // Largest c with binom(c, i+1) <= r.
    std::size_t lo = i, hi = n_ + k_ - 1;
    while (lo + 1 < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (binom(mid, i + 1) <= r) lo = mid;
      else hi = mid;
    }
    r -= binom(lo, i + 1);
    out[i] = static_cast<Vertex>(lo - i);
  }
}

double orderedPlacements(std::span<const Vertex> sorted) {
  double ways = 1.0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
    ways = ways * static_cast<double>(i + 1) / static_cast<double>(run);
  }
  return ways;
}

}  // namespace zs
