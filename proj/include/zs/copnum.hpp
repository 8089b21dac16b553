#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zs/graph.hpp"

namespace zs {

struct CopGameResult {
  std::size_t k = 0;
  bool cop_win = false;
  std::optional<std::vector<Vertex>> placement;  // a winning cop start, sorted
  std::uint64_t states = 0;
  std::uint64_t iterations = 0;
};

/// Classical cops and robber with k cops: cops place first, the robber places
/// knowing them, cops move first each round, both sides may pass.
CopGameResult copsWin(const Graph& g, std::size_t k, std::uint64_t state_budget = 20'000'000);

/// Smallest k <= k_max with copsWin. Throws if none.
std::size_t copNumber(const Graph& g, std::size_t k_max = 4,
                      std::uint64_t state_budget = 20'000'000);

/// Registered cop numbers for generator families.
std::optional<std::size_t> knownCopNumber(const FamilyTag& tag);

}  // namespace zs
