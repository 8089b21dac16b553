#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zs/engine.hpp"
#include "zs/exact.hpp"

namespace zs {

/// Start on the 2-core where zombies are least likely to arrive from every side
/// (expected number of neighbours that no zombie enters through), then farthest
/// from the nearest zombie. Moves keep two steps from every zombie, prefer the
/// 2-core (trees hanging off it are traps), then maximise the distance to the
/// nearest zombie. Ties go to the smallest vertex id.
std::unique_ptr<SurvivorStrategy> greedyEvade();

/// Hypercube escape by coordinate flips; stays put until a zombie is adjacent.
std::unique_ptr<SurvivorStrategy> hypercubeParity();

/// Projective incidence graphs: start on a point far from every zombie and keep
/// moving to neighbours that no zombie guards.
std::unique_ptr<SurvivorStrategy> incidenceEscape();

/// Probability that a zombie at z, walking geodesically to v, enters v from
/// each neighbour of v (aligned with g.neighbors(v)).
std::vector<double> entryDistribution(const Graph& g, Vertex z, Vertex v);

/// Smallest-index coordinate (1 = most significant bit) the parity strategy may
/// flip at `s`, or 0 if every coordinate is forbidden.
std::size_t parityFreeCoordinate(std::size_t dim, Vertex s, std::span<const Vertex> zombies);

struct StrategyContext {
  std::size_t k = 1;
  ExactOptions exact;  // for optimal-table
};

/// greedy | parity | incidence | torus-boxed | optimal-table
std::unique_ptr<SurvivorStrategy> makeStrategy(const std::string& name, const Graph& g,
                                               const StrategyContext& ctx);
std::vector<std::string> strategyNames();

}  // namespace zs
