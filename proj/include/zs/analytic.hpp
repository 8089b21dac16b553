#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "zs/graph.hpp"

namespace zs {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double toDouble(const Rational& r);
std::string toString(const Rational& r);  // "p/q", or "p" when q = 1

/// Vertices in the shortest run of consecutive cycle vertices holding every
/// zombie.
std::size_t cycleMinimalArc(std::size_t n, std::span<const Vertex> placement);

/// Survivor wins on C_n iff the minimal covering arc has at most ceil(n/2)-2
/// vertices. Exact for n >= 9; smaller cycles belong to the MDP solver.
bool cycleSurvivorWins(std::size_t n, std::span<const Vertex> placement);

/// s_k(C_n) by enumerating placements (first zombie fixed by rotation).
Rational cycleSkEnumerate(std::size_t n, std::size_t k);
/// s_k(C_n) by counting placements with covering arc of each size r.
Rational cycleSkArcCount(std::size_t n, std::size_t k);
/// The arc-count value; k = 1 gives 0 on C_3 and 1 otherwise.
Rational cycleSkCombinatorial(std::size_t n, std::size_t k);

/// k (1/2 - 4/n)^(k-1) and k (1/2)^(k-1).
std::pair<Rational, Rational> cycleSkBounds(std::size_t n, std::size_t k);

/// z(C_n). Uses the arc count for n >= 9 and the exact solver below that.
std::size_t zombieNumberCycle(std::size_t n);

/// Survival probability on Q_n when X ~ Bin(k, 1/2) zombies start on even
/// vertices and the survivor wins iff n > 2 min(X, k-X) + max(X, k-X).
Rational hypercubeSk(std::size_t n, std::size_t k);

struct LeafyStats {
  Rational p_all_leaves;  // (1 - 5/n)^k
  double z_asymptotic;    // n ln 2 / 5
};
LeafyStats leafyCycleStats(std::size_t n, std::size_t k);

struct Band {
  double center = 0.0;
  double low = 0.0;
  double high = 0.0;
  std::string note;
};
/// Reference band for z at large parameter; annotation only, no finite-size claim.
Band asymptoticBand(const std::string& family, double param, double omega = 1.0);

}  // namespace zs
