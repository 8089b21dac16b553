#include "zs/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zs/copnum.hpp"
#include "zs/exact.hpp"
#include "zs/generators.hpp"

namespace zs {

namespace {

BigInt ipow(std::size_t base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt binom(std::size_t n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t winThreshold(std::size_t n) { return (n + 1) / 2 >= 2 ? (n + 1) / 2 - 2 : 0; }

}  // namespace

double toDouble(const Rational& r) { return r.convert_to<double>(); }

std::string toString(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::size_t cycleMinimalArc(std::size_t n, std::span<const Vertex> placement) {
  if (placement.empty()) return 0;
  std::vector<Vertex> p(placement.begin(), placement.end());
  for (auto v : p)
    if (v >= n) throw std::out_of_range("vertex outside the cycle");
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() == 1) return 1;
  std::size_t gap = p.front() + n - p.back();
  for (std::size_t i = 1; i < p.size(); ++i) gap = std::max<std::size_t>(gap, p[i] - p[i - 1]);
  return n - gap + 1;
}

bool cycleSurvivorWins(std::size_t n, std::span<const Vertex> placement) {
  return cycleMinimalArc(n, placement) <= winThreshold(n);
}

Rational cycleSkEnumerate(std::size_t n, std::size_t k) {
  if (n < 3 || k == 0) throw std::invalid_argument("need n >= 3 and k >= 1");
  std::vector<Vertex> p(k, 0);
  std::uint64_t wins = 0;
  while (true) {
    if (cycleSurvivorWins(n, p)) ++wins;
    std::size_t i = 1;
    while (i < k && ++p[i] == n) p[i++] = 0;
    if (i >= k) break;
  }
  return Rational(BigInt(wins) * n, ipow(n, k));
}

Rational cycleSkArcCount(std::size_t n, std::size_t k) {
  if (n < 3 || k == 0) throw std::invalid_argument("need n >= 3 and k >= 1");
  const std::size_t R = winThreshold(n);
  BigInt count = 0;
  for (std::size_t r = 1; r <= R; ++r) {
    if (r == 1) count += n;
    else if (k == 1) continue;
    else count += BigInt(n) * (ipow(r, k) - 2 * ipow(r - 1, k) + ipow(r - 2, k));
  }
  return Rational(count, ipow(n, k));
}

Rational cycleSkCombinatorial(std::size_t n, std::size_t k) {
  if (k == 1) return n == 3 ? Rational(0) : Rational(1);
  return cycleSkArcCount(n, k);
}

std::pair<Rational, Rational> cycleSkBounds(std::size_t n, std::size_t k) {
  if (k < 2) throw std::invalid_argument("bounds need k >= 2");
  Rational lo = Rational(1, 2) - Rational(4, n), hi = Rational(1, 2);
  Rational l = k, u = k;
  for (std::size_t i = 1; i < k; ++i) {
    l *= lo;
    u *= hi;
  }
  return {l, u};
}

std::size_t zombieNumberCycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycles need n >= 3");
  const std::size_t c = *knownCopNumber({"cycle", {static_cast<long long>(n)}});
  const Rational half(1, 2);
  if (n >= 9) {
    for (std::size_t k = c;; ++k)
      if (cycleSkCombinatorial(n, k) <= half) return k;
  }
  auto g = cycle(n);
  for (std::size_t k = c; k <= 8; ++k)
    if (skExact(g, k).s_k <= 0.5 + 1e-9) return k;
  throw std::runtime_error("no zombie number found for a small cycle");
}

Rational hypercubeSk(std::size_t n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("need k >= 1");
  BigInt wins = 0;
  for (std::size_t x = 0; x <= k; ++x) {
    std::size_t lo = std::min(x, k - x), hi = std::max(x, k - x);
    if (n > 2 * lo + hi) wins += binom(k, x);
  }
  return Rational(wins, ipow(2, k));
}

LeafyStats leafyCycleStats(std::size_t n, std::size_t k) {
  if (n < 6) throw std::invalid_argument("leafy cycle needs n >= 6");
  Rational base(n - 5, n), p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= base;
  return {p, std::log(2.0) / 5.0 * static_cast<double>(n)};
}

Band asymptoticBand(const std::string& family, double param, double omega) {
  Band b;
  if (family == "hypercube") {
    b.center = 2.0 * param / 3.0;
    b.low = b.center - std::sqrt(param);
    b.high = b.center + std::sqrt(param);
    b.note = "2n/3 + Theta(sqrt n); unit constant shown";
  } else if (family == "projective_incidence" || family == "projective") {
    b.center = 2.0 * param;
    b.low = b.center - std::sqrt(param);
    b.high = b.center + std::sqrt(param);
    b.note = "2q + Theta(sqrt q); unit constant shown";
  } else if (family == "torus") {
    if (omega <= 0) throw std::invalid_argument("omega must be positive");
    b.low = std::sqrt(param) / (omega * std::log(param));
    b.center = b.low;
    b.high = std::numeric_limits<double>::infinity();
    b.note = "lower bound sqrt(n)/(omega log n); n = number of vertices";
  } else if (family == "leafy_cycle") {
    b.center = b.low = b.high = std::log(2.0) / 5.0 * param;
    b.note = "n ln 2 / 5";
  } else {
    throw std::invalid_argument("no asymptotic band for family " + family);
  }
  return b;
}

}  // namespace zs
