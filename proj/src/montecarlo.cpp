#include "zs/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "zs/parallel.hpp"

namespace zs {

Interval wilsonInterval(std::uint64_t wins, std::uint64_t samples, double confidence) {
  if (samples == 0 || wins > samples) throw std::invalid_argument("wilsonInterval needs 0 <= wins <= samples >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");
  const double z = boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2.0);
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(wins) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  Interval iv{std::max(0.0, centre - half), std::min(1.0, centre + half)};
  if (wins == 0) iv.low = 0.0;
  if (wins == samples) iv.high = 1.0;
  iv.low = std::min(iv.low, p);
  iv.high = std::max(iv.high, p);
  return iv;
}

std::uint64_t defaultCutoff(const Graph& g) {
  const auto& t = g.family();
  std::uint64_t n = g.order();
  if ((t.family == "torus" || t.family == "grid") && !t.params.empty()) n = static_cast<std::uint64_t>(t.params[0]);
  return 4 * n * std::max<std::uint32_t>(1, g.diameter());
}

nlohmann::json EstimateResult::toJson() const {
  return {{"k", k},
          {"strategy", strategy},
          {"samples", samples},
          {"wins", wins},
          {"captures", captures},
          {"censored", censored},
          {"censored_as_win", censored_as_win},
          {"forfeits", forfeits},
          {"estimate", estimate},
          {"ci_low", ci.low},
          {"ci_high", ci.high},
          {"confidence", confidence},
          {"cutoff", cutoff},
          {"seed", seed},
          {"horizon_limited", censored > 0},
          {"runtime_seconds", runtime_seconds}};
}

EstimateResult estimateSk(const Graph& g, std::size_t k, const SurvivorStrategy& strategy,
                          const McOptions& opt) {
  if (opt.samples == 0) throw std::invalid_argument("samples must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  EstimateResult r;
  r.k = k;
  r.strategy = strategy.name();
  r.samples = opt.samples;
  r.cutoff = opt.cutoff ? opt.cutoff : defaultCutoff(g);
  r.seed = opt.seed;
  r.confidence = opt.confidence;
  r.censored_as_win = !opt.censored_as_loss;

  // 0 = captured, 1 = censored, 2 = forfeited.
  std::vector<std::uint8_t> outcome(opt.samples);
  PlayOptions play;
  play.record_rounds = false;
  parallelFor(opt.samples, opt.threads, 64, [&](std::size_t lo, std::size_t hi) {
    PlayOptions local = play;
    for (std::size_t i = lo; i < hi; ++i) {
      local.game_index = i;
      auto t = playGame(g, k, strategy, opt.seed, r.cutoff, local);
      outcome[i] = t.forfeited ? 2 : t.captured ? 0 : 1;
    }
  });
  for (auto o : outcome) {
    r.censored += o == 1;
    r.forfeits += o == 2;
  }
  r.wins = opt.censored_as_loss ? 0 : r.censored;
  r.captures = r.samples - r.wins;
  r.estimate = static_cast<double>(r.wins) / static_cast<double>(r.samples);
  r.ci = wilsonInterval(r.wins, r.samples, opt.confidence);
  r.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ZombieNumberEstimate zombieNumberMC(const Graph& g, const StrategyFactory& strategy,
                                    std::size_t k_lo, std::size_t k_hi, const McOptions& opt) {
  if (k_lo == 0 || k_lo > k_hi) throw std::invalid_argument("need 1 <= k_lo <= k_hi");
  ZombieNumberEstimate out;
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    auto st = strategy(k);
    auto r = estimateSk(g, k, *st, opt);
    if (r.ci.high <= 0.5) {
      if (!out.z) out.z = k;
    } else if (r.ci.low > 0.5) {
      out.last_above = k;
    } else {
      out.undecided.push_back(k);
    }
    out.profile.emplace(k, std::move(r));
  }
  return out;
}

std::string estimateCsvHeader() {
  return "graph_hash,family,n,k,strategy,samples,cutoff,wins,estimate,ci_low,ci_high,seed";
}

std::string estimateCsvRow(const Graph& g, const EstimateResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << g.hashHex() << ',' << g.family().to_string() << ',' << g.order() << ',' << r.k << ','
     << r.strategy << ',' << r.samples << ',' << r.cutoff << ',' << r.wins << ',' << r.estimate
     << ',' << r.ci.low << ',' << r.ci.high << ',' << r.seed;
  return os.str();
}

}  // namespace zs
