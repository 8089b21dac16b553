#include "zs/commands.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "zs/analytic.hpp"
#include "zs/copnum.hpp"
#include "zs/exact.hpp"
#include "zs/generators.hpp"
#include "zs/montecarlo.hpp"
#include "zs/strategies.hpp"

namespace zs {

using nlohmann::json;

namespace {

template <typename T>
T get(const json& p, const char* key, T fallback) {
  auto it = p.find(key);
  if (it == p.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("parameter '") + key + "' has the wrong type");
  }
}

std::size_t need(const json& p, const char* key) {
  if (!p.contains(key) || p[key].is_null()) throw UsageError(std::string("missing parameter '") + key + "'");
  return get<std::size_t>(p, key, 0);
}

std::string utcNow() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stripTiming(json& j) {
  if (j.is_object()) {
    j.erase("runtime_seconds");
    for (auto& [k, v] : j.items()) stripTiming(v);
  } else if (j.is_array()) {
    for (auto& v : j) stripTiming(v);
  }
}

ExactOptions exactOptions(const json& p) {
  ExactOptions o;
  o.tol = get<double>(p, "tol", o.tol);
  o.threads = get<unsigned>(p, "threads", 1);
  o.state_budget = get<std::uint64_t>(p, "state_budget", o.state_budget);
  o.max_iters = get<std::uint64_t>(p, "max_iters", o.max_iters);
  return o;
}

McOptions mcOptions(const json& p) {
  McOptions o;
  o.samples = get<std::uint64_t>(p, "samples", o.samples);
  o.cutoff = get<std::uint64_t>(p, "cutoff", 0);
  o.seed = get<std::uint64_t>(p, "seed", o.seed);
  o.confidence = get<double>(p, "confidence", o.confidence);
  o.threads = get<unsigned>(p, "threads", 1);
  o.censored_as_loss = get<bool>(p, "censored_as_loss", false);
  if (o.samples == 0) throw UsageError("samples must be at least 1");
  if (!(o.confidence > 0 && o.confidence < 1)) throw UsageError("confidence must lie in (0, 1)");
  return o;
}

json skJson(const SkResult& r) {
  return {{"k", r.k}, {"s_k", r.s_k}, {"method", r.method}, {"residual", r.residual},
          {"converged", r.converged}};
}

// Closed-form value where one is known for this family.
std::optional<Rational> closedForm(const Graph& g, std::size_t k) {
  const auto& t = g.family();
  if (t.params.empty()) return std::nullopt;
  const auto a = static_cast<std::size_t>(t.params[0]);
  if (t.family == "cycle" && a >= 9) return cycleSkCombinatorial(a, k);
  if (t.family == "hypercube" && ((a == 3 && k == 2) || (a == 4 && k == 3))) return hypercubeSk(a, k);
  return std::nullopt;
}

json cmdGen(const Graph& g) {
  return {{"graph", g.toJson()}, {"validation", validate(g).toJson()}};
}

json cmdSolve(const Graph& g, const json& p) {
  const std::size_t k = need(p, "k");
  if (k == 0) throw UsageError("k must be at least 1");
  const auto opt = exactOptions(p);
  const auto cache = get<std::string>(p, "cache", "");
  std::optional<ValueTable> table;
  if (!cache.empty() && std::filesystem::exists(cache)) {
    auto t = ValueTable::load(cache);
    if (t.graph_hash == g.hashHex() && t.zombies() == k && t.tol <= opt.tol) table = std::move(t);
  }
  if (!table) {
    table = captureValueTable(g, k, opt);
    if (!cache.empty()) table->save(cache);
  }
  auto r = skFromTable(*table);
  json out = skJson(r);
  out["iterations"] = table->iterations;
  out["states"] = table->stateCount();
  out["certain_escape"] = table->certain_escape;
  out["certain_capture"] = table->certain_capture;
  out["tol"] = opt.tol;
  if (auto cf = closedForm(g, k)) {
    out["closed_form"] = toString(*cf);
    out["closed_form_value"] = toDouble(*cf);
  }
  return out;
}

std::size_t copNumberOf(const Graph& g, const json& p) {
  if (auto known = knownCopNumber(g.family())) return *known;
  return copNumber(g, get<std::size_t>(p, "cop_k_max", 4));
}

std::unique_ptr<SurvivorStrategy> strategyFor(const Graph& g, const json& p, std::size_t k) {
  StrategyContext ctx;
  ctx.k = k;
  ctx.exact = exactOptions(p);
  return makeStrategy(get<std::string>(p, "strategy", "greedy"), g, ctx);
}

json cmdZombieNumber(const Graph& g, const json& p) {
  const auto method = get<std::string>(p, "method", "auto");
  if (method != "auto" && method != "exact" && method != "mc") throw UsageError("method must be auto, exact or mc");
  const std::size_t c = copNumberOf(g, p);
  const std::size_t k_max = get<std::size_t>(p, "k_max", std::max<std::size_t>(8, c + 4));
  json out{{"cop_number", c}};

  if (method != "mc") {
    try {
      const auto opt = exactOptions(p);
      auto r = zombieNumber(c, k_max, [&](std::size_t k) {
        if (auto cf = closedForm(g, k); cf && g.family().family == "cycle") {
          SkResult s;
          s.k = k;
          s.s_k = toDouble(*cf);
          s.method = "combinatorial";
          return s;
        }
        return skExact(g, k, opt);
      });
      out["method"] = "exact";
      out["monotone"] = r.monotone;
      json prof = json::array();
      for (auto& [k, s] : r.profile) prof.push_back(skJson(s));
      out["profile"] = prof;
      if (r.z) {
        out["z"] = *r.z;
        out["Z"] = static_cast<double>(*r.z) / static_cast<double>(c);
        out["Z_ratio"] = std::to_string(*r.z) + "/" + std::to_string(c);
      } else {
        out["z"] = nullptr;
      }
      return out;
    } catch (const BudgetExceeded&) {
      if (method == "exact") throw;
    }
  }

  auto mc = mcOptions(p);
  auto est = zombieNumberMC(g, [&](std::size_t k) { return strategyFor(g, p, k); }, c, k_max, mc);
  out["method"] = "monte-carlo";
  json prof = json::array();
  for (auto& [k, r] : est.profile) prof.push_back(r.toJson());
  out["profile"] = prof;
  out["z"] = est.z ? json(*est.z) : json(nullptr);
  if (est.z) out["Z"] = static_cast<double>(*est.z) / static_cast<double>(c);
  out["last_above"] = est.last_above ? json(*est.last_above) : json(nullptr);
  out["undecided"] = est.undecided;
  out["horizon_limited"] = true;
  return out;
}

json cmdCopNumber(const Graph& g, const json& p) {
  const auto k_max = get<std::size_t>(p, "k_max", 4);
  json out;
  if (auto known = knownCopNumber(g.family())) out["registry"] = *known;
  else out["registry"] = nullptr;
  const auto budget = get<std::uint64_t>(p, "state_budget", 20'000'000);
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto r = copsWin(g, k, budget);
    if (r.cop_win) {
      out["c"] = k;
      out["method"] = "attractor";
      out["states"] = r.states;
      if (r.placement) out["placement"] = *r.placement;
      return out;
    }
  }
  throw UsageError("no cop strategy with at most " + std::to_string(k_max) + " cops");
}

json cmdSimulate(const Graph& g, const json& p) {
  const std::size_t k = need(p, "k");
  if (k == 0) throw UsageError("k must be at least 1");
  auto st = strategyFor(g, p, k);
  auto r = estimateSk(g, k, *st, mcOptions(p));
  json out = r.toJson();
  if (r.censored > 0) out["note"] = "survival to the cutoff counted as " + std::string(r.censored_as_win ? "a win" : "a loss");
  return out;
}

json cmdFormulas(const Graph& g, const json& p) {
  const auto& t = g.family();
  if (t.params.empty()) throw UsageError("formulas need a generated family");
  const auto a = static_cast<std::size_t>(t.params[0]);
  const auto k = get<std::size_t>(p, "k", 0);
  json out{{"family", t.family}, {"param", a}};
  auto rat = [](const Rational& r) { return json{{"exact", toString(r)}, {"value", toDouble(r)}}; };
  if (t.family == "cycle") {
    out["z"] = zombieNumberCycle(a);
    out["c"] = knownCopNumber(t).value_or(0);
    if (k >= 1) {
      out["s_k"] = rat(cycleSkCombinatorial(a, k));
      if (a >= 9 && k >= 2) {
        auto [lo, hi] = cycleSkBounds(a, k);
        out["lower_bound"] = rat(lo);
        out["upper_bound"] = rat(hi);
      }
      if (a < 9) out["note"] = "closed form holds for n >= 9; use solve below that";
    }
  } else if (t.family == "hypercube") {
    if (k >= 1) out["s_k"] = rat(hypercubeSk(a, k));
    out["c"] = knownCopNumber(t).value_or(0);
  } else if (t.family == "leafy_cycle") {
    if (k >= 1) {
      auto s = leafyCycleStats(a, k);
      out["p_all_leaves"] = rat(s.p_all_leaves);
    }
  }
  try {
    const bool by_order = t.family == "torus" || t.family == "leafy_cycle";
    const double param = static_cast<double>(by_order ? g.order() : a);
    auto b = asymptoticBand(t.family, param, get<double>(p, "omega", 1.0));
    out["asymptotic_band"] = {{"center", b.center}, {"low", b.low},
                              {"high", std::isinf(b.high) ? json("inf") : json(b.high)}, {"note", b.note}};
  } catch (const std::invalid_argument&) {
  }
  return out;
}

}  // namespace

Graph graphFromParams(const json& desc) {
  if (!desc.is_object()) throw UsageError("missing graph: give a family or a graph file");
  if (desc.contains("file")) {
    const auto path = desc["file"].get<std::string>();
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read graph file " + path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw UsageError("graph file " + path + ": " + e.what());
    }
    if (j.contains("result") && j["result"].contains("graph")) j = j["result"]["graph"];
    return Graph::fromJson(j);
  }
  if (!desc.contains("family")) throw UsageError("missing graph: give a family or a graph file");
  std::optional<std::uint64_t> seed;
  if (desc.contains("seed") && !desc["seed"].is_null()) seed = desc["seed"].get<std::uint64_t>();
  return generate(desc["family"].get<std::string>(), get<std::vector<long long>>(desc, "params", {}), seed);
}

std::string resultDigest(const json& result) {
  json copy = result;
  stripTiming(copy);
  return toHex(fnv1a(copy.dump()));
}

json runCommand(const json& params) {
  const auto command = get<std::string>(params, "command", "");
  Graph g = graphFromParams(params.value("graph", json()));
  json result;
  if (command == "gen") result = cmdGen(g);
  else if (command == "solve") result = cmdSolve(g, params);
  else if (command == "zombie-number") result = cmdZombieNumber(g, params);
  else if (command == "cop-number") result = cmdCopNumber(g, params);
  else if (command == "simulate") result = cmdSimulate(g, params);
  else if (command == "formulas") result = cmdFormulas(g, params);
  else throw UsageError("unknown command '" + command + "'");

  json manifest{{"tool_version", kToolVersion},
                {"graph_hash", g.hashHex()},
                {"command", command},
                {"params", params},
                {"seed", params.value("seed", json())},
                {"timestamp", utcNow()},
                {"result_digest", resultDigest(result)}};
  return {{"manifest", manifest}, {"result", result}};
}

ReplayCheck replayManifest(const json& document) {
  if (!document.contains("manifest")) throw UsageError("document has no manifest");
  const auto& m = document["manifest"];
  ReplayCheck c;
  c.expected = m.value("result_digest", "");
  c.actual = runCommand(m.at("params"))["manifest"]["result_digest"].get<std::string>();
  c.match = c.expected == c.actual;
  return c;
}

}  // namespace zs
