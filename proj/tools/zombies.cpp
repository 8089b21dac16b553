#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zs/acceptance.hpp"
#include "zs/commands.hpp"
#include "zs/engine.hpp"
#include "zs/generators.hpp"
#include "zs/montecarlo.hpp"
#include "zs/strategies.hpp"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct GraphArgs {
  std::vector<std::string> family;  // name followed by integer parameters
  std::string file;
  std::optional<std::uint64_t> graph_seed;

  json toJson() const {
    if (!file.empty()) return {{"file", file}};
    if (family.empty()) throw zs::UsageError("give --family NAME PARAMS... or --graph FILE");
    std::vector<long long> params;
    for (std::size_t i = 1; i < family.size(); ++i) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoll(family[i], &used));
        if (used != family[i].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw zs::UsageError("family parameter '" + family[i] + "' is not an integer");
      }
    }
    json j{{"family", family[0]}, {"params", params}};
    if (graph_seed) j["seed"] = *graph_seed;
    return j;
  }
};

struct Common {
  GraphArgs graph;
  std::string format = "json";
  std::string out;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

void addGraph(CLI::App* app, GraphArgs& g) {
  auto* fam = app->add_option("--family", g.family, "Graph family and its parameters, e.g. --family cycle 9")
                  ->expected(1, -1);
  app->add_option("--graph", g.file, "Graph JSON file written by gen")->excludes(fam);
  app->add_option("--graph-seed", g.graph_seed, "Seed for random families (random_tree)");
}

void addCommon(CLI::App* app, Common& c, bool seeded) {
  addGraph(app, c.graph);
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", c.out, "Write output here instead of stdout");
  app->add_option("--threads", c.threads, "Worker threads, 0 = all cores; results do not depend on it");
  if (seeded) app->add_option("--seed", c.seed, "Master seed");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw zs::UsageError("cannot write " + path);
  out << text;
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flat key,value rows for results without a natural table.
std::string kvCsv(const json& result) {
  std::string s = "key,value\n";
  for (auto& [k, v] : result.items())
    if (!v.is_structured()) s += k + "," + scalar(v) + "\n";
  return s;
}

std::string renderCsv(const json& doc, const zs::Graph* g) {
  const auto& r = doc["result"];
  const auto cmd = doc["manifest"]["command"].get<std::string>();
  std::string s = "# manifest: " + doc["manifest"].dump() + "\n";
  if (cmd == "simulate" && g) {
    zs::EstimateResult e;
    e.k = r["k"];
    e.strategy = r["strategy"];
    e.samples = r["samples"];
    e.cutoff = r["cutoff"];
    e.wins = r["wins"];
    e.estimate = r["estimate"];
    e.ci = {r["ci_low"].get<double>(), r["ci_high"].get<double>()};
    e.seed = r["seed"];
    return s + zs::estimateCsvHeader() + "\n" + zs::estimateCsvRow(*g, e) + "\n";
  }
  if (cmd == "solve") {
    std::ostringstream os;
    os.precision(17);
    os << "k,s_k,method,residual\n"
       << r["k"] << ',' << r["s_k"].get<double>() << ',' << scalar(r["method"]) << ',' << r["residual"].get<double>()
       << "\n";
    return s + os.str();
  }
  if (cmd == "zombie-number") {
    std::string t = "k,s_k,method,ci_low,ci_high\n";
    for (const auto& row : r["profile"]) {
      const bool mc = row.contains("estimate");
      t += scalar(row["k"]) + "," + scalar(mc ? row["estimate"] : row["s_k"]) + "," +
           (mc ? std::string("monte-carlo") : scalar(row["method"])) + "," +
           (mc ? scalar(row["ci_low"]) + "," + scalar(row["ci_high"]) : std::string(",")) + "\n";
    }
    return s + kvCsv(r) + t;
  }
  return s + kvCsv(r);
}

json baseParams(const std::string& command, const Common& c) {
  return {{"command", command}, {"graph", c.graph.toJson()}, {"threads", c.threads}, {"seed", c.seed}};
}

int runAndEmit(json params, const Common& c) {
  auto doc = zs::runCommand(params);
  if (c.format == "csv") {
    std::optional<zs::Graph> g;
    if (params["command"] == "simulate") g = zs::graphFromParams(params["graph"]);
    emit(renderCsv(doc, g ? &*g : nullptr), c.out);
  } else {
    emit(doc.dump(2) + "\n", c.out);
  }
  return kOk;
}

void writeTrace(const json& params, const std::string& path) {
  auto g = zs::graphFromParams(params["graph"]);
  zs::StrategyContext ctx;
  ctx.k = params["k"];
  ctx.exact.threads = params["threads"];
  auto st = zs::makeStrategy(params["strategy"], g, ctx);
  const std::uint64_t cutoff = params["cutoff"].is_null() ? zs::defaultCutoff(g) : params["cutoff"].get<std::uint64_t>();
  auto t = zs::playGame(g, ctx.k, *st, params["seed"], cutoff);
  std::string s = "round,survivor,zombies\n0," + std::to_string(t.start) + ",";
  auto join = [](const std::vector<zs::Vertex>& z) {
    std::string r;
    for (std::size_t i = 0; i < z.size(); ++i) r += (i ? " " : "") + std::to_string(z[i]);
    return r;
  };
  s += join(t.initial_zombies) + "\n";
  for (std::size_t i = 0; i < t.rounds.size(); ++i)
    s += std::to_string(i + 1) + "," + std::to_string(t.rounds[i].survivor) + "," + join(t.rounds[i].zombies) + "\n";
  emit(s, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zombies and survivor: exact solver, simulator and checks"};
  app.set_version_flag("--version", zs::kToolVersion);
  app.set_config("--config", "", "TOML config mirroring the flags; flags win");
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a graph as JSON and print its structure report");
  std::vector<std::string> gen_family;
  std::string gen_out;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("family", gen_family, "Family name and integer parameters")->required()->expected(1, -1);
  gen->add_option("--out", gen_out, "Graph file");
  gen->add_option("--seed", gen_seed, "Seed for random families");

  // solve
  Common solve_c;
  std::size_t solve_k = 0;
  double solve_tol = 1e-12;
  std::string solve_cache;
  std::uint64_t solve_budget = 50'000'000;
  auto* solve = app.add_subcommand("solve", "Exact s_k by value iteration");
  addCommon(solve, solve_c, false);
  solve->add_option("--k", solve_k, "Number of zombies")->required();
  solve->add_option("--tol", solve_tol, "Value iteration tolerance");
  solve->add_option("--cache", solve_cache, "Value table cache file");
  solve->add_option("--state-budget", solve_budget, "Largest state count to attempt");

  // zombie-number
  Common zn_c;
  std::optional<std::size_t> zn_kmax;
  std::string zn_method = "auto", zn_strategy = "greedy";
  std::uint64_t zn_samples = 10'000;
  std::optional<std::uint64_t> zn_cutoff;
  double zn_tol = 1e-12;
  auto* zn = app.add_subcommand("zombie-number", "Smallest k >= c(G) with s_k <= 1/2");
  addCommon(zn, zn_c, true);
  zn->add_option("--k-max", zn_kmax, "Largest k to scan");
  zn->add_option("--method", zn_method, "exact, mc, or auto (exact, falling back to mc)")
      ->check(CLI::IsMember({"auto", "exact", "mc"}));
  zn->add_option("--strategy", zn_strategy, "Survivor strategy for mc");
  zn->add_option("--samples", zn_samples, "Games per k for mc");
  zn->add_option("--cutoff", zn_cutoff, "Round cutoff for mc (default 4 n diam)");
  zn->add_option("--tol", zn_tol, "Value iteration tolerance");

  // cop-number
  Common cop_c;
  std::size_t cop_kmax = 4;
  auto* cop = app.add_subcommand("cop-number", "Classical cop number by attractor computation");
  addCommon(cop, cop_c, false);
  cop->add_option("--k-max", cop_kmax, "Largest number of cops to try");

  // simulate
  Common sim_c;
  std::size_t sim_k = 0;
  std::string sim_strategy = "greedy", sim_trace;
  std::uint64_t sim_samples = 10'000;
  std::optional<std::uint64_t> sim_cutoff;
  double sim_conf = 0.95;
  bool sim_loss = false;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of s_k under a strategy");
  addCommon(sim, sim_c, true);
  sim->add_option("--k", sim_k, "Number of zombies")->required();
  sim->add_option("--strategy", sim_strategy, "greedy|parity|incidence|torus-boxed|optimal-table");
  sim->add_option("--samples", sim_samples, "Number of games");
  sim->add_option("--cutoff", sim_cutoff, "Round cutoff (default 4 n diam)");
  sim->add_option("--confidence", sim_conf, "Wilson interval level");
  sim->add_flag("--censored-as-loss", sim_loss, "Count games reaching the cutoff as losses");
  sim->add_option("--trace", sim_trace, "Write the rounds of game 0 as CSV");

  // formulas
  Common f_c;
  std::optional<std::size_t> f_k;
  double f_omega = 1.0;
  auto* formulas = app.add_subcommand("formulas", "Closed forms and reference bands");
  addCommon(formulas, f_c, false);
  formulas->add_option("--k", f_k, "Number of zombies");
  formulas->add_option("--omega", f_omega, "Slowly growing factor in the torus band");

  // verify
  std::string v_only, v_format = "text", v_out;
  std::vector<std::string> v_manifests;
  unsigned v_threads = 0;
  bool v_lazy = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite or replay saved manifests");
  verify->add_option("--only", v_only, "Group name or criterion number");
  verify->add_option("--format", v_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  verify->add_option("--out", v_out, "Write the CSV here");
  verify->add_option("--threads", v_threads, "Worker threads, 0 = all cores");
  verify->add_option("--manifest", v_manifests, "Saved JSON outputs whose digests to re-derive");
  verify->add_flag("--tamper-lazy-zombies", v_lazy, "Mutation check: let zombies stand still in the solver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      json params{{"command", "gen"}, {"graph", GraphArgs{gen_family, "", gen_seed}.toJson()}};
      auto doc = zs::runCommand(params);
      const auto& v = doc["result"]["validation"];
      std::ostringstream report;
      report << doc["result"]["graph"]["name"].get<std::string>() << ": order " << v["order"] << ", size "
             << v["size"] << ", connected " << v["connected"] << ", bipartite " << v["bipartite"]
             << ", regular " << (v["regular_degree"].is_null() ? "no" : v["regular_degree"].dump()) << ", girth "
             << (v["girth"].is_null() ? "none" : v["girth"].dump()) << "\n";
      if (gen_out.empty()) {
        std::cout << doc.dump(2) << "\n";
        std::cerr << report.str();
      } else {
        emit(doc.dump(2) + "\n", gen_out);
        std::cout << report.str();
      }
      return kOk;
    }
    if (*solve) {
      auto p = baseParams("solve", solve_c);
      p.erase("seed");
      p["k"] = solve_k;
      p["tol"] = solve_tol;
      p["state_budget"] = solve_budget;
      if (!solve_cache.empty()) p["cache"] = solve_cache;
      return runAndEmit(p, solve_c);
    }
    if (*zn) {
      auto p = baseParams("zombie-number", zn_c);
      if (zn_kmax) p["k_max"] = *zn_kmax;
      p["method"] = zn_method;
      p["strategy"] = zn_strategy;
      p["samples"] = zn_samples;
      p["cutoff"] = zn_cutoff ? json(*zn_cutoff) : json(nullptr);
      p["tol"] = zn_tol;
      return runAndEmit(p, zn_c);
    }
    if (*cop) {
      auto p = baseParams("cop-number", cop_c);
      p.erase("seed");
      p["k_max"] = cop_kmax;
      return runAndEmit(p, cop_c);
    }
    if (*sim) {
      auto p = baseParams("simulate", sim_c);
      p["k"] = sim_k;
      p["strategy"] = sim_strategy;
      p["samples"] = sim_samples;
      p["cutoff"] = sim_cutoff ? json(*sim_cutoff) : json(nullptr);
      p["confidence"] = sim_conf;
      p["censored_as_loss"] = sim_loss;
      if (!sim_trace.empty()) writeTrace(p, sim_trace);
      return runAndEmit(p, sim_c);
    }
    if (*formulas) {
      auto p = baseParams("formulas", f_c);
      p.erase("seed");
      if (f_k) p["k"] = *f_k;
      p["omega"] = f_omega;
      return runAndEmit(p, f_c);
    }
    if (*verify) {
      if (!v_manifests.empty()) {
        bool ok = true;
        for (const auto& path : v_manifests) {
          std::ifstream in(path);
          if (!in) throw zs::UsageError("cannot read " + path);
          std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
          // CSV outputs carry the manifest on their first line.
          const std::string tag = "# manifest: ";
          json doc = text.rfind(tag, 0) == 0
                         ? json{{"manifest", json::parse(text.substr(tag.size(), text.find('\n') - tag.size()))}}
                         : json::parse(text);
          auto r = zs::replayManifest(doc);
          std::printf("%s %s: digest %s, recomputed %s\n", r.match ? "PASS" : "FAIL", path.c_str(),
                      r.expected.c_str(), r.actual.c_str());
          ok = ok && r.match;
        }
        return ok ? kOk : kFailed;
      }
      zs::AcceptanceOptions opt;
      opt.only = v_only;
      opt.threads = v_threads;
      opt.lazy_zombies = v_lazy;
      std::vector<zs::CriterionResult> results;
      try {
        results = zs::runAcceptance(opt);
      } catch (const std::invalid_argument& e) {
        throw zs::UsageError(e.what());
      }
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.pass;
        if (v_format == "text") {
          std::printf("%s %2d %-12s %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.group.c_str(),
                      r.title.c_str(), r.detail.c_str(), r.seconds);
          for (const auto& row : r.rows)
            if (!row.pass)
              std::printf("     FAIL %s: computed %s, expected %s\n", row.quantity.c_str(), row.computed.c_str(),
                          row.expected.c_str());
        }
      }
      if (v_format == "csv" || !v_out.empty()) emit(zs::acceptanceCsv(results), v_out);
      return ok ? kOk : kFailed;
    }
  } catch (const zs::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
