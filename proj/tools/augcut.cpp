#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "augcut/cut_threshold.hpp"
#include "augcut/deca.hpp"
#include "augcut/errors.hpp"
#include "augcut/extreme_sets.hpp"
#include "augcut/flow.hpp"
#include "augcut/io.hpp"
#include "augcut/oracles.hpp"

using namespace augcut;

namespace {

enum Exit { kOk = 0, kInput = 1, kInfeasible = 2, kMonteCarlo = 3 };

WeightedGraph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in);
}

std::vector<Weight> load_beta(const std::string& path, int n) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_beta(in, n);
}

CutThresholdBackend parse_backend(const std::string& name) {
  if (name == "naive") return CutThresholdBackend::kNaive;
  if (name == "accelerated") return CutThresholdBackend::kAccelerated;
  throw InputError("unknown backend " + name);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("AUGCUT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("AUGCUT_SEED is not a number: ") + env);
    }
  }
  return 1;
}

Vertex one_based(long long id, int n, const char* what) {
  if (id < 1 || id > n) throw InputError(std::string(what) + " must be in [1, " + std::to_string(n) + "]");
  return static_cast<Vertex>(id - 1);
}

void print_edges(const std::vector<Edge>& edges) {
  Weight total = 0;
  for (const auto& e : edges) {
    std::cout << e.u + 1 << ' ' << e.v + 1 << ' ' << to_string(e.w) << '\n';
    total += e.w;
  }
  std::cout << "total " << to_string(total) << '\n';
}

struct Common {
  std::string input = "-";
  std::uint64_t seed = 1;
  std::string backend = "naive";
};

int run_extreme_sets(const Common& c, bool json, bool check) {
  WeightedGraph g = load_graph(c.input);
  ExtremeSetsOptions opts;
  opts.backend = parse_backend(c.backend);
  ExtremeSetsTree tree = extreme_sets_tree(g, c.seed, opts);
  if (json) {
    std::cout << tree_to_json(tree) << '\n';
  } else {
    write_tree_text(std::cout, tree);
  }
  if (check) {
    if (g.n() > kMaxBaseCaseSize) throw InputError("--check-oracle needs at most 16 vertices");
    if (!(canonicalize(brute_extreme_sets(g).tree).node_sets() == canonicalize(tree.tree).node_sets())) {
      std::cerr << "oracle check failed\n";
      return kInput;
    }
    std::cerr << "oracle check passed\n";
  }
  return kOk;
}

int run_augment(const Common& c, const std::string& tau_text, const std::string& beta_path, bool json,
                bool verify) {
  WeightedGraph g = load_graph(c.input);
  DecaInstance instance{g, parse_weight(tau_text), load_beta(beta_path, g.n())};
  if (instance.tau < 0) throw InputError("--tau must be non-negative");
  DecaOptions opts;
  opts.extreme.backend = parse_backend(c.backend);
  opts.verify = verify;
  DecaSolution sol = solve_deca(instance, c.seed, opts);
  if (json) {
    std::cout << solution_to_json(sol, instance.tau) << '\n';
  } else {
    print_edges(sol.edges);
  }
  if (sol.report && !sol.report->pass) {
    std::cerr << "verification failed: min cut " << to_string(sol.report->min_cut_after) << ", "
              << sol.report->degree_violations.size() << " degree violations\n";
    return kInput;
  }
  return kOk;
}

int run_splitoff(const Common& c, long long vertex, bool json, bool verify) {
  WeightedGraph g = load_graph(c.input);
  Vertex s = one_based(vertex, g.n(), "--vertex");
  DecaOptions opts;
  opts.extreme.backend = parse_backend(c.backend);
  SplitOffResult res = split_off(g, s, c.seed, opts);
  if (json) {
    std::cout << split_off_to_json(res) << '\n';
  } else {
    print_edges(res.edges);
  }
  if (verify && g.n() >= 3) {
    std::vector<Vertex> rest;
    std::vector<Vertex> index(g.n(), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
      if (v == s) continue;
      index[v] = static_cast<Vertex>(rest.size());
      rest.push_back(v);
    }
    std::vector<Edge> mapped;
    for (const auto& e : res.edges) mapped.push_back({index[e.u], index[e.v], e.w});
    WeightedGraph after = add_edges(induced_subgraph(g, rest), mapped);
    std::vector<Vertex> all(rest.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
    Weight before = steiner_connectivity(g, rest);
    Weight now = steiner_connectivity(after, all);
    if (before != now) {
      std::cerr << "verification failed: connectivity " << to_string(before) << " became " << to_string(now)
                << '\n';
      return kInput;
    }
    std::cerr << "verified: connectivity " << to_string(now) << " preserved\n";
  }
  return kOk;
}

int run_cut_threshold(const Common& c, long long source, const std::string& phi_text) {
  WeightedGraph g = load_graph(c.input);
  Vertex s = one_based(source, g.n(), "--source");
  CutThresholdOptions opts;
  opts.backend = parse_backend(c.backend);
  opts.seed = c.seed;
  CutThresholdResult r = cut_threshold(g, s, parse_weight(phi_text), opts);
  for (std::size_t i = 0; i < r.inside.size(); ++i) std::cout << (i ? " " : "") << r.inside[i] + 1;
  std::cout << '\n';
  return kOk;
}

WeightedGraph random_instance(std::mt19937_64& rng, int n, long long m, long long wmax) {
  if (n < 2) throw InputError("--random needs n >= 2");
  if (m < n - 1) throw InputError("--random needs m >= n - 1");
  if (wmax < 1) throw InputError("--random needs wmax >= 1");
  std::vector<Edge> edges;
  auto weight = [&] { return static_cast<Weight>(std::uniform_int_distribution<long long>(1, wmax)(rng)); };
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng), weight()});
  for (long long i = n - 1; i < m; ++i) {
    Vertex u = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    Vertex v = std::uniform_int_distribution<Vertex>(0, n - 2)(rng);
    if (v >= u) ++v;
    edges.push_back({u, v, weight()});
  }
  return WeightedGraph::build(n, edges);
}

int run_bench(const Common& c, const std::vector<long long>& random, int repeat, long long tau_offset,
              bool verify) {
  if (repeat < 1) throw InputError("--repeat must be positive");
  for (int r = 0; r < repeat; ++r) {
    std::uint64_t seed = c.seed + static_cast<std::uint64_t>(r);
    std::mt19937_64 rng(seed);
    WeightedGraph g = random.empty() ? load_graph(c.input)
                                     : random_instance(rng, static_cast<int>(random[0]), random[1], random[2]);
    BenchRecord rec;
    rec.n = g.n();
    rec.m = g.m();
    rec.seed = seed;
    rec.repeat = r;
    ExtremeSetsStats stats;
    ExtremeSetsOptions eopts;
    eopts.backend = parse_backend(c.backend);
    eopts.stats = &stats;
    reset_max_flow_calls();
    auto start = std::chrono::steady_clock::now();
    extreme_sets_tree(g, rng(), eopts);
    rec.seconds_tree = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rec.flow_calls = max_flow_calls();
    rec.max_depth = stats.max_depth;
    rec.subproblems = stats.subproblems;
    rec.max_retries = stats.max_retries;
    rec.attempts = stats.attempts;
    if (tau_offset >= 0) {
      rec.tau = global_min_cut(g).value + tau_offset;
      DecaOptions dopts;
      dopts.extreme.backend = eopts.backend;
      dopts.verify = verify;
      start = std::chrono::steady_clock::now();
      DecaSolution sol = solve_deca({g, rec.tau, {}}, rng(), dopts);
      rec.seconds_augment = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rec.total_weight = sol.total_weight;
      rec.verified = sol.report && sol.report->pass;
    }
    std::cout << bench_to_json(rec) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extreme sets, cut thresholds, connectivity augmentation and splitting off"};
  app.require_subcommand(1);
  Common common;
  std::uint64_t seed_fallback = 1;
  try {
    seed_fallback = default_seed();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  common.seed = seed_fallback;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", common.input, "graph file, - for stdin")->capture_default_str();
    sub->add_option("--seed", common.seed, "random seed (default $AUGCUT_SEED or 1)");
    sub->add_option("--backend", common.backend, "cut-threshold backend: naive or accelerated")
        ->capture_default_str();
  };

  bool json = false;
  bool check = false;
  bool verify = false;
  std::string tau;
  std::string beta;
  long long vertex = 0;
  long long source = 0;
  std::string phi;
  std::vector<long long> random;
  int repeat = 1;
  long long tau_offset = -1;

  auto* es = app.add_subcommand("extreme-sets", "print the extreme-sets tree");
  add_common(es);
  es->add_flag("--json", json, "JSON output");
  es->add_flag("--check-oracle", check, "compare with brute force (n <= 16)");

  auto* aug = app.add_subcommand("augment", "degree-constrained connectivity augmentation");
  add_common(aug);
  aug->add_option("--tau", tau, "target connectivity")->required();
  aug->add_option("--beta", beta, "degree bound file");
  aug->add_flag("--json", json, "JSON output");
  aug->add_flag("--verify", verify, "check cut, degrees and weight of the result");

  auto* so = app.add_subcommand("splitoff", "split off every edge at a vertex");
  add_common(so);
  so->add_option("--vertex", vertex, "vertex to split off (1-based)")->required();
  so->add_flag("--json", json, "JSON output");
  so->add_flag("--verify", verify, "check that the connectivity of the rest is preserved");

  auto* ct = app.add_subcommand("cut-threshold", "vertices t with connectivity to the source at most phi");
  add_common(ct);
  ct->add_option("--source", source, "source vertex (1-based)")->required();
  ct->add_option("--phi", phi, "threshold")->required();

  auto* bench = app.add_subcommand("bench", "timing and instrumentation as JSON lines");
  add_common(bench);
  bench->add_option("--random", random, "generate a connected graph: n m wmax")->expected(3);
  bench->add_option("--repeat", repeat, "number of records")->capture_default_str();
  bench->add_option("--tau-offset", tau_offset, "also augment to min cut + offset");
  bench->add_flag("--verify", verify, "verify the augmentation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*es) return run_extreme_sets(common, json, check);
    if (*aug) return run_augment(common, tau, beta, json, verify);
    if (*so) return run_splitoff(common, vertex, json, verify);
    if (*ct) return run_cut_threshold(common, source, phi);
    if (*bench) return run_bench(common, random, repeat, tau_offset, verify);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const MonteCarloFailure& e) {
    std::cerr << "sampling failed: " << e.what() << '\n';
    return kMonteCarlo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
