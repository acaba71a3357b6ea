#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "augcut/cut_threshold.hpp"
#include "augcut/deca.hpp"
#include "augcut/extreme_sets.hpp"
#include "augcut/flow.hpp"
#include "augcut/path_tree.hpp"

using namespace augcut;

namespace {

WeightedGraph random_connected(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> weight(1, 8);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng), weight(rng)});
  for (int i = n - 1; i < m; ++i) {
    Vertex u = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    Vertex v = std::uniform_int_distribution<Vertex>(0, n - 2)(rng);
    if (v >= u) ++v;
    edges.push_back({u, v, weight(rng)});
  }
  return WeightedGraph::build(n, edges);
}

void BM_ExtremeSets(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto g = random_connected(n, 10 * n, 7);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    reset_max_flow_calls();
    benchmark::DoNotOptimize(extreme_sets_tree(g, seed++));
  }
  state.counters["flows"] = static_cast<double>(max_flow_calls());
}
BENCHMARK(BM_ExtremeSets)->Arg(250)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_CutThreshold(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto g = random_connected(n, 10 * n, 11);
  Weight phi = global_min_cut(g).value + 4;
  CutThresholdOptions opts;
  opts.backend = state.range(1) ? CutThresholdBackend::kAccelerated : CutThresholdBackend::kNaive;
  for (auto _ : state) benchmark::DoNotOptimize(cut_threshold(g, 0, phi, opts));
}
BENCHMARK(BM_CutThreshold)->Args({1000, 0})->Args({1000, 1})->Args({4000, 0})->Args({4000, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Augment(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto g = random_connected(n, 10 * n, 13);
  Weight tau = global_min_cut(g).value + state.range(1);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_deca({g, tau, {}}, seed++));
}
BENCHMARK(BM_Augment)->Args({1000, 2})->Args({1000, 10})->Args({4000, 2})->Unit(benchmark::kMillisecond);

void BM_PathTree(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<int> parent(n, -1);
  for (int v = 1; v < n; ++v) parent[v] = std::uniform_int_distribution<int>(0, v - 1)(rng);
  std::vector<Weight> values(n, 0);
  PathTree tree(parent, values);
  for (auto _ : state) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    tree.add_path(pick(rng), pick(rng), 1);
    benchmark::DoNotOptimize(tree.min_path(pick(rng), pick(rng)));
  }
}
BENCHMARK(BM_PathTree)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
