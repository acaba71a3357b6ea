#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "augcut/deca.hpp"
#include "augcut/errors.hpp"
#include "augcut/flow.hpp"
#include "augcut/oracles.hpp"
#include "support.hpp"

using namespace augcut;
using augcut::testing::b6;

namespace {

ExtremeSetsTree tree_of(const WeightedGraph& g) { return extreme_sets_tree(g, 1); }

std::vector<Weight> unbounded(int n) { return std::vector<Weight>(n, kUnbounded); }

}  // namespace

TEST_CASE("external augmentation on the two-triangle fixture") {
  auto g = b6();
  auto tree = tree_of(g);
  auto b3 = external_augmentation(g, 3, unbounded(6), tree);
  CHECK(b3.b == std::vector<Weight>{1, 1, 0, 0, 1, 1});
  CHECK(b3.w_total == 4);
  auto b2 = external_augmentation(g, 2, unbounded(6), tree);
  CHECK(b2.b == std::vector<Weight>{1, 0, 0, 1, 0, 0});
  CHECK(b2.w_total == 2);
  auto b1 = external_augmentation(g, 1, unbounded(6), tree);
  CHECK(b1.w_total == 0);
  CHECK_THROWS_AS(external_augmentation(g, 2, std::vector<Weight>(6, 0), tree), InfeasibleError);
}

TEST_CASE("parity fix") {
  TightDegrees even{{1, 1, 0}, 2};
  CHECK(parity_fix(even, unbounded(3)).b == even.b);
  TightDegrees odd{{1, 1, 1}, 3};
  auto fixed = parity_fix(odd, {1, 2, 5});
  CHECK(fixed.b == std::vector<Weight>{1, 2, 1});
  CHECK(fixed.w_total == 4);
  CHECK_THROWS_AS(parity_fix(odd, {1, 1, 1}), InfeasibleError);
}

TEST_CASE("chain phase walkthrough on the fixture") {
  auto g = b6();
  auto tree = tree_of(g);
  auto b = external_augmentation(g, 3, unbounded(6), tree);
  ChainOptions opts;
  opts.self_check = true;
  ChainEngine engine(g, 3, b.b, tree, opts);
  auto listed = engine.listed_sets();
  REQUIRE(listed.size() == 2);
  CHECK(tree.tree.members(listed[0]) == std::vector<Vertex>{0, 1, 2});
  CHECK(tree.tree.members(listed[1]) == std::vector<Vertex>{3, 4, 5});
  auto chain = engine.chain_edges();
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].u == 0);
  CHECK(chain[0].v == 4);
  auto t = engine.compute_t();
  CHECK(t.t1 == 1);
  CHECK(t.t2 == 1);
  CHECK(t.t3 == 1);
  CHECK(t.t == 1);
  CHECK(engine.t3_query(0) == 1);
  CHECK(engine.t3_query(0) == 1);
  auto result = engine.run();
  CHECK(result.edges == std::vector<Edge>{{0, 4, 1}});
  CHECK(result.b_remaining == std::vector<Weight>{0, 1, 0, 0, 0, 1});

  ChainOptions printed;
  printed.t2_rule = T2Rule::kPrinted;
  CHECK(ChainEngine(g, 3, b.b, tree, printed).compute_t().t2 == 2);
}

TEST_CASE("finish on the fixture residual and the unit 4-cycle") {
  auto g = add_edges(b6(), std::vector<Edge>{{0, 4, 1}});
  auto f = finish_demand_one(g, 3, {0, 1, 0, 0, 0, 1}, tree_of(b6()), 7);
  CHECK(f.edges == std::vector<Edge>{{1, 5, 1}});

  auto c4 = augcut::testing::cycle(4);
  auto f4 = finish_demand_one(c4, 3, {1, 1, 1, 1}, 3);
  REQUIRE(f4.edges.size() == 2);
  auto k4 = add_edges(c4, f4.edges);
  CHECK(global_min_cut(k4).value == 3);
  for (const auto& e : f4.edges) CHECK((e.v - e.u) == 2);

  CHECK(finish_demand_one(c4, 2, {0, 0, 0, 0}, 3).edges.empty());
}

TEST_CASE("solve on the fixture") {
  DecaInstance inst{b6(), 3, {}};
  DecaOptions opts;
  opts.verify = true;
  opts.chain.self_check = true;
  auto sol = solve_deca(inst, 5, opts);
  CHECK(sol.total_weight == 2);
  CHECK(sol.edges == std::vector<Edge>{{0, 4, 1}, {1, 5, 1}});
  REQUIRE(sol.report);
  CHECK(sol.report->pass);
  CHECK(sol.report->min_cut_after == 3);

  inst.tau = 2;
  auto two = solve_deca(inst, 5, opts);
  CHECK(two.total_weight == 1);
  CHECK(two.edges == std::vector<Edge>{{0, 3, 1}});

  inst.tau = 1;
  CHECK(solve_deca(inst, 5).edges.empty());

  inst.tau = 2;
  inst.beta.assign(6, 0);
  CHECK_THROWS_AS(solve_deca(inst, 5), InfeasibleError);
}

TEST_CASE("solver matches exhaustive search on small instances") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int round = 0; round < 120; ++round) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    auto g = augcut::testing::random_graph(rng, n, std::uniform_int_distribution<int>(0, 2 * n)(rng), 3);
    Weight tau = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<Weight> beta(n);
    for (auto& x : beta) {
      int pick = std::uniform_int_distribution<int>(0, 3)(rng);
      x = pick == 3 ? kUnbounded : pick;
    }
    auto expect = exhaustive_deca_optimum(g, tau, beta);
    DecaOptions opts;
    opts.chain.self_check = true;
    if (!expect) {
      CHECK_THROWS_AS(solve_deca({g, tau, beta}, round, opts), InfeasibleError);
      continue;
    }
    auto sol = solve_deca({g, tau, beta}, round, opts);
    CHECK(sol.total_weight == *expect);
    auto report = verify_solution(g, tau, beta, sol.edges, *expect);
    CHECK(report.pass);
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("splitting off") {
  auto path = WeightedGraph::build(3, {{0, 1, 1}, {1, 2, 1}});
  auto r = split_off(path, 1, 3);
  CHECK(r.edges == std::vector<Edge>{{0, 2, 1}});

  auto heavy = WeightedGraph::build(4, {{0, 1, 2}, {1, 2, 2}, {0, 3, 2}, {3, 2, 2}});
  auto h = split_off(heavy, 1, 3);
  CHECK(h.edges == std::vector<Edge>{{0, 2, 2}});

  auto odd = WeightedGraph::build(3, {{0, 1, 1}, {1, 2, 2}});
  CHECK_THROWS_AS(split_off(odd, 1, 3), InputError);

  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    int n = std::uniform_int_distribution<int>(3, 9)(rng);
    auto g = augcut::testing::random_connected(rng, n, n, 3);
    Vertex s = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    if (g.degree(s) % 2 != 0) continue;
    auto res = split_off(g, s, round);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != s) rest.push_back(v);
    }
    Weight before = pairwise_steiner_connectivity(g, rest);
    auto after = add_edges(induced_subgraph(g, rest), std::vector<Edge>{});
    std::vector<Edge> mapped;
    std::vector<Vertex> index(n, -1);
    for (std::size_t i = 0; i < rest.size(); ++i) index[rest[i]] = static_cast<Vertex>(i);
    for (const auto& e : res.edges) mapped.push_back({index[e.u], index[e.v], e.w});
    auto h2 = add_edges(after, mapped);
    std::vector<Vertex> all(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) all[i] = static_cast<Vertex>(i);
    CHECK(pairwise_steiner_connectivity(h2, all) == before);
    Weight used = 2 * res.dropped_self_pairs;
    for (const auto& e : res.edges) used += 2 * e.w;
    CHECK(used == g.degree(s));
  }
}

TEST_CASE("target connectivity one links components") {
  auto empty = WeightedGraph::build(4, {});
  auto sol = solve_deca({empty, 1, {}}, 1);
  CHECK(sol.total_weight == 3);
  CHECK(sol.external_weight == 4);
  CHECK(*exhaustive_deca_optimum(empty, 1, unbounded(4)) == 3);
  CHECK(global_min_cut(add_edges(empty, sol.edges)).value == 1);

  auto bounded = solve_deca({empty, 1, {1, 2, 2, 1}}, 1);
  CHECK(bounded.total_weight == 3);
  CHECK(verify_solution(empty, 1, {1, 2, 2, 1}, bounded.edges, 3).pass);
  CHECK_THROWS_AS(solve_deca({empty, 1, {1, 1, 1, 1}}, 1), InfeasibleError);
  CHECK(!exhaustive_deca_optimum(empty, 1, {1, 1, 1, 1}));

  auto star = WeightedGraph::build(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  CHECK_THROWS_AS(split_off(star, 0, 1), InfeasibleError);
}

TEST_CASE("target connectivity one on sparse random graphs matches exhaustive search") {
  std::mt19937_64 rng(515);
  int linked = 0;
  for (int round = 0; round < 150; ++round) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    auto g = augcut::testing::random_graph(rng, n, std::uniform_int_distribution<int>(0, n / 2)(rng), 3);
    std::vector<Weight> beta(n);
    for (auto& x : beta) {
      int pick = std::uniform_int_distribution<int>(0, 3)(rng);
      x = pick == 3 ? kUnbounded : pick;
    }
    auto expect = exhaustive_deca_optimum(g, 1, beta);
    if (!expect) {
      CHECK_THROWS_AS(solve_deca({g, 1, beta}, round), InfeasibleError);
      continue;
    }
    DecaOptions opts;
    opts.verify = true;
    auto sol = solve_deca({g, 1, beta}, round, opts);
    CHECK(sol.total_weight == *expect);
    CHECK(sol.report->pass);
    if (connected_components(g).size() >= 4) ++linked;
  }
  CHECK(linked > 10);
}
