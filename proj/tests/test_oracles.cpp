#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "augcut/flow.hpp"
#include "augcut/oracles.hpp"
#include "support.hpp"

using namespace augcut;
using augcut::testing::b6;
using augcut::testing::triangle;

TEST_CASE("brute extreme sets") {
  CHECK(brute_extreme_sets(triangle()).tree.size() == 4);
  auto sets = brute_extreme_sets(b6()).tree.node_sets();
  CHECK(sets.size() == 9);
  CHECK(std::find(sets.begin(), sets.end(), std::vector<Vertex>{3, 4, 5}) != sets.end());
  CHECK(brute_extreme_sets(WeightedGraph::build(2, {{0, 1, 7}})).tree.size() == 3);
}

TEST_CASE("brute cut threshold") {
  CHECK(brute_cut_threshold(b6(), 0, 1) == std::vector<Vertex>{3, 4, 5});
  CHECK(brute_cut_threshold(augcut::testing::cycle(5), 2, 0).empty());
  CHECK(brute_cut_threshold(b6(), 1, 7) == std::vector<Vertex>{0, 2, 3, 4, 5});
}

TEST_CASE("exhaustive augmentation search") {
  std::vector<Weight> free(6, kUnbounded);
  CHECK(exhaustive_deca_optimum(b6(), 3, free) == 2);
  CHECK(exhaustive_deca_optimum(b6(), 2, free) == 1);
  CHECK(exhaustive_deca_optimum(b6(), 1, free) == 0);
  CHECK_FALSE(exhaustive_deca_optimum(b6(), 2, std::vector<Weight>(6, 0)));
}

TEST_CASE("slow chain solver") {
  auto f = slow_chain_solver(b6(), 3, {1, 1, 0, 0, 1, 1});
  CHECK(augcut::testing::total(f) == 2);
  CHECK(global_min_cut(add_edges(b6(), f)).value == 3);
  CHECK(slow_chain_solver(b6(), 1, std::vector<Weight>(6, 0)).empty());
}

TEST_CASE("verification") {
  std::vector<Weight> free(6, kUnbounded);
  auto good = verify_solution(b6(), 3, free, {{0, 4, 1}, {1, 5, 1}});
  CHECK(good.pass);
  CHECK(good.min_cut_after == 3);
  auto empty = verify_solution(b6(), 3, free, {});
  CHECK_FALSE(empty.pass);
  std::vector<Weight> tight{1, 0, 0, 0, 1, 1};
  auto over = verify_solution(b6(), 3, tight, {{0, 4, 1}, {1, 5, 1}});
  CHECK_FALSE(over.pass);
  CHECK(over.degree_violations == std::vector<Vertex>{1});
}

TEST_CASE("pairwise Steiner connectivity agrees with the flow-based one") {
  std::mt19937_64 rng(40);
  for (int round = 0; round < 50; ++round) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    auto g = augcut::testing::random_graph(rng, n, 2 * n, 4);
    std::vector<Vertex> terms;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2 || terms.size() < 2) terms.push_back(v);
    }
    if (terms.size() < 2) continue;
    CHECK(pairwise_steiner_connectivity(g, terms) == steiner_connectivity(g, terms));
  }
}
