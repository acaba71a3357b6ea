#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "augcut/errors.hpp"
#include "augcut/flow.hpp"
#include "augcut/isolating_cuts.hpp"
#include "support.hpp"

using namespace augcut;
using augcut::testing::b6;
using augcut::testing::triangle;

namespace {

Weight brute_separating(const WeightedGraph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  int n = g.n();
  Weight best = kWeightMax;
  for (int mask = 1; mask + 1 < (1 << n); ++mask) {
    bool ok = true;
    for (Vertex v : a) ok = ok && ((mask >> v) & 1);
    for (Vertex v : b) ok = ok && !((mask >> v) & 1);
    if (!ok) continue;
    std::vector<char> m(n);
    for (int v = 0; v < n; ++v) m[v] = (mask >> v) & 1;
    best = std::min(best, cut_value_mask(g, m));
  }
  return best;
}

}  // namespace

TEST_CASE("max flow on small graphs") {
  auto k2 = WeightedGraph::build(2, {{0, 1, 7}});
  auto f = max_flow(k2, 0, 1);
  CHECK(f.value == 7);
  CHECK(f.s_side == std::vector<Vertex>{0});

  auto bridge = max_flow(b6(), 0, 4);
  CHECK(bridge.value == 1);
  CHECK(bridge.s_side == std::vector<Vertex>{0, 1, 2});
  CHECK(connectivity(b6(), 0, 1) == 2);
  CHECK_THROWS_AS(max_flow(b6(), 2, 2), InputError);
}

TEST_CASE("max flow matches brute force and is symmetric") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 100; ++round) {
    int n = std::uniform_int_distribution<int>(2, 10)(rng);
    auto g = augcut::testing::random_graph(rng, n, 2 * n, 6);
    Vertex s = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    Vertex t = std::uniform_int_distribution<Vertex>(0, n - 2)(rng);
    if (t >= s) ++t;
    auto f = max_flow(g, s, t);
    CHECK(f.value == brute_separating(g, {s}, {t}));
    CHECK(connectivity(g, t, s) == f.value);
    if (f.s_side.size() < static_cast<std::size_t>(n)) CHECK(cut_value(g, f.s_side) == f.value);
  }
}

TEST_CASE("flow network limits and reuse") {
  auto g = augcut::testing::cycle(6, 3);
  FlowNetwork net(g);
  net.set_role(0, FlowNetwork::Role::kSource);
  net.set_role(3, FlowNetwork::Role::kSink);
  CHECK(net.run() == 6);
  net.reset_flow();
  CHECK(net.run(2) > 2);
  net.reset_flow();
  net.set_role(4, FlowNetwork::Role::kSink);
  CHECK(net.run() == 6);
  CHECK(net.source_side() == std::vector<Vertex>{0});
}

TEST_CASE("global min cut and Steiner connectivity") {
  auto cut = global_min_cut(b6());
  CHECK(cut.value == 1);
  CHECK(cut_value(b6(), cut.side) == 1);
  CHECK(global_min_cut(triangle()).value == 2);
  CHECK(global_min_cut(WeightedGraph::build(2, {{0, 1, 7}})).value == 7);
  CHECK(global_min_cut(WeightedGraph::build(3, {{0, 1, 4}})).value == 0);
  CHECK_THROWS_AS(global_min_cut(WeightedGraph::build(1, {})), InputError);

  CHECK(steiner_connectivity(b6(), std::vector<Vertex>{0, 4}) == 1);
  CHECK(steiner_connectivity(triangle(), std::vector<Vertex>{0, 1, 2}) == 2);
  CHECK(steiner_connectivity(b6(), std::vector<Vertex>{0, 1}) == connectivity(b6(), 0, 1));

  std::mt19937_64 rng(21);
  for (int round = 0; round < 60; ++round) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    auto g = augcut::testing::random_graph(rng, n, 2 * n, 5);
    Weight best = kWeightMax;
    for (Vertex v = 1; v < n; ++v) best = std::min(best, brute_separating(g, {0}, {v}));
    CHECK(global_min_cut(g).value == best);
  }
}

TEST_CASE("isolating cuts") {
  auto two = isolating_cuts(b6(), std::vector<Vertex>{0, 4});
  REQUIRE(two.size() == 2);
  CHECK(two[0].value == 1);
  CHECK(two[0].side == std::vector<Vertex>{0, 1, 2});
  CHECK(two[1].value == 1);
  CHECK(two[1].side == std::vector<Vertex>{3, 4, 5});

  auto all = isolating_cuts(triangle(), std::vector<Vertex>{0, 1, 2});
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].value == 2);
    CHECK(all[i].side == std::vector<Vertex>{static_cast<Vertex>(i)});
  }
  CHECK_THROWS_AS(isolating_cuts(triangle(), std::vector<Vertex>{1}), InputError);

  std::mt19937_64 rng(4);
  for (int round = 0; round < 150; ++round) {
    int n = std::uniform_int_distribution<int>(3, 12)(rng);
    auto g = augcut::testing::random_graph(rng, n, 2 * n, 6);
    int k = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
    std::vector<Vertex> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> terms(perm.begin(), perm.begin() + k);
    auto cuts = isolating_cuts(g, terms);
    for (int i = 0; i < k; ++i) {
      std::vector<Vertex> others;
      for (int j = 0; j < k; ++j) {
        if (j != i) others.push_back(terms[j]);
      }
      CHECK(cuts[i].value == brute_separating(g, {terms[i]}, others));
      CHECK(cut_value(g, cuts[i].side) == cuts[i].value);
    }
  }
}
