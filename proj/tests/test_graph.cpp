#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "augcut/errors.hpp"
#include "augcut/graph.hpp"
#include "augcut/perturb.hpp"
#include "support.hpp"

using namespace augcut;
using augcut::testing::b6;
using augcut::testing::triangle;

TEST_CASE("build merges parallel edges and drops loops") {
  auto k2 = WeightedGraph::build(2, {{0, 1, 7}});
  CHECK(k2.m() == 1);
  CHECK(k2.edges()[0] == Edge{0, 1, 7});
  auto merged = WeightedGraph::build(3, {{0, 1, 1}, {1, 0, 2}, {1, 2, 1}, {2, 2, 5}});
  CHECK(merged.edges() == std::vector<Edge>{{0, 1, 3}, {1, 2, 1}});
  CHECK(b6().n() == 6);
  CHECK(b6().m() == 7);
  CHECK(b6().degree(2) == 3);
  CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 2, 1}}), InputError);
  CHECK_THROWS_AS(WeightedGraph::build(2, {{0, 1, 0}}), InputError);
}

TEST_CASE("cut values") {
  CHECK(cut_value(triangle(), std::vector<Vertex>{1}) == 2);
  CHECK(cut_value(b6(), std::vector<Vertex>{0, 1, 2}) == 1);
  CHECK(cut_value(b6(), std::vector<Vertex>{2}) == 3);
  CHECK_THROWS_AS(cut_value(b6(), std::vector<Vertex>{}), InputError);
  CHECK_THROWS_AS(cut_value(triangle(), std::vector<Vertex>{0, 1, 2}), InputError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto g = augcut::testing::random_graph(rng, 8, 16, 5);
    std::vector<char> mask(8);
    for (auto& c : mask) c = static_cast<char>(rng() & 1);
    auto set = from_mask(mask);
    if (set.empty() || set.size() == 8) continue;
    std::vector<char> flipped(8);
    for (int v = 0; v < 8; ++v) flipped[v] = !mask[v];
    CHECK(cut_value_mask(g, mask) == cut_value_mask(g, flipped));
    CHECK(cut_value(g, set) == cut_value_mask(g, mask));
  }
}

TEST_CASE("contraction") {
  auto c = contract(ContractedGraph::trivial(b6()), std::vector<Vertex>{3, 4, 5});
  CHECK(c.n() == 4);
  CHECK(c.graph.degree(3) == 1);
  CHECK(c.classes[3] == std::vector<Vertex>{3, 4, 5});

  auto same = contract(ContractedGraph::trivial(triangle()), std::vector<Vertex>{1});
  CHECK(same.n() == 3);
  CHECK(same.graph.m() == 3);

  auto pair = contract(ContractedGraph::trivial(triangle()), std::vector<Vertex>{0, 1});
  CHECK(pair.n() == 2);
  CHECK(pair.graph.edges() == std::vector<Edge>{{0, 1, 2}});
  CHECK_THROWS_AS(contract(ContractedGraph::trivial(triangle()), std::vector<Vertex>{}), InputError);
}

TEST_CASE("components, induced subgraphs and unions") {
  auto g = WeightedGraph::build(5, {{0, 1, 1}, {3, 4, 2}});
  CHECK(connected_components(g) == std::vector<std::vector<Vertex>>{{0, 1}, {2}, {3, 4}});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(b6()));
  auto sub = induced_subgraph(b6(), std::vector<Vertex>{2, 3, 4});
  CHECK(sub.edges() == std::vector<Edge>{{0, 1, 1}, {1, 2, 1}});
  auto both = add_edges(b6(), std::vector<Edge>{{2, 3, 4}, {0, 5, 1}});
  CHECK(both.m() == 8);
  CHECK(cut_value(both, std::vector<Vertex>{0, 1, 2}) == 6);
}

TEST_CASE("perturbation") {
  auto k2 = WeightedGraph::build(2, {{0, 1, 7}});
  auto p = perturb(k2, 11);
  CHECK(p.N == 16);
  Weight w = p.graph.edges()[0].w;
  CHECK(w >= 16 * 7 + 1);
  CHECK(w <= 16 * 7 + 16);

  auto pb = perturb(b6(), 5);
  CHECK(pb.N == 9072);
  for (const auto& e : pb.graph.edges()) {
    CHECK(e.w >= 63504 + 1);
    CHECK(e.w <= 63504 + 9072);
  }

  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    auto g = augcut::testing::random_connected(rng, 7, 6, 4);
    auto q = perturb(g, rng());
    for (int a = 1; a < 127; ++a) {
      for (int b = a + 1; b < 127; ++b) {
        std::vector<char> ma(7), mb(7);
        for (int v = 0; v < 7; ++v) {
          ma[v] = (a >> v) & 1;
          mb[v] = (b >> v) & 1;
        }
        if (cut_value_mask(g, ma) < cut_value_mask(g, mb)) {
          CHECK(cut_value_mask(q.graph, ma) < cut_value_mask(q.graph, mb));
        }
      }
    }
  }
}
