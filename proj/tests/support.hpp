#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "augcut/graph.hpp"

namespace augcut::testing {

// Two unit triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline WeightedGraph b6() {
  return WeightedGraph::build(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
}

inline WeightedGraph triangle() { return WeightedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

inline WeightedGraph cycle(int n, Weight w = 1) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, w});
  return WeightedGraph::build(n, edges);
}

// Random spanning tree plus `extra` random edges, weights in [1, wmax].
inline WeightedGraph random_connected(std::mt19937_64& rng, int n, int extra, Weight wmax) {
  std::vector<Edge> edges;
  auto weight = [&] { return static_cast<Weight>(std::uniform_int_distribution<long long>(1, wmax)(rng)); };
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 1; i < n; ++i) {
    Vertex p = perm[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    edges.push_back({perm[i], p, weight()});
  }
  for (int i = 0; i < extra && n >= 2; ++i) {
    Vertex u = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    Vertex v = std::uniform_int_distribution<Vertex>(0, n - 2)(rng);
    if (v >= u) ++v;
    edges.push_back({u, v, weight()});
  }
  return WeightedGraph::build(n, edges);
}

// Possibly disconnected random graph.
inline WeightedGraph random_graph(std::mt19937_64& rng, int n, int m, Weight wmax) {
  std::vector<Edge> edges;
  for (int i = 0; i < m && n >= 2; ++i) {
    Vertex u = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    Vertex v = std::uniform_int_distribution<Vertex>(0, n - 2)(rng);
    if (v >= u) ++v;
    edges.push_back({u, v, static_cast<Weight>(std::uniform_int_distribution<long long>(1, wmax)(rng))});
  }
  return WeightedGraph::build(n, edges);
}

inline Weight total(const std::vector<Edge>& edges) {
  Weight s = 0;
  for (const auto& e : edges) s += e.w;
  return s;
}

}  // namespace augcut::testing
