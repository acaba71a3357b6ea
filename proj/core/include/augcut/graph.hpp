#pragma once

#include <span>
#include <vector>

#include "augcut/weight.hpp"

namespace augcut {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex to;
  Weight w;
};

// Undirected graph with positive integer weights. Parallel edges are merged,
// self-loops dropped, and edges stored with u < v in lexicographic order.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  static WeightedGraph build(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Arc> adjacency(Vertex v) const {
    return {arcs_.data() + offset_[v], arcs_.data() + offset_[v + 1]};
  }
  // Arc index of adjacency(v)[0]; arcs of edge e sit at the positions
  // recorded in arc_of_edge.
  int arc_offset(Vertex v) const { return offset_[v]; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  // The opposite arc of arc a (same edge, other direction).
  int twin(int a) const { return twin_[a]; }

  Weight degree(Vertex v) const { return degree_[v]; }
  Weight total_weight() const { return total_; }
  Weight max_weight() const { return max_w_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_{0};
  std::vector<Arc> arcs_;
  std::vector<int> twin_;
  std::vector<Weight> degree_;
  Weight total_ = 0;
  Weight max_w_ = 0;
};

// Membership mask of a vertex list; throws on out-of-range ids.
std::vector<char> to_mask(int n, std::span<const Vertex> set);
std::vector<Vertex> from_mask(const std::vector<char>& mask);

// δ(S). Throws InputError when S is empty or all of V.
Weight cut_value(const WeightedGraph& g, std::span<const Vertex> set);
Weight cut_value_mask(const WeightedGraph& g, const std::vector<char>& mask);

// Connected components as vertex lists, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices);

// G ⊎ F: edge weights of both lists added.
WeightedGraph add_edges(const WeightedGraph& g, std::span<const Edge> extra);

// A graph whose vertices stand for disjoint classes of some original vertex
// set. classes[v] lists the original vertices merged into v.
struct ContractedGraph {
  WeightedGraph graph;
  std::vector<std::vector<Vertex>> classes;

  static ContractedGraph trivial(const WeightedGraph& g);
  int n() const { return graph.n(); }
  // Contracted vertices whose class is a single original vertex.
  std::vector<Vertex> uncontracted() const;
};

// Merge `set` (ids of g's vertices) into one vertex. Vertices outside the
// set keep their relative order and become 0..n-|set|-1; the merged vertex
// is the last one. Throws InputError on an empty set or bad ids.
ContractedGraph contract(const ContractedGraph& g, std::span<const Vertex> set);

}  // namespace augcut
