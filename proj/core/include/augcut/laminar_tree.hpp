#pragma once

#include <vector>

#include "augcut/graph.hpp"

namespace augcut {

// Rooted tree whose leaves are vertices; every node stands for the set of
// leaves below it.
struct LaminarTree {
  struct Node {
    int parent = -1;
    std::vector<int> children;
    Vertex leaf = -1;  // vertex id for leaves, -1 for internal nodes

    friend bool operator==(const Node&, const Node&) = default;
  };

  std::vector<Node> nodes;
  int root = -1;

  int add_node(int parent, Vertex leaf = -1);
  int size() const { return static_cast<int>(nodes.size()); }
  bool is_leaf(int x) const { return nodes[x].leaf >= 0; }

  // Sorted leaf labels below x.
  std::vector<Vertex> members(int x) const;
  // Children before parents; the root comes last.
  std::vector<int> postorder() const;
  std::vector<int> leaves() const;
  // leaf_node[v] = node whose leaf label is v, sized by the largest label.
  std::vector<int> leaf_nodes() const;

  // Vertex sets of all nodes, each sorted, the list sorted.
  std::vector<std::vector<Vertex>> node_sets() const;

  // Build from a laminar family over {0..n-1}. Singletons and the full set
  // are added when missing. Throws InputError if the family is not laminar.
  static LaminarTree from_sets(int n, std::vector<std::vector<Vertex>> sets);

  friend bool operator==(const LaminarTree&, const LaminarTree&) = default;
};

// Removes nodes not reachable from the root, splices internal non-root nodes
// with a single child, sorts children by smallest member and renumbers nodes
// in preorder. Equal families give equal trees.
LaminarTree canonicalize(const LaminarTree& t);

struct ExtremeSetsTree {
  LaminarTree tree;
  std::vector<Weight> delta;  // δ(V(y)) under the original weights; 0 at the root

  friend bool operator==(const ExtremeSetsTree&, const ExtremeSetsTree&) = default;
};

// δ(V(y)) for every node: +w at both endpoint leaves, -2w at their lowest
// common ancestor, then subtree sums. Leaves of t must be exactly V(g).
std::vector<Weight> subtree_cut_values(const WeightedGraph& g, const LaminarTree& t);

// Canonical tree plus labels.
ExtremeSetsTree label_tree(const WeightedGraph& g, const LaminarTree& t);

}  // namespace augcut
