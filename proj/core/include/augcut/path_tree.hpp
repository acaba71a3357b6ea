#pragma once

#include <vector>

#include "augcut/weight.hpp"

namespace augcut {

// Static rooted tree with an integer per node: add along a path, minimum
// along a path, minimum over a subtree, lowest common ancestor. Heavy-light
// decomposition over a lazy range-add / range-min segment tree.
class PathTree {
 public:
  PathTree() = default;
  // parent[root] = -1; exactly one root.
  PathTree(const std::vector<int>& parent, const std::vector<Weight>& values);

  int size() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int u) const { return parent_[u]; }
  int depth(int u) const { return depth_[u]; }

  void add_path(int u, int v, Weight x);
  Weight min_path(int u, int v) const;
  Weight min_subtree(int u) const;
  int lca(int u, int v) const;
  Weight value(int u) const { return min_path(u, u); }

 private:
  void add_range(int l, int r, Weight x, int node, int lo, int hi);
  Weight min_range(int l, int r, int node, int lo, int hi) const;

  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> heavy_;
  std::vector<int> head_;
  std::vector<int> pos_;
  std::vector<int> end_;  // one past the last position of the subtree
  std::vector<Weight> min_;
  std::vector<Weight> lazy_;
  int root_ = -1;
};

}  // namespace augcut
