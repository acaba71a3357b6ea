#include "augcut/path_tree.hpp"

#include <algorithm>

#include "augcut/errors.hpp"

namespace augcut {

PathTree::PathTree(const std::vector<int>& parent, const std::vector<Weight>& values)
    : parent_(parent) {
  int n = size();
  if (static_cast<int>(values.size()) != n) throw InputError("one value per tree node expected");
  std::vector<std::vector<int>> children(n);
  for (int u = 0; u < n; ++u) {
    if (parent_[u] < 0) {
      if (root_ >= 0) throw InputError("tree has more than one root");
      root_ = u;
    } else {
      children[parent_[u]].push_back(u);
    }
  }
  if (n > 0 && root_ < 0) throw InputError("tree has no root");

  depth_.assign(n, 0);
  heavy_.assign(n, -1);
  head_.assign(n, 0);
  pos_.assign(n, 0);
  end_.assign(n, 0);
  std::vector<int> order;
  order.reserve(n);
  if (n > 0) order.push_back(root_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : children[order[i]]) {
      depth_[c] = depth_[order[i]] + 1;
      order.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != n) throw InputError("parent array is not a tree");
  std::vector<int> weight(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    int best = 0;
    for (int c : children[u]) {
      weight[u] += weight[c];
      if (weight[c] > best) {
        best = weight[c];
        heavy_[u] = c;
      }
    }
  }
  // Heavy child first so that chains and subtrees are both contiguous.
  int next = 0;
  std::vector<int> stack;
  if (n > 0) {
    head_[root_] = root_;
    stack.push_back(root_);
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    pos_[u] = next++;
    for (int c : children[u]) {
      if (c != heavy_[u]) {
        head_[c] = c;
        stack.push_back(c);
      }
    }
    if (heavy_[u] >= 0) {
      head_[heavy_[u]] = head_[u];
      stack.push_back(heavy_[u]);
    }
  }
  for (int u = 0; u < n; ++u) end_[u] = pos_[u] + weight[u];

  int cap = 1;
  while (cap < std::max(n, 1)) cap <<= 1;
  min_.assign(2 * cap, kWeightMax);
  lazy_.assign(2 * cap, 0);
  for (int u = 0; u < n; ++u) min_[cap + pos_[u]] = values[u];
  for (int i = cap - 1; i >= 1; --i) min_[i] = std::min(min_[2 * i], min_[2 * i + 1]);
}

void PathTree::add_range(int l, int r, Weight x, int node, int lo, int hi) {
  if (r <= lo || hi <= l) return;
  if (l <= lo && hi <= r) {
    min_[node] += x;
    lazy_[node] += x;
    return;
  }
  int mid = (lo + hi) / 2;
  add_range(l, r, x, 2 * node, lo, mid);
  add_range(l, r, x, 2 * node + 1, mid, hi);
  min_[node] = std::min(min_[2 * node], min_[2 * node + 1]) + lazy_[node];
}

Weight PathTree::min_range(int l, int r, int node, int lo, int hi) const {
  if (r <= lo || hi <= l) return kWeightMax;
  if (l <= lo && hi <= r) return min_[node];
  int mid = (lo + hi) / 2;
  Weight best = std::min(min_range(l, r, 2 * node, lo, mid), min_range(l, r, 2 * node + 1, mid, hi));
  return best == kWeightMax ? best : best + lazy_[node];
}

void PathTree::add_path(int u, int v, Weight x) {
  int cap = static_cast<int>(min_.size() / 2);
  while (head_[u] != head_[v]) {
    if (depth_[head_[u]] < depth_[head_[v]]) std::swap(u, v);
    add_range(pos_[head_[u]], pos_[u] + 1, x, 1, 0, cap);
    u = parent_[head_[u]];
  }
  if (pos_[u] > pos_[v]) std::swap(u, v);
  add_range(pos_[u], pos_[v] + 1, x, 1, 0, cap);
}

Weight PathTree::min_path(int u, int v) const {
  int cap = static_cast<int>(min_.size() / 2);
  Weight best = kWeightMax;
  while (head_[u] != head_[v]) {
    if (depth_[head_[u]] < depth_[head_[v]]) std::swap(u, v);
    best = std::min(best, min_range(pos_[head_[u]], pos_[u] + 1, 1, 0, cap));
    u = parent_[head_[u]];
  }
  if (pos_[u] > pos_[v]) std::swap(u, v);
  return std::min(best, min_range(pos_[u], pos_[v] + 1, 1, 0, cap));
}

Weight PathTree::min_subtree(int u) const {
  int cap = static_cast<int>(min_.size() / 2);
  return min_range(pos_[u], end_[u], 1, 0, cap);
}

int PathTree::lca(int u, int v) const {
  while (head_[u] != head_[v]) {
    if (depth_[head_[u]] < depth_[head_[v]]) std::swap(u, v);
    u = parent_[head_[u]];
  }
  return depth_[u] < depth_[v] ? u : v;
}

}  // namespace augcut
