#include "augcut/laminar_tree.hpp"

#include <algorithm>
#include <string>

#include "augcut/errors.hpp"

namespace augcut {

int LaminarTree::add_node(int parent, Vertex leaf) {
  int id = size();
  nodes.push_back({parent, {}, leaf});
  if (parent >= 0) nodes[parent].children.push_back(id);
  return id;
}

std::vector<Vertex> LaminarTree::members(int x) const {
  std::vector<Vertex> out;
  std::vector<int> stack{x};
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    if (is_leaf(y)) out.push_back(nodes[y].leaf);
    for (int c : nodes[y].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LaminarTree::postorder() const {
  std::vector<int> order;
  if (root < 0) return order;
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < nodes[x].children.size()) {
      int c = nodes[x].children[i++];
      stack.push_back({c, 0});
    } else {
      order.push_back(x);
      stack.pop_back();
    }
  }
  return order;
}

std::vector<int> LaminarTree::leaves() const {
  std::vector<int> out;
  for (int x : postorder()) {
    if (is_leaf(x)) out.push_back(x);
  }
  return out;
}

std::vector<int> LaminarTree::leaf_nodes() const {
  Vertex top = -1;
  for (const auto& node : nodes) top = std::max(top, node.leaf);
  std::vector<int> out(top + 1, -1);
  for (int x : postorder()) {
    if (is_leaf(x)) out[nodes[x].leaf] = x;
  }
  return out;
}

std::vector<std::vector<Vertex>> LaminarTree::node_sets() const {
  std::vector<std::vector<Vertex>> sets(size());
  for (int x : postorder()) {
    if (is_leaf(x)) sets[x].push_back(nodes[x].leaf);
    for (int c : nodes[x].children) sets[x].insert(sets[x].end(), sets[c].begin(), sets[c].end());
    std::sort(sets[x].begin(), sets[x].end());
  }
  std::vector<std::vector<Vertex>> out;
  for (int x : postorder()) out.push_back(std::move(sets[x]));
  std::sort(out.begin(), out.end());
  return out;
}

LaminarTree LaminarTree::from_sets(int n, std::vector<std::vector<Vertex>> sets) {
  if (n < 1) throw InputError("a laminar tree needs at least one vertex");
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s) {
      if (v < 0 || v >= n) throw InputError("set member " + std::to_string(v) + " out of range");
    }
  }
  std::erase_if(sets, [n](const auto& s) { return s.empty() || static_cast<int>(s.size()) == n; });
  for (Vertex v = 0; v < n; ++v) sets.push_back({v});
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  LaminarTree t;
  t.root = t.add_node(-1);
  std::vector<int> owner(n, t.root);
  for (const auto& s : sets) {
    int parent = owner[s.front()];
    for (Vertex v : s) {
      if (owner[v] != parent) throw InputError("set family is not laminar");
    }
    int x = t.add_node(parent, s.size() == 1 ? s.front() : -1);
    for (Vertex v : s) owner[v] = x;
  }
  return canonicalize(t);
}

LaminarTree canonicalize(const LaminarTree& t) {
  LaminarTree out;
  if (t.root < 0) return out;
  std::vector<Vertex> low(t.size(), -1);
  for (int x : t.postorder()) {
    if (t.is_leaf(x)) low[x] = t.nodes[x].leaf;
    for (int c : t.nodes[x].children) {
      if (low[c] >= 0 && (low[x] < 0 || low[c] < low[x])) low[x] = low[c];
    }
  }
  // Follow single-child chains below non-root internal nodes.
  auto resolve = [&](int x) {
    while (!t.is_leaf(x) && t.nodes[x].children.size() == 1) x = t.nodes[x].children.front();
    return x;
  };
  auto sorted_children = [&](int x) {
    std::vector<int> kids;
    for (int c : t.nodes[x].children) {
      if (low[c] < 0) continue;
      kids.push_back(resolve(c));
    }
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return low[a] < low[b]; });
    return kids;
  };
  // A root whose only child is internal stands for the same set twice.
  int top = t.root;
  while (true) {
    auto kids = sorted_children(top);
    if (kids.size() != 1 || t.is_leaf(kids.front())) break;
    top = kids.front();
  }
  out.root = out.add_node(-1, t.nodes[top].leaf);
  std::vector<std::pair<int, int>> stack;  // (old node, new parent)
  auto kids = sorted_children(top);
  for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, out.root});
  while (!stack.empty()) {
    auto [x, parent] = stack.back();
    stack.pop_back();
    int y = out.add_node(parent, t.nodes[x].leaf);
    auto next = sorted_children(x);
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back({*it, y});
  }
  return out;
}

std::vector<Weight> subtree_cut_values(const WeightedGraph& g, const LaminarTree& t) {
  int size = t.size();
  auto order = t.postorder();
  std::vector<int> depth(size, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    if (t.nodes[x].parent >= 0) depth[x] = depth[t.nodes[x].parent] + 1;
  }
  int levels = 1;
  while ((1 << levels) < size) ++levels;
  std::vector<std::vector<int>> up(levels, std::vector<int>(size, t.root));
  for (int x = 0; x < size; ++x) up[0][x] = t.nodes[x].parent >= 0 ? t.nodes[x].parent : x;
  for (int k = 1; k < levels; ++k) {
    for (int x = 0; x < size; ++x) up[k][x] = up[k - 1][up[k - 1][x]];
  }
  auto lca = [&](int a, int b) {
    if (depth[a] < depth[b]) std::swap(a, b);
    for (int k = levels - 1; k >= 0; --k) {
      if (depth[a] - (1 << k) >= depth[b]) a = up[k][a];
    }
    if (a == b) return a;
    for (int k = levels - 1; k >= 0; --k) {
      if (up[k][a] != up[k][b]) {
        a = up[k][a];
        b = up[k][b];
      }
    }
    return up[0][a];
  };

  auto leaf = t.leaf_nodes();
  if (static_cast<int>(leaf.size()) != g.n()) throw InputError("tree leaves do not match the graph");
  std::vector<Weight> value(size, 0);
  for (const auto& e : g.edges()) {
    int a = leaf[e.u];
    int b = leaf[e.v];
    if (a < 0 || b < 0) throw InputError("tree leaves do not match the graph");
    value[a] += e.w;
    value[b] += e.w;
    value[lca(a, b)] -= 2 * e.w;
  }
  for (int x : order) {
    if (t.nodes[x].parent >= 0) value[t.nodes[x].parent] += value[x];
  }
  return value;
}

ExtremeSetsTree label_tree(const WeightedGraph& g, const LaminarTree& t) {
  ExtremeSetsTree out;
  out.tree = canonicalize(t);
  out.delta = subtree_cut_values(g, out.tree);
  return out;
}

}  // namespace augcut
