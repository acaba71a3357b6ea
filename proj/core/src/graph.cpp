#include "augcut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "augcut/errors.hpp"

namespace augcut {

WeightedGraph WeightedGraph::build(int n, std::vector<Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("vertex id out of range in edge (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    if (e.w < 1) {
      throw InputError("non-positive weight " + to_string(e.w) + " on edge (" +
                       std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  WeightedGraph g;
  g.n_ = n;
  for (const auto& e : edges) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      if (!checked_add(g.edges_.back().w, e.w, g.edges_.back().w)) {
        throw OverflowError("merged edge weight overflows", 128);
      }
    } else {
      g.edges_.push_back(e);
    }
  }

  std::vector<int> count(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++count[e.u + 1];
    ++count[e.v + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  g.offset_ = count;
  g.arcs_.assign(2 * g.edges_.size(), Arc{0, 0});
  g.twin_.assign(2 * g.edges_.size(), 0);
  g.degree_.assign(n, 0);
  std::vector<int> fill(count.begin(), count.end() - 1);
  for (const auto& e : g.edges_) {
    int a = fill[e.u]++;
    int b = fill[e.v]++;
    g.arcs_[a] = {e.v, e.w};
    g.arcs_[b] = {e.u, e.w};
    g.twin_[a] = b;
    g.twin_[b] = a;
    g.degree_[e.u] += e.w;
    g.degree_[e.v] += e.w;
    if (!checked_add(g.total_, e.w, g.total_)) {
      throw OverflowError("total edge weight overflows", 128);
    }
    g.max_w_ = std::max(g.max_w_, e.w);
  }
  return g;
}

std::vector<char> to_mask(int n, std::span<const Vertex> set) {
  std::vector<char> mask(n, 0);
  for (Vertex v : set) {
    if (v < 0 || v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range");
    mask[v] = 1;
  }
  return mask;
}

std::vector<Vertex> from_mask(const std::vector<char>& mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(mask.size()); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

Weight cut_value_mask(const WeightedGraph& g, const std::vector<char>& mask) {
  int inside = static_cast<int>(std::count(mask.begin(), mask.end(), 1));
  if (inside == 0 || inside == g.n()) throw InputError("cut side must be a nonempty proper subset");
  Weight total = 0;
  for (const auto& e : g.edges()) {
    if (mask[e.u] != mask[e.v]) total += e.w;
  }
  return total;
}

Weight cut_value(const WeightedGraph& g, std::span<const Vertex> set) {
  return cut_value_mask(g, to_mask(g.n(), set));
}

std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (const Arc& a : g.adjacency(v)) {
        if (comp[a.to] == -1) {
          comp[a.to] = id;
          stack.push_back(a.to);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const WeightedGraph& g) { return connected_components(g).size() <= 1; }

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.n(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v], e.w});
  }
  return WeightedGraph::build(static_cast<int>(vertices.size()), std::move(edges));
}

WeightedGraph add_edges(const WeightedGraph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return WeightedGraph::build(g.n(), std::move(edges));
}

ContractedGraph ContractedGraph::trivial(const WeightedGraph& g) {
  ContractedGraph out;
  out.graph = g;
  out.classes.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out.classes[v] = {v};
  return out;
}

std::vector<Vertex> ContractedGraph::uncontracted() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v) {
    if (classes[v].size() == 1) out.push_back(v);
  }
  return out;
}

ContractedGraph contract(const ContractedGraph& g, std::span<const Vertex> set) {
  if (set.empty()) throw InputError("cannot contract an empty set");
  std::vector<char> mask = to_mask(g.n(), set);
  int kept = g.n() - static_cast<int>(std::count(mask.begin(), mask.end(), 1));
  std::vector<int> index(g.n());
  ContractedGraph out;
  out.classes.reserve(kept + 1);
  int next = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!mask[v]) {
      index[v] = next++;
      out.classes.push_back(g.classes[v]);
    }
  }
  std::vector<Vertex> merged;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mask[v]) {
      index[v] = kept;
      merged.insert(merged.end(), g.classes[v].begin(), g.classes[v].end());
    }
  }
  std::sort(merged.begin(), merged.end());
  out.classes.push_back(std::move(merged));

  std::vector<Edge> edges;
  edges.reserve(g.graph.m());
  for (const auto& e : g.graph.edges()) {
    edges.push_back({index[e.u], index[e.v], e.w});
  }
  out.graph = WeightedGraph::build(kept + 1, std::move(edges));
  return out;
}

}  // namespace augcut
