#include "augcut/extreme_sets.hpp"

#include <algorithm>
#include <string>

#include "augcut/errors.hpp"
#include "augcut/flow.hpp"
#include "augcut/perturb.hpp"

namespace augcut {

bool balance_accepts(int n, int x_size) {
  int lo = std::max(2, (n + 15) / 16);
  int hi = std::min(n - 2, 15 * n / 16);
  return lo <= x_size && x_size <= hi;
}

int retry_cap(int n) {
  int bits = 0;
  while ((1 << bits) < n) ++bits;
  return 64 * std::max(bits, 1);
}

BalancedPartition sample_partition_once(const WeightedGraph& g, std::mt19937_64& rng,
                                        const ExtremeSetsOptions& options) {
  int n = g.n();
  if (n < 2) throw InputError("sampling needs at least two vertices");
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  BalancedPartition out;
  out.s = pick(rng);
  do {
    out.t = pick(rng);
  } while (out.t == out.s);
  PerturbedWeights pw = perturb(g, rng(), options.exponent);
  out.phi = connectivity(pw.graph, out.s, out.t);
  int lo = std::max(2, (n + 15) / 16);
  int hi = std::min(n - 2, 15 * n / 16);
  CutThresholdOptions ct{options.backend, rng()};
  auto result = cut_threshold_bounded(pw.graph, out.s, out.phi, lo, hi, ct);
  out.attempts = 1;
  if (result) out.x = std::move(result->complement);
  return out;
}

BalancedPartition sample_balanced_partition(const WeightedGraph& g, std::uint64_t seed,
                                            const ExtremeSetsOptions& options) {
  std::mt19937_64 rng(seed);
  int cap = retry_cap(g.n());
  for (int attempt = 1; attempt <= cap; ++attempt) {
    BalancedPartition p = sample_partition_once(g, rng, options);
    if (options.stats) ++options.stats->attempts;
    if (balance_accepts(g.n(), static_cast<int>(p.x.size()))) {
      p.attempts = attempt;
      if (options.stats) options.stats->max_retries = std::max(options.stats->max_retries, attempt);
      return p;
    }
  }
  if (options.stats) options.stats->max_retries = std::max(options.stats->max_retries, cap);
  throw MonteCarloFailure("no balanced partition of a " + std::to_string(g.n()) +
                          "-vertex subproblem after " + std::to_string(cap) + " attempts");
}

LaminarTree base_case_extreme_sets(const WeightedGraph& g) {
  int n = g.n();
  if (n > kMaxBaseCaseSize) throw InputError("brute force is limited to 16 vertices");
  if (n < 1) throw InputError("graph has no vertices");
  std::vector<Weight> adj(n * n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u * n + e.v] += e.w;
    adj[e.v * n + e.u] += e.w;
  }
  std::uint32_t full = (1u << n) - 1;
  std::vector<Weight> delta(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int v = __builtin_ctz(mask);
    std::uint32_t rest = mask & (mask - 1);
    Weight into_rest = 0;
    for (std::uint32_t r = rest; r; r &= r - 1) into_rest += adj[v * n + __builtin_ctz(r)];
    delta[mask] = delta[rest] + g.degree(v) - 2 * into_rest;
  }
  // low[mask] = min δ over nonempty subsets of mask, mask included.
  std::vector<Weight> low(full + 1, kWeightMax);
  std::vector<std::vector<Vertex>> sets;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    Weight proper = kWeightMax;
    for (std::uint32_t r = mask; r; r &= r - 1) {
      std::uint32_t sub = mask ^ (r & -r);
      if (sub) proper = std::min(proper, low[sub]);
    }
    low[mask] = std::min(proper, delta[mask]);
    if (mask != full && delta[mask] < proper) {
      std::vector<Vertex> s;
      for (std::uint32_t r = mask; r; r &= r - 1) s.push_back(__builtin_ctz(r));
      sets.push_back(std::move(s));
    }
  }
  return LaminarTree::from_sets(n, std::move(sets));
}

LaminarTree combine_trees(const LaminarTree& t_x, const LaminarTree& t_notx, Vertex x_leaf,
                          Vertex notx_leaf) {
  auto find_leaf = [](const LaminarTree& t, Vertex label) {
    for (int x = 0; x < t.size(); ++x) {
      if (t.nodes[x].leaf == label) return x;
    }
    throw InputError("contracted leaf " + std::to_string(label) + " missing from candidate tree");
  };
  LaminarTree out = t_x;
  int graft = find_leaf(out, x_leaf);
  int removed = find_leaf(t_notx, notx_leaf);
  out.nodes[graft].leaf = -1;
  std::vector<std::pair<int, int>> stack;
  for (int c : t_notx.nodes[t_notx.root].children) stack.push_back({c, graft});
  while (!stack.empty()) {
    auto [x, parent] = stack.back();
    stack.pop_back();
    if (x == removed) continue;
    int y = out.add_node(parent, t_notx.nodes[x].leaf);
    for (int c : t_notx.nodes[x].children) stack.push_back({c, y});
  }
  return canonicalize(out);
}

LaminarTree phase1(const ContractedGraph& g, std::uint64_t seed, const ExtremeSetsOptions& options,
                   int depth) {
  if (options.stats) {
    ++options.stats->subproblems;
    options.stats->max_depth = std::max(options.stats->max_depth, depth);
  }
  int n = g.n();
  int base = std::min(options.base_case_size, kMaxBaseCaseSize);
  if (n <= base) {
    if (options.stats) ++options.stats->base_cases;
    return base_case_extreme_sets(g.graph);
  }

  std::mt19937_64 rng(seed);
  BalancedPartition part = sample_balanced_partition(g.graph, rng(), options);
  std::vector<char> in_x = to_mask(n, part.x);
  std::vector<Vertex> not_x;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_x[v]) not_x.push_back(v);
  }
  const Vertex x_marker = n;
  const Vertex notx_marker = n + 1;

  auto relabel = [](LaminarTree& t, const std::vector<Vertex>& names, Vertex marker) {
    for (auto& node : t.nodes) {
      if (node.leaf >= 0) {
        node.leaf = node.leaf < static_cast<Vertex>(names.size()) ? names[node.leaf] : marker;
      }
    }
  };

  std::uint64_t seed_x = rng();
  std::uint64_t seed_notx = rng();
  LaminarTree t_x = phase1(contract(g, part.x), seed_x, options, depth + 1);
  relabel(t_x, not_x, x_marker);
  LaminarTree t_notx = phase1(contract(g, not_x), seed_notx, options, depth + 1);
  relabel(t_notx, part.x, notx_marker);
  return combine_trees(t_x, t_notx, x_marker, notx_marker);
}

ExtremeSetsTree phase2_prune(const WeightedGraph& g, const LaminarTree& candidate) {
  LaminarTree t = canonicalize(candidate);
  std::vector<Weight> label = subtree_cut_values(g, t);
  std::vector<std::vector<int>> kids(t.size());
  std::vector<std::vector<int>> position(t.size());
  for (int x : t.postorder()) {
    if (t.is_leaf(x)) {
      position[x] = {x};
      continue;
    }
    std::vector<int> current;
    for (int c : t.nodes[x].children) {
      current.insert(current.end(), position[c].begin(), position[c].end());
      std::vector<int>().swap(position[c]);
    }
    bool keep = x == t.root ||
                std::all_of(current.begin(), current.end(), [&](int c) { return label[x] < label[c]; });
    if (keep) {
      kids[x] = std::move(current);
      position[x] = {x};
    } else {
      position[x] = std::move(current);
    }
  }
  LaminarTree pruned;
  std::vector<std::pair<int, int>> stack{{t.root, -1}};
  while (!stack.empty()) {
    auto [x, parent] = stack.back();
    stack.pop_back();
    int y = pruned.add_node(parent, t.nodes[x].leaf);
    if (parent < 0) pruned.root = y;
    for (int c : kids[x]) stack.push_back({c, y});
  }
  return label_tree(g, pruned);
}

namespace {

LaminarTree connected_candidate(const WeightedGraph& g, std::uint64_t seed,
                                const ExtremeSetsOptions& options) {
  if (g.n() == 1) {
    LaminarTree t;
    t.root = t.add_node(-1);
    t.add_node(t.root, 0);
    return t;
  }
  return phase1(ContractedGraph::trivial(g), seed, options);
}

}  // namespace

ExtremeSetsTree extreme_sets_tree(const WeightedGraph& g, std::uint64_t seed,
                                  const ExtremeSetsOptions& options) {
  if (g.n() < 1) throw InputError("graph has no vertices");
  std::uint64_t flows_before = max_flow_calls();
  auto components = connected_components(g);
  std::mt19937_64 rng(seed);
  LaminarTree candidate;
  if (components.size() == 1) {
    candidate = connected_candidate(g, rng(), options);
  } else {
    candidate.root = candidate.add_node(-1);
    for (const auto& comp : components) {
      std::uint64_t comp_seed = rng();
      if (comp.size() == 1) {
        candidate.add_node(candidate.root, comp.front());
        continue;
      }
      LaminarTree part = connected_candidate(induced_subgraph(g, comp), comp_seed, options);
      std::vector<std::pair<int, int>> stack{{part.root, candidate.root}};
      while (!stack.empty()) {
        auto [x, parent] = stack.back();
        stack.pop_back();
        Vertex leaf = part.nodes[x].leaf;
        int y = candidate.add_node(parent, leaf >= 0 ? comp[leaf] : -1);
        for (int c : part.nodes[x].children) stack.push_back({c, y});
      }
    }
  }
  ExtremeSetsTree out = phase2_prune(g, candidate);
  if (options.stats) options.stats->flow_calls += max_flow_calls() - flows_before;
  return out;
}

}  // namespace augcut
