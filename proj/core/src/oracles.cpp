#include "augcut/oracles.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "augcut/errors.hpp"
#include "augcut/extreme_sets.hpp"
#include "augcut/flow.hpp"

namespace augcut {

namespace {

std::vector<Weight> all_cut_values(const WeightedGraph& g) {
  int n = g.n();
  if (n > kMaxBaseCaseSize) throw InputError("exhaustive cut enumeration is limited to 16 vertices");
  std::uint32_t full = (1u << n) - 1;
  std::vector<Weight> delta(full + 1, 0);
  for (const auto& e : g.edges()) {
    std::uint32_t bu = 1u << e.u;
    std::uint32_t bv = 1u << e.v;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      if (!(mask & bu) != !(mask & bv)) delta[mask] += e.w;
    }
  }
  return delta;
}

}  // namespace

ExtremeSetsTree brute_extreme_sets(const WeightedGraph& g) { return label_tree(g, base_case_extreme_sets(g)); }

std::vector<Vertex> brute_cut_threshold(const WeightedGraph& g, Vertex s, Weight phi) {
  int n = g.n();
  if (s < 0 || s >= n) throw InputError("source out of range");
  std::vector<Weight> delta = all_cut_values(g);
  std::vector<Weight> lambda(n, kWeightMax);
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!(mask >> s & 1)) continue;
    for (Vertex t = 0; t < n; ++t) {
      if (!(mask >> t & 1)) lambda[t] = std::min(lambda[t], delta[mask]);
    }
  }
  std::vector<Vertex> out;
  for (Vertex t = 0; t < n; ++t) {
    if (t != s && lambda[t] <= phi) out.push_back(t);
  }
  return out;
}

namespace {

class DecaSearch {
 public:
  DecaSearch(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta)
      : n_(g.n()), tau_(tau), beta_(beta), base_(all_cut_values(g)) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) pairs_.push_back({u, v});
    }
    count_.assign(pairs_.size(), 0);
    deg_.assign(n_, 0);
  }

  bool run(Weight budget) {
    failed_.clear();
    return search(budget);
  }

 private:
  bool search(Weight budget) {
    std::uint32_t full = (1u << n_) - 1;
    std::vector<Weight> delta = base_;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (count_[p] == 0) continue;
      std::uint32_t bu = 1u << pairs_[p].first;
      std::uint32_t bv = 1u << pairs_[p].second;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (!(mask & bu) != !(mask & bv)) delta[mask] += count_[p];
      }
    }
    std::vector<Weight> spare(n_);
    for (Vertex v = 0; v < n_; ++v) spare[v] = beta_[v] - deg_[v];
    Weight worst = 0;
    std::uint32_t worst_mask = 0;
    Weight singles = 0;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Weight dem = tau_ - delta[mask];
      if (dem <= 0) continue;
      Weight in = 0;
      Weight out = 0;
      for (Vertex v = 0; v < n_; ++v) {
        if (mask >> v & 1) {
          in += spare[v];
        } else {
          out += spare[v];
        }
      }
      if (dem > std::min(in, out)) return false;
      if (__builtin_popcount(mask) == 1) singles += dem;
      if (dem > worst) {
        worst = dem;
        worst_mask = mask;
      }
    }
    if (worst == 0) return true;
    if (std::max(worst, (singles + 1) / 2) > budget) return false;

    std::string key(count_.begin(), count_.end());
    auto it = failed_.find(key);
    if (it != failed_.end() && it->second >= budget) return false;

    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      auto [u, v] = pairs_[p];
      if (!(worst_mask >> u & 1) == !(worst_mask >> v & 1)) continue;
      if (spare[u] <= 0 || spare[v] <= 0) continue;
      ++count_[p];
      ++deg_[u];
      ++deg_[v];
      bool ok = search(budget - 1);
      --count_[p];
      --deg_[u];
      --deg_[v];
      if (ok) return true;
    }
    failed_[key] = std::max(failed_[key], budget);
    return false;
  }

  int n_;
  Weight tau_;
  std::vector<Weight> beta_;
  std::vector<Weight> base_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<char> count_;
  std::vector<Weight> deg_;
  std::unordered_map<std::string, Weight> failed_;
};

}  // namespace

std::optional<Weight> exhaustive_deca_optimum(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta,
                                              Weight weight_cap) {
  int n = g.n();
  if (n > 10) throw InputError("exhaustive augmentation search is limited to 10 vertices");
  if (static_cast<int>(beta.size()) != n) throw InputError("one degree bound per vertex expected");
  if (n < 2) return Weight{0};
  if (weight_cap < 0) weight_cap = n * std::max<Weight>(tau, 1);
  DecaSearch search(g, tau, beta);
  for (Weight k = 0; k <= weight_cap; ++k) {
    if (search.run(k)) return k;
  }
  return std::nullopt;
}

std::vector<Edge> slow_chain_solver(const WeightedGraph& g, Weight tau, std::vector<Weight> b) {
  int n = g.n();
  if (static_cast<int>(b.size()) != n) throw InputError("one degree bound per vertex expected");
  std::map<std::pair<Vertex, Vertex>, Weight> added;
  WeightedGraph h = g;
  while (n >= 2) {
    ExtremeSetsTree tree = brute_extreme_sets(h);
    const LaminarTree& t = tree.tree;
    std::vector<int> listed;
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x != t.root) {
        if (tau - tree.delta[x] >= 2) listed.push_back(x);
        continue;
      }
      for (int c : t.nodes[x].children) stack.push_back(c);
    }
    if (listed.size() < 2) break;
    std::vector<std::vector<Vertex>> members(t.size());
    for (int x : listed) members[x] = t.members(x);
    auto by_delta = [&](int a, int c) {
      return std::pair(tree.delta[a], members[a].front()) < std::pair(tree.delta[c], members[c].front());
    };
    std::sort(listed.begin(), listed.end(), by_delta);
    int first = listed[0];
    int last = listed[1];
    std::vector<int> middle(listed.begin() + 2, listed.end());
    std::sort(middle.begin(), middle.end(), [&](int a, int c) { return members[a].front() < members[c].front(); });
    std::vector<int> chain{first};
    chain.insert(chain.end(), middle.begin(), middle.end());
    chain.push_back(last);

    auto take = [&](int x) {
      for (Vertex v : members[x]) {
        if (b[v] >= 1) {
          --b[v];
          return v;
        }
      }
      throw DefectError("listed set without vacant vertex in the reference chain");
    };
    std::vector<Edge> step;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      Vertex u = take(chain[i]);
      Vertex v = take(chain[i + 1]);
      step.push_back({std::min(u, v), std::max(u, v), 1});
      added[{std::min(u, v), std::max(u, v)}] += 1;
    }
    h = add_edges(h, step);
  }
  for (const auto& e : finish_general(h, tau, b, 0)) added[{e.u, e.v}] += e.w;
  std::vector<Edge> out;
  for (const auto& [key, w] : added) out.push_back({key.first, key.second, w});
  return out;
}

VerificationReport verify_solution(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta,
                                   const std::vector<Edge>& f, std::optional<Weight> expected,
                                   std::uint64_t seed) {
  VerificationReport report;
  int n = g.n();
  std::vector<Weight> deg(n, 0);
  for (const auto& e : f) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InputError("solution edge out of range");
    deg[e.u] += e.w;
    deg[e.v] += e.w;
    report.weight_total += e.w;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] > beta[v]) report.degree_violations.push_back(v);
  }
  report.min_cut_after = n >= 2 ? global_min_cut(add_edges(g, f)).value : kUnbounded;
  if (!expected) expected = deca_optimum(g, tau, beta, seed);
  report.optimal_weight_expected = expected ? *expected : -1;
  report.pass = expected && report.degree_violations.empty() && report.min_cut_after >= tau &&
                report.weight_total == *expected;
  return report;
}

Weight pairwise_steiner_connectivity(const WeightedGraph& g, const std::vector<Vertex>& terminals) {
  Weight best = kWeightMax;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      best = std::min(best, connectivity(g, terminals[i], terminals[j]));
    }
  }
  return best;
}

}  // namespace augcut
