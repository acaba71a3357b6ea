#include <algorithm>
#include <set>
#include <string>

#include "augcut/deca.hpp"
#include "augcut/errors.hpp"

namespace augcut {

std::vector<Weight> normalized_beta(const DecaInstance& instance) {
  int n = instance.graph.n();
  if (instance.tau < 0) throw InputError("target connectivity must be non-negative");
  if (instance.beta.empty()) return std::vector<Weight>(n, kUnbounded);
  if (static_cast<int>(instance.beta.size()) != n) throw InputError("one degree bound per vertex expected");
  std::vector<Weight> out = instance.beta;
  for (Weight& x : out) {
    if (x < 0) throw InputError("degree bounds must be non-negative");
    x = std::min(x, kUnbounded);
  }
  return out;
}

TightDegrees external_augmentation(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta,
                                   const ExtremeSetsTree& tree) {
  int n = g.n();
  if (static_cast<int>(beta.size()) != n) throw InputError("one degree bound per vertex expected");
  const LaminarTree& t = tree.tree;
  TightDegrees out;
  out.b.assign(n, 0);
  std::vector<std::set<Vertex>> slack(t.size());
  std::vector<Weight> sum(t.size(), 0);
  for (int x : t.postorder()) {
    if (t.is_leaf(x)) {
      Vertex v = t.nodes[x].leaf;
      if (beta[v] > 0) slack[x].insert(v);
    }
    for (int c : t.nodes[x].children) {
      sum[x] += sum[c];
      if (slack[c].size() > slack[x].size()) slack[x].swap(slack[c]);
      slack[x].insert(slack[c].begin(), slack[c].end());
      std::set<Vertex>().swap(slack[c]);
    }
    if (x == t.root) continue;
    Weight dem = tau - tree.delta[x];
    while (sum[x] < dem && !slack[x].empty()) {
      Vertex v = *slack[x].begin();
      Weight add = std::min(dem - sum[x], beta[v] - out.b[v]);
      out.b[v] += add;
      sum[x] += add;
      if (out.b[v] == beta[v]) slack[x].erase(slack[x].begin());
    }
    if (sum[x] < dem) {
      throw InfeasibleError("a set with cut value " + to_string(tree.delta[x]) +
                            " cannot reach connectivity " + to_string(tau) + " within the degree bounds");
    }
  }
  for (Weight x : out.b) out.w_total += x;
  return out;
}

TightDegrees parity_fix(TightDegrees b, const std::vector<Weight>& beta) {
  if (b.w_total % 2 == 0) return b;
  for (std::size_t v = 0; v < b.b.size(); ++v) {
    if (b.b[v] < beta[v]) {
      ++b.b[v];
      ++b.w_total;
      return b;
    }
  }
  throw InfeasibleError("odd total demand and no vertex has spare degree");
}

}  // namespace augcut
