#include <algorithm>
#include <random>
#include <string>

#include "augcut/deca.hpp"
#include "augcut/errors.hpp"
#include "augcut/flow.hpp"

namespace augcut {

std::optional<Weight> deca_optimum(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta,
                                   std::uint64_t seed, const ExtremeSetsOptions& options) {
  if (g.n() < 2) return Weight{0};
  if (tau == 1) {
    try {
      return static_cast<Weight>(connect_components(g, beta).size());
    } catch (const InfeasibleError&) {
      return std::nullopt;
    }
  }
  ExtremeSetsTree tree = extreme_sets_tree(g, seed, options);
  try {
    TightDegrees b = parity_fix(external_augmentation(g, tau, beta, tree), beta);
    return b.w_total / 2;
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

std::vector<Edge> finish_general(const WeightedGraph& g, Weight tau, std::vector<Weight> b, std::uint64_t seed,
                                 const ExtremeSetsOptions& options) {
  std::mt19937_64 rng(seed);
  WeightedGraph h = g;
  std::vector<Edge> out;
  while (true) {
    auto opt = deca_optimum(h, tau, b, rng(), options);
    if (!opt) throw DefectError("remaining degree budget cannot finish the augmentation");
    if (*opt == 0) break;
    bool found = false;
    for (Vertex u = 0; u < h.n() && !found; ++u) {
      if (b[u] <= 0) continue;
      for (Vertex v = u + 1; v < h.n() && !found; ++v) {
        if (b[v] <= 0) continue;
        std::vector<Edge> extra{{u, v, 1}};
        WeightedGraph next = add_edges(h, extra);
        std::vector<Weight> nb = b;
        --nb[u];
        --nb[v];
        auto after = deca_optimum(next, tau, nb, rng(), options);
        if (after && *after == *opt - 1) {
          out.push_back({u, v, 1});
          h = std::move(next);
          b = std::move(nb);
          found = true;
        }
      }
    }
    if (!found) throw DefectError("no unit edge lowers the remaining optimum");
  }
  return out;
}

namespace {

struct Group {
  std::vector<Vertex> members;
  bool deficient = false;
};

}  // namespace

FinishResult finish_demand_one(const WeightedGraph& g, Weight tau, std::vector<Weight> b,
                               const ExtremeSetsTree& family, std::uint64_t seed,
                               const ExtremeSetsOptions& options) {
  FinishResult result;
  int n = g.n();
  if (n < 2) return result;
  const LaminarTree& t = family.tree;
  std::vector<Weight> delta = subtree_cut_values(g, t);
  std::vector<Weight> below(t.size(), kWeightMax);
  for (int x : t.postorder()) {
    for (int c : t.nodes[x].children) below[x] = std::min({below[x], below[c], delta[c]});
  }
  std::vector<std::vector<Vertex>> deficient;
  for (int x = 0; x < t.size(); ++x) {
    if (x == t.root || delta[x] >= below[x] || delta[x] >= tau) continue;
    if (tau - delta[x] >= 2) {
      result.edges = finish_general(g, tau, std::move(b), seed, options);
      result.general_steps = static_cast<int>(result.edges.size());
      return result;
    }
    deficient.push_back(t.members(x));
  }

  WeightedGraph h = g;
  Weight budget = 0;
  for (Weight x : b) budget += x;
  while (!deficient.empty()) {
    int k = static_cast<int>(deficient.size());
    if ((k + 1) / 2 != budget / 2 || budget % 2 != 0) {
      throw DefectError("remaining degree budget " + to_string(budget) + " does not match " +
                        std::to_string(k) + " deficient sets");
    }
    std::vector<int> owner(n, -1);
    std::vector<Group> groups;
    for (int i = 0; i < k; ++i) {
      for (Vertex v : deficient[i]) owner[v] = i;
      groups.push_back({deficient[i], true});
    }
    for (Vertex v = 0; v < n; ++v) {
      if (owner[v] < 0 && b[v] > 0) groups.push_back({{v}, false});
    }
    auto vacant = [&](const Group& grp) {
      for (Vertex v : grp.members) {
        if (b[v] > 0) return v;
      }
      return Vertex{-1};
    };

    FlowNetwork net(h);
    for (const auto& set : deficient) {
      for (Vertex v : set) net.set_role(v, FlowNetwork::Role::kSink);
    }
    bool accepted = false;
    for (std::size_t i = 0; i < groups.size() && !accepted; ++i) {
      Vertex x = vacant(groups[i]);
      if (x < 0) throw DefectError("deficient set without spare degree");
      for (std::size_t j = i + 1; j < groups.size() && !accepted; ++j) {
        Vertex y = vacant(groups[j]);
        if (y < 0) throw DefectError("deficient set without spare degree");
        int k_after = k - groups[i].deficient - groups[j].deficient;
        if ((k_after + 1) / 2 != budget / 2 - 1 && (k_after + 2) / 2 != budget / 2 - 1) continue;

        for (const Group* grp : {&groups[i], &groups[j]}) {
          for (Vertex v : grp->members) net.set_role(v, FlowNetwork::Role::kSource);
        }
        bool sink_left = k_after > 0;
        std::vector<Vertex> z;
        if (sink_left && net.run(tau - 1) < tau) z = net.source_side();
        net.reset_flow();
        for (const Group* grp : {&groups[i], &groups[j]}) {
          auto role = grp->deficient ? FlowNetwork::Role::kSink : FlowNetwork::Role::kNone;
          for (Vertex v : grp->members) net.set_role(v, role);
        }
        if (!z.empty()) ++k_after;
        if ((k_after + 1) / 2 != budget / 2 - 1) continue;
        if (!z.empty()) {
          Weight spare = -2;
          for (Vertex v : z) spare += b[v];
          if (spare < 1) continue;
        }

        std::vector<Edge> extra{{std::min(x, y), std::max(x, y), 1}};
        result.edges.push_back(extra.front());
        h = add_edges(h, extra);
        --b[x];
        --b[y];
        budget -= 2;
        ++result.fast_steps;
        std::vector<std::vector<Vertex>> next;
        for (int s = 0; s < k; ++s) {
          if (s != static_cast<int>(i) && s != static_cast<int>(j)) next.push_back(std::move(deficient[s]));
        }
        if (!z.empty()) next.push_back(std::move(z));
        deficient = std::move(next);
        accepted = true;
      }
    }
    if (!accepted) throw DefectError("no finishing edge lowers the remaining optimum");
  }
  return result;
}

FinishResult finish_demand_one(const WeightedGraph& g, Weight tau, std::vector<Weight> b, std::uint64_t seed,
                               const ExtremeSetsOptions& options) {
  std::mt19937_64 rng(seed);
  ExtremeSetsTree family = extreme_sets_tree(g, rng(), options);
  return finish_demand_one(g, tau, std::move(b), family, rng(), options);
}

}  // namespace augcut
