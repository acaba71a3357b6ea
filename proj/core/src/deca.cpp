#include "augcut/deca.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "augcut/errors.hpp"
#include "augcut/flow.hpp"
#include "augcut/oracles.hpp"

namespace augcut {

namespace {

std::vector<Edge> merge(const std::vector<SolutionEdge>& audit) {
  std::map<std::pair<Vertex, Vertex>, Weight> acc;
  for (const auto& e : audit) acc[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.w;
  std::vector<Edge> out;
  for (const auto& [key, w] : acc) out.push_back({key.first, key.second, w});
  return out;
}

}  // namespace

std::vector<Edge> connect_components(const WeightedGraph& g, const std::vector<Weight>& beta) {
  auto comps = connected_components(g);
  int c = static_cast<int>(comps.size());
  if (c <= 1) return {};
  std::vector<Weight> cap(c, 0);
  Weight room = 0;
  for (int i = 0; i < c; ++i) {
    for (Vertex v : comps[i]) cap[i] += std::min<Weight>(beta[v], c - 1);
    cap[i] = std::min<Weight>(cap[i], c - 1);
    if (cap[i] == 0) throw InfeasibleError("a component has no spare degree to connect it");
    room += cap[i];
  }
  if (room < 2 * (c - 1)) throw InfeasibleError("degree bounds leave too few ends to connect all components");

  // Tree degrees: everyone starts at 1, the rest goes to the first
  // components with spare capacity.
  std::vector<Weight> deg(c, 1);
  Weight extra = c - 2;
  for (int i = 0; i < c && extra > 0; ++i) {
    Weight add = std::min(extra, cap[i] - 1);
    deg[i] += add;
    extra -= add;
  }
  std::vector<std::size_t> cursor(c, 0);
  std::vector<Weight> left = beta;
  auto end_in = [&](int i) {
    auto& members = comps[i];
    while (left[members[cursor[i]]] == 0) ++cursor[i];
    --left[members[cursor[i]]];
    return members[cursor[i]];
  };
  std::vector<int> leaves;
  std::vector<int> inner;
  for (int i = 0; i < c; ++i) (deg[i] == 1 ? leaves : inner).push_back(i);
  std::vector<Edge> out;
  std::size_t li = 0;
  while (!inner.empty()) {
    int leaf = leaves[li++];
    int hub = inner.back();
    Vertex x = end_in(leaf);
    Vertex y = end_in(hub);
    out.push_back({std::min(x, y), std::max(x, y), 1});
    if (--deg[hub] == 1) {
      inner.pop_back();
      leaves.push_back(hub);
    }
  }
  Vertex x = end_in(leaves[li]);
  Vertex y = end_in(leaves[li + 1]);
  out.push_back({std::min(x, y), std::max(x, y), 1});
  return out;
}

DecaSolution solve_deca(const DecaInstance& instance, std::uint64_t seed, const DecaOptions& options) {
  const WeightedGraph& g = instance.graph;
  std::vector<Weight> beta = normalized_beta(instance);
  DecaSolution out;
  if (g.n() < 1) throw InputError("graph has no vertices");
  std::mt19937_64 rng(seed);
  if (g.n() == 1) {
    out.tight.b.assign(1, 0);
  } else {
    ExtremeSetsTree tree = extreme_sets_tree(g, rng(), options.extreme);
    TightDegrees tight = external_augmentation(g, instance.tau, beta, tree);
    out.external_weight = tight.w_total;
    out.tight = parity_fix(tight, beta);

    if (instance.tau == 1) {
      for (const auto& e : connect_components(g, beta)) out.audit.push_back({e.u, e.v, e.w, EdgePhase::kFinish});
      out.edges = merge(out.audit);
      for (const auto& e : out.edges) out.total_weight += e.w;
      Weight optimum = static_cast<Weight>(connected_components(g).size()) - 1;
      if (out.total_weight != optimum) {
        throw DefectError("linking used " + to_string(out.total_weight) + " edges for " + to_string(optimum + 1) +
                          " components");
      }
      if (options.verify) out.report = verify_solution(g, instance.tau, beta, out.edges, optimum);
      return out;
    }
    std::vector<Weight> remaining = out.tight.b;
    WeightedGraph h = g;
    if (!options.skip_chain && out.tight.w_total > 0) {
      ChainResult chain = chain_phase(g, instance.tau, remaining, tree, options.chain);
      out.chain = chain.stats;
      for (const auto& e : chain.edges) out.audit.push_back({e.u, e.v, e.w, EdgePhase::kChain});
      remaining = std::move(chain.b_remaining);
      h = add_edges(g, chain.edges);
    }
    std::uint64_t finish_seed = rng();
    if (std::any_of(remaining.begin(), remaining.end(), [](Weight x) { return x > 0; })) {
      FinishResult finish = finish_demand_one(h, instance.tau, remaining, tree, finish_seed, options.extreme);
      out.finish_fast_steps = finish.fast_steps;
      out.finish_general_steps = finish.general_steps;
      for (const auto& e : finish.edges) out.audit.push_back({e.u, e.v, e.w, EdgePhase::kFinish});
    }
  }
  out.edges = merge(out.audit);
  for (const auto& e : out.edges) out.total_weight += e.w;
  if (out.total_weight != (out.external_weight + 1) / 2) {
    throw DefectError("solution weight " + to_string(out.total_weight) + " differs from the optimum " +
                      to_string((out.external_weight + 1) / 2));
  }
  if (options.verify) {
    out.report = verify_solution(g, instance.tau, beta, out.edges, (out.external_weight + 1) / 2);
  }
  return out;
}

SplitOffResult split_off(const WeightedGraph& g, Vertex s, std::uint64_t seed, const DecaOptions& options) {
  int n = g.n();
  if (s < 0 || s >= n) throw InputError("split-off vertex out of range");
  if (g.degree(s) % 2 != 0) {
    throw InputError("vertex " + std::to_string(s + 1) + " has odd weighted degree " + to_string(g.degree(s)));
  }
  std::vector<Vertex> rest;
  std::vector<Vertex> index(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (v == s) continue;
    index[v] = static_cast<Vertex>(rest.size());
    rest.push_back(v);
  }
  SplitOffResult out;
  if (rest.empty()) return out;

  DecaInstance instance;
  instance.graph = induced_subgraph(g, rest);
  instance.beta.assign(rest.size(), 0);
  for (const Arc& a : g.adjacency(s)) instance.beta[index[a.to]] += a.w;
  instance.tau = rest.size() >= 2 ? steiner_connectivity(g, rest) : 0;
  out.steiner = instance.tau;

  DecaSolution sol;
  try {
    sol = solve_deca(instance, seed, options);
  } catch (const InfeasibleError& e) {
    if (instance.tau >= 2) {
      throw DefectError(std::string("splitting off reduced to an infeasible instance: ") + e.what());
    }
    throw InfeasibleError("vertex " + std::to_string(s + 1) +
                          " cannot be split off without disconnecting its neighbours: " + e.what());
  }
  std::vector<Weight> left = instance.beta;
  std::vector<SolutionEdge> audit;
  for (const auto& e : sol.edges) {
    left[e.u] -= e.w;
    left[e.v] -= e.w;
    audit.push_back({rest[e.u], rest[e.v], e.w, EdgePhase::kChain});
  }

  // Close the leftover degree: the i-th unit pairs with the (i + k/2)-th.
  std::vector<std::pair<Vertex, Weight>> runs;
  Weight units = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] < 0) throw DefectError("augmentation exceeded the degree of the split vertex");
    if (left[i] > 0) {
      runs.push_back({rest[i], left[i]});
      units += left[i];
    }
  }
  Weight half = units / 2;
  std::vector<std::pair<Vertex, Weight>> first;
  std::vector<std::pair<Vertex, Weight>> second;
  Weight seen = 0;
  for (auto [v, c] : runs) {
    Weight lo = std::min(c, std::max<Weight>(half - seen, 0));
    if (lo > 0) first.push_back({v, lo});
    if (c - lo > 0) second.push_back({v, c - lo});
    seen += c;
  }
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < first.size() && j < second.size()) {
    Weight c = std::min(first[i].second, second[j].second);
    if (first[i].first == second[j].first) {
      out.dropped_self_pairs += static_cast<int>(c);
    } else {
      audit.push_back({first[i].first, second[j].first, c, EdgePhase::kMatching});
    }
    first[i].second -= c;
    second[j].second -= c;
    if (first[i].second == 0) ++i;
    if (second[j].second == 0) ++j;
  }
  out.edges = merge(audit);
  return out;
}

}  // namespace augcut
