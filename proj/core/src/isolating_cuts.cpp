#include "augcut/isolating_cuts.hpp"

#include <algorithm>
#include <string>

#include "augcut/errors.hpp"
#include "augcut/flow.hpp"

namespace augcut {

std::vector<IsolatingCut> isolating_cuts(const WeightedGraph& g, std::span<const Vertex> terminals) {
  std::vector<int> index(g.n(), -1);
  int k = static_cast<int>(terminals.size());
  for (int i = 0; i < k; ++i) {
    Vertex t = terminals[i];
    if (t < 0 || t >= g.n()) throw InputError("terminal " + std::to_string(t) + " out of range");
    if (index[t] >= 0) throw InputError("duplicate terminal " + std::to_string(t));
    index[t] = i;
  }
  if (k < 2) throw InputError("isolating cuts need at least two terminals");

  int bits = 0;
  while ((1 << bits) < k) ++bits;

  // pattern[v] collects, per bit, which side of that bipartition cut v is on.
  std::vector<int> pattern(g.n(), 0);
  FlowNetwork net(g);
  for (int b = 0; b < bits; ++b) {
    net.clear_roles();
    net.reset_flow();
    for (int i = 0; i < k; ++i) {
      net.set_role(terminals[i], (i >> b) & 1 ? FlowNetwork::Role::kSource : FlowNetwork::Role::kSink);
    }
    net.run();
    for (Vertex v : net.source_side()) pattern[v] |= 1 << b;
  }

  // Region of terminal i: vertices whose side pattern equals i.
  std::vector<int> region(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (pattern[v] < k && pattern[terminals[pattern[v]]] == pattern[v]) region[v] = pattern[v];
  }
  std::vector<std::vector<Vertex>> members(k);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (region[v] >= 0) members[region[v]].push_back(v);
  }

  std::vector<int> local(g.n(), -1);
  std::vector<IsolatingCut> out(k);
  for (int i = 0; i < k; ++i) {
    const auto& part = members[i];
    int sink = static_cast<int>(part.size());
    for (int j = 0; j < sink; ++j) local[part[j]] = j;
    std::vector<Edge> edges;
    for (Vertex v : part) {
      for (const Arc& a : g.adjacency(v)) {
        if (region[a.to] == i) {
          if (v < a.to) edges.push_back({local[v], local[a.to], a.w});
        } else {
          edges.push_back({local[v], sink, a.w});
        }
      }
    }
    WeightedGraph h = WeightedGraph::build(sink + 1, std::move(edges));
    FlowResult f = max_flow(h, local[terminals[i]], sink);
    out[i].terminal = terminals[i];
    out[i].value = f.value;
    for (Vertex v : f.s_side) out[i].side.push_back(part[v]);
    std::sort(out[i].side.begin(), out[i].side.end());
    for (Vertex v : part) local[v] = -1;
  }
  return out;
}

}  // namespace augcut
