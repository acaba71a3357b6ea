#include "augcut/flow.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "augcut/errors.hpp"

namespace augcut {

namespace {
std::atomic<std::uint64_t> g_flow_calls{0};
}

std::uint64_t max_flow_calls() { return g_flow_calls.load(); }
void reset_max_flow_calls() { g_flow_calls.store(0); }

FlowNetwork::FlowNetwork(const WeightedGraph& g)
    : g_(&g),
      is_touched_(g.arc_count(), 0),
      role_(g.n(), Role::kNone),
      level_(g.n(), -1),
      level_stamp_(g.n(), 0),
      next_arc_(g.n(), 0) {
  residual_.resize(g.arc_count());
  for (Vertex v = 0; v < g.n(); ++v) {
    int base = g.arc_offset(v);
    auto arcs = g.adjacency(v);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) residual_[base + i] = arcs[i].w;
  }
  queue_.reserve(g.n());
}

void FlowNetwork::set_role(Vertex v, Role role) {
  if (role_[v] == role) return;
  if (role_[v] == Role::kSource) std::erase(sources_, v);
  if (role == Role::kSource) sources_.push_back(v);
  if (role_[v] == Role::kNone) with_role_.push_back(v);
  role_[v] = role;
}

void FlowNetwork::clear_roles() {
  for (Vertex v : with_role_) role_[v] = Role::kNone;
  with_role_.clear();
  sources_.clear();
}

void FlowNetwork::touch(int arc) {
  if (!is_touched_[arc]) {
    is_touched_[arc] = 1;
    touched_.push_back(arc);
  }
}

void FlowNetwork::reset_flow() {
  const auto& g = *g_;
  // Both arcs of an edge start at w and always sum to 2w.
  for (int arc : touched_) {
    int twin = g.twin(arc);
    if (arc < twin) {
      Weight half = (residual_[arc] + residual_[twin]) / 2;
      residual_[arc] = half;
      residual_[twin] = half;
    }
  }
  for (int arc : touched_) is_touched_[arc] = 0;
  touched_.clear();
}

bool FlowNetwork::build_levels() {
  const auto& g = *g_;
  ++stamp_;
  queue_.clear();
  for (Vertex v : sources_) {
    level_[v] = 0;
    level_stamp_[v] = stamp_;
    next_arc_[v] = g.arc_offset(v);
    queue_.push_back(v);
  }
  sink_level_ = -1;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Vertex v = queue_[head];
    if (sink_level_ >= 0 && level_[v] >= sink_level_) break;
    if (role_[v] == Role::kSink) continue;
    int base = g.arc_offset(v);
    auto arcs = g.adjacency(v);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      if (residual_[base + i] <= 0) continue;
      Vertex to = arcs[i].to;
      if (level_stamp_[to] == stamp_) continue;
      level_stamp_[to] = stamp_;
      level_[to] = level_[v] + 1;
      next_arc_[to] = g.arc_offset(to);
      if (role_[to] == Role::kSink) {
        sink_level_ = level_[to];
      } else if (sink_level_ < 0) {
        queue_.push_back(to);
      }
    }
  }
  return sink_level_ >= 0;
}

Weight FlowNetwork::push(Vertex v, Weight amount) {
  if (role_[v] == Role::kSink) return amount;
  if (level_[v] >= sink_level_) return 0;
  const auto& g = *g_;
  int end = g.arc_offset(v) + static_cast<int>(g.adjacency(v).size());
  for (int& a = next_arc_[v]; a < end; ++a) {
    if (residual_[a] <= 0) continue;
    Vertex to = g.adjacency(v)[a - g.arc_offset(v)].to;
    if (level_stamp_[to] != stamp_ || level_[to] != level_[v] + 1) continue;
    Weight got = push(to, std::min(amount, residual_[a]));
    if (got > 0) {
      touch(a);
      touch(g.twin(a));
      residual_[a] -= got;
      residual_[g.twin(a)] += got;
      return got;
    }
  }
  return 0;
}

Weight FlowNetwork::run(Weight limit) {
  Weight value = 0;
  while (value <= limit && build_levels()) {
    for (Vertex s : sources_) {
      while (value <= limit) {
        Weight want = limit == kWeightMax ? kWeightMax : limit - value + 1;
        Weight got = push(s, want);
        if (got == 0) break;
        value += got;
      }
      if (value > limit) break;
    }
  }
  g_flow_calls.fetch_add(1, std::memory_order_relaxed);
  return value;
}

std::vector<Vertex> FlowNetwork::source_side() const {
  const auto& g = *g_;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex v : sources_) {
    seen[v] = 1;
    stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    int base = g.arc_offset(v);
    auto arcs = g.adjacency(v);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      if (residual_[base + i] > 0 && !seen[arcs[i].to]) {
        seen[arcs[i].to] = 1;
        stack.push_back(arcs[i].to);
      }
    }
  }
  return from_mask(seen);
}

FlowResult max_flow(const WeightedGraph& g, Vertex s, Vertex t) {
  if (s < 0 || s >= g.n() || t < 0 || t >= g.n()) throw InputError("flow terminal out of range");
  if (s == t) throw InputError("flow source and sink coincide");
  FlowNetwork net(g);
  net.set_role(s, FlowNetwork::Role::kSource);
  net.set_role(t, FlowNetwork::Role::kSink);
  FlowResult out;
  out.value = net.run();
  out.s_side = net.source_side();
  return out;
}

Weight connectivity(const WeightedGraph& g, Vertex s, Vertex t) { return max_flow(g, s, t).value; }

namespace {

std::vector<Vertex> bfs_order(const WeightedGraph& g, Vertex start) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> order{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Arc& a : g.adjacency(order[head])) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        order.push_back(a.to);
      }
    }
  }
  return order;
}

}  // namespace

MinCut global_min_cut(const WeightedGraph& g) {
  if (g.n() < 2) throw InputError("global minimum cut needs at least two vertices");
  auto components = connected_components(g);
  if (components.size() > 1) return {0, components.front()};

  // For any vertex order, the minimum over i of λ({v_0..v_{i-1}}, v_i) is
  // the global minimum cut value.
  MinCut best;
  Vertex low = 0;
  for (Vertex v = 1; v < g.n(); ++v) {
    if (g.degree(v) < g.degree(low)) low = v;
  }
  best.value = g.degree(low);
  best.side = {low};
  auto order = bfs_order(g, 0);
  FlowNetwork net(g);
  net.set_role(order[0], FlowNetwork::Role::kSink);
  for (std::size_t i = 1; i < order.size(); ++i) {
    Vertex u = order[i];
    net.set_role(u, FlowNetwork::Role::kSource);
    Weight value = net.run(best.value - 1);
    if (value < best.value) {
      best.value = value;
      best.side = net.source_side();
    }
    net.reset_flow();
    net.set_role(u, FlowNetwork::Role::kSink);
  }
  return best;
}

Weight steiner_connectivity(const WeightedGraph& g, std::span<const Vertex> terminals) {
  std::vector<Vertex> t(terminals.begin(), terminals.end());
  for (Vertex v : t) {
    if (v < 0 || v >= g.n()) throw InputError("terminal " + std::to_string(v) + " out of range");
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.size() < 2) throw InputError("Steiner connectivity needs at least two terminals");
  // Same prefix argument as the global minimum cut, restricted to terminals.
  FlowNetwork net(g);
  net.set_role(t[0], FlowNetwork::Role::kSink);
  Weight best = kWeightMax;
  for (std::size_t i = 1; i < t.size(); ++i) {
    net.set_role(t[i], FlowNetwork::Role::kSource);
    Weight value = net.run(best == kWeightMax ? kWeightMax : best - 1);
    best = std::min(best, value);
    net.reset_flow();
    net.set_role(t[i], FlowNetwork::Role::kSink);
  }
  return best;
}

}  // namespace augcut
