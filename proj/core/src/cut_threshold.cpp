#include "augcut/cut_threshold.hpp"

#include <random>
#include <string>

#include "augcut/errors.hpp"
#include "augcut/flow.hpp"
#include "augcut/isolating_cuts.hpp"

namespace augcut {

namespace {

enum : char { kUndecided = 0, kInside = 1, kOutside = 2 };

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

class Decider {
 public:
  Decider(const WeightedGraph& g, Vertex s, Weight phi, int lo, int hi)
      : g_(g), s_(s), phi_(phi), lo_(lo), hi_(hi), state_(g.n(), kUndecided) {}

  bool mark(Vertex v, char state) {
    if (state_[v] != kUndecided) return true;
    state_[v] = state;
    if (state == kInside) {
      ++inside_;
    } else {
      ++outside_;
    }
    return outside_ <= hi_ && g_.n() - inside_ >= lo_;
  }

  char state(Vertex v) const { return state_[v]; }

  CutThresholdResult result() const {
    CutThresholdResult out;
    out.s = s_;
    out.phi = phi_;
    for (Vertex v = 0; v < g_.n(); ++v) {
      (state_[v] == kInside ? out.inside : out.complement).push_back(v);
    }
    return out;
  }

 private:
  const WeightedGraph& g_;
  Vertex s_;
  Weight phi_;
  int lo_;
  int hi_;
  std::vector<char> state_;
  int inside_ = 0;
  int outside_ = 0;
};

// Isolating cuts against s with value <= φ certify their whole side.
bool certify_with_isolating_cuts(const WeightedGraph& g, Vertex s, Weight phi, Decider& d,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int level = 1; (1 << level) <= g.n(); ++level) {
    std::vector<Vertex> terminals{s};
    std::bernoulli_distribution pick(1.0 / (1 << level));
    for (Vertex v = 0; v < g.n(); ++v) {
      if (v != s && d.state(v) == kUndecided && pick(rng)) terminals.push_back(v);
    }
    if (terminals.size() < 2) continue;
    for (const auto& cut : isolating_cuts(g, terminals)) {
      if (cut.terminal == s || cut.value > phi) continue;
      for (Vertex v : cut.side) {
        if (!d.mark(v, kInside)) return false;
      }
    }
  }
  return true;
}

std::optional<CutThresholdResult> decide(const WeightedGraph& g, Vertex s, Weight phi, int lo,
                                         int hi, const CutThresholdOptions& options) {
  if (s < 0 || s >= g.n()) throw InputError("source " + std::to_string(s) + " out of range");
  if (phi < 0) throw InputError("threshold must be non-negative");
  Decider d(g, s, phi, lo, hi);
  if (!d.mark(s, kOutside)) return std::nullopt;

  // {s} itself separates s from everything.
  if (g.degree(s) <= phi) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!d.mark(v, kInside)) return std::nullopt;
    }
    return d.result();
  }

  auto order = bfs_order(g, s);
  std::vector<char> reached(g.n(), 0);
  for (Vertex v : order) reached[v] = 1;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!reached[v] && !d.mark(v, kInside)) return std::nullopt;
  }

  if (options.backend == CutThresholdBackend::kAccelerated &&
      !certify_with_isolating_cuts(g, s, phi, d, options.seed)) {
    return std::nullopt;
  }

  // Vertices known to have λ(s, v) > φ are merged into the sink: a cut of
  // value <= φ separating s from u can never cut such a v away from s.
  FlowNetwork net(g);
  net.set_role(s, FlowNetwork::Role::kSink);
  for (Vertex u : order) {
    if (d.state(u) != kUndecided) continue;
    if (g.degree(u) <= phi) {
      if (!d.mark(u, kInside)) return std::nullopt;
      continue;
    }
    net.set_role(u, FlowNetwork::Role::kSource);
    Weight value = net.run(phi);
    if (value <= phi) {
      for (Vertex v : net.source_side()) {
        if (!d.mark(v, kInside)) return std::nullopt;
      }
      net.set_role(u, FlowNetwork::Role::kNone);
    } else {
      if (!d.mark(u, kOutside)) return std::nullopt;
      net.set_role(u, FlowNetwork::Role::kSink);
    }
    net.reset_flow();
  }
  return d.result();
}

}  // namespace

CutThresholdResult cut_threshold(const WeightedGraph& g, Vertex s, Weight phi,
                                 const CutThresholdOptions& options) {
  return *decide(g, s, phi, 0, g.n(), options);
}

std::optional<CutThresholdResult> cut_threshold_bounded(const WeightedGraph& g, Vertex s, Weight phi,
                                                        int lo, int hi,
                                                        const CutThresholdOptions& options) {
  return decide(g, s, phi, lo, hi, options);
}

}  // namespace augcut
