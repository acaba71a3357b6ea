#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "augcut/graph.hpp"

namespace augcut {

struct FlowResult {
  Weight value = 0;
  // Vertices reachable from s in the final residual network.
  std::vector<Vertex> s_side;
};

// Reusable Dinic solver over one graph. Sources and sinks are vertex sets,
// which is the same as contracting each set first. Residual state is undone
// arc by arc, so repeated small flows on a big graph stay cheap.
class FlowNetwork {
 public:
  enum class Role : std::uint8_t { kNone, kSource, kSink };

  explicit FlowNetwork(const WeightedGraph& g);

  const WeightedGraph& graph() const { return *g_; }

  void set_role(Vertex v, Role role);
  Role role(Vertex v) const { return role_[v]; }
  void clear_roles();
  void reset_flow();

  // Maximum flow from the sources to the sinks. Stops as soon as the value
  // exceeds `limit`; the returned value is then some number above the limit.
  Weight run(Weight limit = kWeightMax);

  // Residual reachability from the sources after run(). When run() finished
  // without hitting the limit this is the source-minimal minimum cut side.
  std::vector<Vertex> source_side() const;

 private:
  bool build_levels();
  Weight push(Vertex v, Weight amount);
  void touch(int arc);

  const WeightedGraph* g_;
  std::vector<Weight> residual_;
  std::vector<int> touched_;
  std::vector<char> is_touched_;
  std::vector<Role> role_;
  std::vector<Vertex> with_role_;
  std::vector<Vertex> sources_;
  std::vector<int> level_;
  std::vector<int> level_stamp_;
  std::vector<int> next_arc_;
  std::vector<Vertex> queue_;
  int stamp_ = 0;
  int sink_level_ = -1;
};

// Number of completed FlowNetwork::run calls in this process.
std::uint64_t max_flow_calls();
void reset_max_flow_calls();

FlowResult max_flow(const WeightedGraph& g, Vertex s, Vertex t);
Weight connectivity(const WeightedGraph& g, Vertex s, Vertex t);

struct MinCut {
  Weight value = 0;
  std::vector<Vertex> side;
};

// Minimum over nonempty proper vertex sets. Throws InputError for n < 2.
MinCut global_min_cut(const WeightedGraph& g);

// Minimum cut separating the terminal set. Throws InputError for |T| < 2.
Weight steiner_connectivity(const WeightedGraph& g, std::span<const Vertex> terminals);

}  // namespace augcut
