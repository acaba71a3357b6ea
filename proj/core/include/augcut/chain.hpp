#pragma once

#include <functional>
#include <list>
#include <set>
#include <utility>
#include <vector>

#include "augcut/graph.hpp"
#include "augcut/laminar_tree.hpp"
#include "augcut/path_tree.hpp"

namespace augcut {

// How many applications a set with demand >= 2 may receive before it leaves
// the list. kBelowTwo stops exactly when the demand drops below 2;
// kPrinted uses floor((τ - δ(X)) / δ_F(X)), which may run past that point.
enum class T2Rule { kBelowTwo, kPrinted };

struct ChainSnapshot {
  Weight t_global = 0;
  std::vector<int> listed;              // tree nodes X_1..X_r
  std::vector<Edge> live;               // current chain with implicit weights
  std::vector<Edge> materialized;       // edges already written to the graph
  std::vector<Weight> b;                // remaining vacancy per vertex
  std::vector<Weight> delta;            // current δ per tree node
};

struct ChainStats {
  int batches = 0;
  int case1 = 0;  // a chain endpoint ran out of vacant degree
  int case2 = 0;  // a listed set's demand fell below 2
  int case3 = 0;  // a listed set stopped being extreme
  int self_checks = 0;
  bool single_set_left = false;
};

struct ChainOptions {
  T2Rule t2_rule = T2Rule::kBelowTwo;
  // Compare the lazy state with a from-scratch recomputation after every batch.
  bool self_check = false;
  std::function<void(const ChainSnapshot&)> on_batch;
};

struct ChainResult {
  std::vector<Edge> edges;  // merged by endpoint pair
  std::vector<Weight> b_remaining;
  ChainStats stats;
};

struct TValues {
  Weight t1 = kWeightMax;
  Weight t2 = kWeightMax;
  Weight t3 = kWeightMax;
  Weight t = kWeightMax;
};

// Augmentation chains over the extreme-sets tree with lazily applied
// multiplicities. b must be tight degree bounds for (g, tau).
class ChainEngine {
 public:
  ChainEngine(const WeightedGraph& g, Weight tau, std::vector<Weight> b, const ExtremeSetsTree& tree,
              ChainOptions options = {});

  // True once no set with demand >= 2 is listed, or a single one is.
  bool done() const { return order_.size() <= 1; }
  TValues compute_t() const;
  // Applies the current chain t times and processes the resulting events.
  void apply(Weight t);
  ChainResult run();

  std::vector<int> listed_sets() const;
  // Chain edges in list order, with their implicit weights.
  std::vector<Edge> chain_edges() const;
  // t3 of the i-th listed set; kWeightMax when no descendant can overtake it.
  Weight t3_query(int position);
  ChainSnapshot snapshot() const;
  const ChainStats& stats() const { return stats_; }
  Weight b_true(Vertex v) const;

 private:
  struct Entry {
    int node = -1;
    bool alive = false;
    std::list<int>::iterator it;
    int left_edge = -1;
    int right_edge = -1;
    int cls = -1;
    Weight key = 0;
    Weight expiry = kWeightMax;
    bool dirty = false;
  };
  struct LiveEdge {
    Vertex u = 0;  // endpoint in the left set
    Vertex v = 0;  // endpoint in the right set
    int left = -1;
    int right = -1;
    Weight birth = 0;
    bool alive = false;
  };

  void set_degree(Vertex v, int d);
  void update_vacancy(Vertex v);
  std::pair<Weight, int> max_vacancy(int lo, int hi) const;
  int degree_classes(const Entry& e) const;
  Weight delta_true(const Entry& e) const;
  Weight t3_compute(const Entry& e);
  std::vector<int> refresh(int node);
  bool currently_extreme(int node);
  void detach(int edge);
  void attach(int left, int right);
  Vertex pick_endpoint(int entry, bool right_slot);
  void mark_dirty(int entry);
  void finalize_dirty();
  void reestablish_ends();
  void repair();
  void remove_entry(int entry);
  int insert_entry(int node, std::list<int>::iterator before);
  void self_check();

  const WeightedGraph* g_;
  Weight tau_;
  std::vector<Weight> b_initial_;
  const ExtremeSetsTree* tree_;
  ChainOptions options_;
  PathTree pt_;
  Weight big_ = 0;  // the exclusion constant M
  std::vector<int> leaf_of_;
  std::vector<int> first_pos_;
  std::vector<int> end_pos_;
  std::vector<Vertex> vertex_at_;
  std::vector<Weight> vac_max_;
  int vac_cap_ = 1;

  std::vector<int> deg_f_;
  std::vector<Weight> key1_;
  std::vector<Weight> b_explicit_;
  std::vector<std::vector<int>> vertex_edges_;
  std::set<std::pair<Weight, Vertex>> q1_[3];
  std::set<std::pair<Weight, int>> q2_[3];
  std::set<std::pair<Weight, int>> t3_;

  std::vector<Entry> entries_;
  std::list<int> order_;
  std::vector<LiveEdge> edges_;
  std::vector<int> dirty_;     // queue keys and t3 need recomputing
  std::vector<int> unlinked_;  // may be missing a chain edge
  std::vector<Edge> materialized_;
  Weight t_global_ = 0;
  ChainStats stats_;
};

ChainResult chain_phase(const WeightedGraph& g, Weight tau, const std::vector<Weight>& b,
                        const ExtremeSetsTree& tree, const ChainOptions& options = {});

}  // namespace augcut
