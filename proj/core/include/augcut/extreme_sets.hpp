#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "augcut/cut_threshold.hpp"
#include "augcut/graph.hpp"
#include "augcut/laminar_tree.hpp"

namespace augcut {

struct ExtremeSetsStats {
  int max_depth = 0;
  int subproblems = 0;
  int base_cases = 0;
  int max_retries = 0;  // most sampling attempts spent on one subproblem
  std::int64_t attempts = 0;
  std::uint64_t flow_calls = 0;
};

struct ExtremeSetsOptions {
  int base_case_size = 16;
  int exponent = 4;
  CutThresholdBackend backend = CutThresholdBackend::kNaive;
  ExtremeSetsStats* stats = nullptr;
};

inline constexpr int kMaxBaseCaseSize = 16;

// Exact extreme-sets tree. Disconnected graphs get one node per component
// (components of size one are plain leaves) under the root.
ExtremeSetsTree extreme_sets_tree(const WeightedGraph& g, std::uint64_t seed,
                                  const ExtremeSetsOptions& options = {});

// Candidate tree of a connected contracted graph, leaves labelled by the
// contracted graph's vertex ids. Contains every extreme set as a subtree.
LaminarTree phase1(const ContractedGraph& g, std::uint64_t seed, const ExtremeSetsOptions& options = {},
                   int depth = 0);

// max(2, ceil(n/16)) <= |X| <= min(n-2, floor(15n/16)).
bool balance_accepts(int n, int x_size);
int retry_cap(int n);

struct BalancedPartition {
  std::vector<Vertex> x;  // sorted
  Vertex s = 0;
  Vertex t = 0;
  Weight phi = 0;  // λ'(s, t) under the perturbed weights
  int attempts = 0;
};

// One sampling attempt: perturb, φ = λ'(s,t), X = V ∖ ct'(s, φ). Returns the
// X found, balanced or not.
BalancedPartition sample_partition_once(const WeightedGraph& g, std::mt19937_64& rng,
                                        const ExtremeSetsOptions& options = {});

// Repeats attempts until the balance bound holds. Throws MonteCarloFailure
// after retry_cap(n) attempts. Requires n > 4.
BalancedPartition sample_balanced_partition(const WeightedGraph& g, std::uint64_t seed,
                                            const ExtremeSetsOptions& options = {});

// Exact extreme sets by enumerating all subsets. Throws InputError for
// n > 16.
LaminarTree base_case_extreme_sets(const WeightedGraph& g);

// Deletes the leaf labelled notx_leaf from t_notx, then grafts the rest in
// place of the leaf labelled x_leaf in t_x.
LaminarTree combine_trees(const LaminarTree& t_x, const LaminarTree& t_notx, Vertex x_leaf,
                          Vertex notx_leaf);

// Keeps a node iff its cut value is below the values of all its current
// children; removed nodes hand their children to their parent.
ExtremeSetsTree phase2_prune(const WeightedGraph& g, const LaminarTree& candidate);

}  // namespace augcut
