#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "augcut/chain.hpp"
#include "augcut/extreme_sets.hpp"
#include "augcut/graph.hpp"
#include "augcut/laminar_tree.hpp"

namespace augcut {

// Degree-constrained edge connectivity augmentation: find a minimum weight
// edge set F with min cut of G ⊎ F at least tau and deg_F(v) <= beta(v).
struct DecaInstance {
  WeightedGraph graph;
  Weight tau = 0;
  // One bound per vertex, kUnbounded for none. Empty means all unbounded.
  std::vector<Weight> beta;
};

struct TightDegrees {
  std::vector<Weight> b;
  Weight w_total = 0;
};

enum class EdgePhase { kChain, kFinish, kMatching };

struct SolutionEdge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;
  EdgePhase phase = EdgePhase::kChain;
};

struct VerificationReport {
  Weight min_cut_after = 0;
  std::vector<Vertex> degree_violations;
  Weight weight_total = 0;
  Weight optimal_weight_expected = 0;
  bool pass = false;
};

struct DecaSolution {
  std::vector<Edge> edges;          // merged by endpoint pair, u < v
  std::vector<SolutionEdge> audit;  // per-phase provenance
  Weight total_weight = 0;
  Weight external_weight = 0;       // w before the parity fix
  TightDegrees tight;
  ChainStats chain;
  int finish_fast_steps = 0;
  int finish_general_steps = 0;
  std::optional<VerificationReport> report;
};

struct DecaOptions {
  ExtremeSetsOptions extreme;
  ChainOptions chain;
  // Skip the chain phase and let the finishing step do everything. Only
  // meant for small cross-checks.
  bool skip_chain = false;
  bool verify = false;
};

// beta expanded to one entry per vertex; throws InputError on bad sizes or
// negative bounds.
std::vector<Weight> normalized_beta(const DecaInstance& instance);

// Minimum w = b(V) such that every extreme set X gets b(X) >= τ - δ(X),
// filling deficient sets in postorder, lowest vertex id first. Throws
// InfeasibleError when some set cannot be covered within beta.
TightDegrees external_augmentation(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta,
                                   const ExtremeSetsTree& tree);

// Makes w even by adding 1 at the lowest-id vertex with slack.
TightDegrees parity_fix(TightDegrees b, const std::vector<Weight>& beta);

// Completes an instance whose extreme sets all have demand <= 1, using at
// most b(v) new degree per vertex. Returns unit edges, b(V)/2 of them.
struct FinishResult {
  std::vector<Edge> edges;
  int fast_steps = 0;
  int general_steps = 0;
};
// `family` is any tree whose nodes include every extreme set of g, such as
// the extreme-sets tree of g before a partial solution was added.
FinishResult finish_demand_one(const WeightedGraph& g, Weight tau, std::vector<Weight> b,
                               const ExtremeSetsTree& family, std::uint64_t seed,
                               const ExtremeSetsOptions& options = {});
FinishResult finish_demand_one(const WeightedGraph& g, Weight tau, std::vector<Weight> b, std::uint64_t seed,
                               const ExtremeSetsOptions& options = {});

// Same contract as finish_demand_one without the demand restriction: adds
// one unit edge at a time, keeping only candidates that lower the optimum.
std::vector<Edge> finish_general(const WeightedGraph& g, Weight tau, std::vector<Weight> b, std::uint64_t seed,
                                 const ExtremeSetsOptions& options = {});

// Target connectivity 1 needs one edge fewer than the number of components,
// which is more than ceil(w/2) once there are four or more components.
// Builds such a tree of unit edges within beta or throws InfeasibleError.
std::vector<Edge> connect_components(const WeightedGraph& g, const std::vector<Weight>& beta);

// Optimum weight ceil(w/2) (components - 1 when tau = 1) of (g, tau, beta), or nullopt if infeasible.
std::optional<Weight> deca_optimum(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta,
                                   std::uint64_t seed, const ExtremeSetsOptions& options = {});

DecaSolution solve_deca(const DecaInstance& instance, std::uint64_t seed, const DecaOptions& options = {});

struct SplitOffResult {
  std::vector<Edge> edges;  // on the original vertex ids, s excluded
  Weight steiner = 0;       // connectivity of V ∖ {s} before and after
  int dropped_self_pairs = 0;
};

// Removes s and reconnects its degree through shortcut edges so that the
// Steiner connectivity of V ∖ {s} is preserved. Throws InputError when the
// weighted degree of s is odd, InfeasibleError when the connectivity is 1
// and no complete splitting keeps V ∖ {s} connected.
SplitOffResult split_off(const WeightedGraph& g, Vertex s, std::uint64_t seed, const DecaOptions& options = {});

}  // namespace augcut
