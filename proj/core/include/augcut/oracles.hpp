#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "augcut/deca.hpp"
#include "augcut/graph.hpp"
#include "augcut/laminar_tree.hpp"

namespace augcut {

// Reference implementations by exhaustive enumeration. Slow on purpose.

// Extreme-sets tree from all 2^n subsets. n <= 16.
ExtremeSetsTree brute_extreme_sets(const WeightedGraph& g);

// {t != s : λ(s,t) <= phi}, sorted, with λ taken over all subsets. n <= 16.
std::vector<Vertex> brute_cut_threshold(const WeightedGraph& g, Vertex s, Weight phi);

// Minimum total weight of an edge multiset F with min cut of G ⊎ F >= tau and
// deg_F <= beta, by iterative deepening over crossing edges of violated cuts.
// nullopt when no F of weight <= weight_cap exists. n <= 10. A negative cap
// means n * tau.
std::optional<Weight> exhaustive_deca_optimum(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta,
                                              Weight weight_cap = -1);

// Chain phase without batching or lazy state: recompute the extreme sets by
// brute force, link the maximal demand >= 2 sets at lowest-id vacant
// vertices, add each chain edge once, repeat. Finishes with finish_general.
// b must be tight degrees. n <= 16.
std::vector<Edge> slow_chain_solver(const WeightedGraph& g, Weight tau, std::vector<Weight> b);

// Checks min cut of G ⊎ F >= tau, deg_F <= beta and total weight against
// `expected`; expected defaults to ceil(w/2) from external augmentation.
VerificationReport verify_solution(const WeightedGraph& g, Weight tau, const std::vector<Weight>& beta,
                                   const std::vector<Edge>& f, std::optional<Weight> expected = std::nullopt,
                                   std::uint64_t seed = 0);

// Minimum over pairs x, y of `terminals` of λ(x, y), by max flow per pair.
Weight pairwise_steiner_connectivity(const WeightedGraph& g, const std::vector<Vertex>& terminals);

}  // namespace augcut
