#pragma once

#include <cstdint>
#include <vector>

#include "augcut/graph.hpp"

namespace augcut {

// w'(e) = m·N·w(e) + r(e) with r(e) uniform on {1..N} and N = m·n^d.
// graph has the same vertices and edge order as the base graph.
struct PerturbedWeights {
  Weight N = 0;
  int exponent = 4;
  std::vector<Weight> r;
  WeightedGraph graph;
};

// Throws OverflowError (with the required bit width) when w' or the total
// perturbed weight does not fit the 128-bit weight type.
PerturbedWeights perturb(const WeightedGraph& g, std::uint64_t seed, int exponent = 4);

}  // namespace augcut
