#pragma once

#include <span>
#include <vector>

#include "augcut/graph.hpp"

namespace augcut {

struct IsolatingCut {
  Vertex terminal = 0;
  Weight value = 0;
  std::vector<Vertex> side;
};

// Minimum cut separating each terminal from the other terminals, in input
// order. Uses ceil(log2 k) bipartition flows plus one local flow per
// terminal. Throws InputError when fewer than two distinct terminals are given.
std::vector<IsolatingCut> isolating_cuts(const WeightedGraph& g, std::span<const Vertex> terminals);

}  // namespace augcut
