#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "augcut/graph.hpp"

namespace augcut {

enum class CutThresholdBackend { kNaive, kAccelerated };

struct CutThresholdResult {
  Vertex s = 0;
  Weight phi = 0;
  // ct(s, φ) = {t : λ(s,t) <= φ}, sorted.
  std::vector<Vertex> inside;
  // V ∖ ct(s, φ), always containing s, sorted.
  std::vector<Vertex> complement;
};

struct CutThresholdOptions {
  CutThresholdBackend backend = CutThresholdBackend::kNaive;
  std::uint64_t seed = 0;  // terminal sampling of the accelerated backend
};

CutThresholdResult cut_threshold(const WeightedGraph& g, Vertex s, Weight phi,
                                 const CutThresholdOptions& options = {});

// Same decisions, but gives up and returns nullopt as soon as it is certain
// that the complement size falls outside [lo, hi].
std::optional<CutThresholdResult> cut_threshold_bounded(const WeightedGraph& g, Vertex s, Weight phi,
                                                        int lo, int hi,
                                                        const CutThresholdOptions& options = {});

}  // namespace augcut
