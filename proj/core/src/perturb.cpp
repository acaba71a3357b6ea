#include "augcut/perturb.hpp"

#include <random>
#include <string>

#include "augcut/errors.hpp"

namespace augcut {

namespace {

using U128 = unsigned __int128;

// Uniform on [1, bound] by rejection from 128 random bits.
Weight uniform_positive(std::mt19937_64& rng, Weight bound) {
  U128 range = static_cast<U128>(bound);
  U128 limit = ~static_cast<U128>(0) - (~static_cast<U128>(0) % range);
  while (true) {
    U128 x = (static_cast<U128>(rng()) << 64) | rng();
    if (x < limit) return static_cast<Weight>(x % range) + 1;
  }
}

int required_bits(const WeightedGraph& g, int exponent) {
  // 2·m·N·(Σw + 1) with N = m·n^d, in bits, plus a sign bit.
  long double estimate = 2.0L * g.m() * g.m() * (static_cast<long double>(g.total_weight()) + 1.0L);
  for (int i = 0; i < exponent; ++i) estimate *= g.n();
  int bits = 1;
  while (estimate >= 1.0L) {
    estimate /= 2.0L;
    ++bits;
  }
  return bits;
}

}  // namespace

PerturbedWeights perturb(const WeightedGraph& g, std::uint64_t seed, int exponent) {
  if (exponent < 4) throw InputError("perturbation exponent must be at least 4");
  PerturbedWeights out;
  out.exponent = exponent;
  Weight N = g.m();
  bool ok = true;
  for (int i = 0; i < exponent && ok; ++i) ok = checked_mul(N, g.n(), N);
  Weight scale = 0;
  ok = ok && checked_mul(N, g.m(), scale);
  Weight total = 0;
  std::vector<Edge> edges;
  edges.reserve(g.m());
  std::mt19937_64 rng(seed);
  out.r.reserve(g.m());
  for (const auto& e : g.edges()) {
    if (!ok) break;
    Weight r = uniform_positive(rng, N);
    Weight w = 0;
    ok = checked_mul(scale, e.w, w) && checked_add(w, r, w) && checked_add(total, w, total);
    out.r.push_back(r);
    edges.push_back({e.u, e.v, w});
  }
  // Cut values are sums of edge weights, and flow code adds one more total.
  ok = ok && checked_add(total, total, total);
  if (!ok) {
    int bits = required_bits(g, exponent);
    throw OverflowError("perturbed weights need about " + std::to_string(bits) +
                            " bits, more than the 128-bit weight type holds",
                        bits);
  }
  out.N = N;
  out.graph = WeightedGraph::build(g.n(), std::move(edges));
  return out;
}

}  // namespace augcut
