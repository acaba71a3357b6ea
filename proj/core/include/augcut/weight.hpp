#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace augcut {

// Cut values, perturbed weights and flow values all share one exact
// 128-bit signed type. Original edge weights are at most 2^20 by contract,
// perturbed weights stay below 2^110 for n <= 2^10.
__extension__ typedef __int128 Weight;

using Vertex = std::int32_t;

inline constexpr Weight kWeightMax =
    static_cast<Weight>(~static_cast<unsigned __int128>(0) >> 1);

// Degree bound meaning "no bound". Far above any reachable degree so that
// plain comparisons such as b(v) < beta(v) keep working.
inline constexpr Weight kUnbounded = kWeightMax / 8;

std::string to_string(Weight w);
Weight parse_weight(std::string_view text);

// Number of bits needed to store |w| plus a sign bit.
int bit_width_signed(Weight w);

// Overflow-checked helpers; return false on overflow.
bool checked_mul(Weight a, Weight b, Weight& out);
bool checked_add(Weight a, Weight b, Weight& out);

inline Weight floor_div(Weight a, Weight b) {
  Weight q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Weight ceil_div(Weight a, Weight b) {
  Weight q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace augcut
