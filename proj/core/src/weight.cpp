#include "augcut/weight.hpp"

#include <algorithm>

#include "augcut/errors.hpp"

namespace augcut {

std::string to_string(Weight w) {
  if (w == 0) return "0";
  bool negative = w < 0;
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(w + 1)) + 1
               : static_cast<unsigned __int128>(w);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Weight parse_weight(std::string_view text) {
  if (text.empty()) throw InputError("empty integer");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw InputError("malformed integer '" + std::string(text) + "'");
  Weight value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw InputError("malformed integer '" + std::string(text) + "'");
    }
    if (!checked_mul(value, 10, value) || !checked_add(value, c - '0', value)) {
      throw InputError("integer out of range '" + std::string(text) + "'");
    }
  }
  return negative ? -value : value;
}

int bit_width_signed(Weight w) {
  unsigned __int128 magnitude =
      w < 0 ? static_cast<unsigned __int128>(-(w + 1)) + 1
            : static_cast<unsigned __int128>(w);
  int bits = 0;
  while (magnitude > 0) {
    ++bits;
    magnitude >>= 1;
  }
  return bits + 1;
}

bool checked_mul(Weight a, Weight b, Weight& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

bool checked_add(Weight a, Weight b, Weight& out) {
  return !__builtin_add_overflow(a, b, &out);
}

}  // namespace augcut
