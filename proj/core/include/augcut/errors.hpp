#pragma once

#include <stdexcept>
#include <string>

namespace augcut {

// Malformed input: bad vertex ids, non-positive weights, parse errors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Perturbed weights would not fit the 128-bit weight type.
class OverflowError : public std::overflow_error {
 public:
  OverflowError(const std::string& what, int required_bits)
      : std::overflow_error(what), required_bits_(required_bits) {}
  int required_bits() const { return required_bits_; }

 private:
  int required_bits_;
};

// The randomized partition sampler exhausted its retry budget.
class MonteCarloFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The augmentation instance has no solution under the degree bounds.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant did not hold. Always a bug, never bad input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace augcut
