#pragma once

#include <stdexcept>
#include <string>

namespace amply {

// Bad input: malformed files, out-of-range arguments, unmet preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graph that does not satisfy the hypotheses an operation requires
// (not regular, not amply regular, parameter condition fails, ...).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact arithmetic left the 64-bit range.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check disagreed. Always a bug, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace amply
