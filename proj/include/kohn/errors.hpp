#pragma once

#include <stdexcept>
#include <string>

namespace kohn {

/// Two operands live in different ambient dimensions C^n.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter is outside an operation's precondition (n < 2, r < 1, k < 1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input (polynomial JSON, rational strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_dimension(int n) {
  if (n < 2) throw DomainError("ambient dimension n must be >= 2, got " + std::to_string(n));
}

}  // namespace kohn
