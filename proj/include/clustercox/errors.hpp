#pragma once

#include <stdexcept>
#include <string>

namespace clustercox {

/// Malformed input: rank mismatch, bad matrix shape, non-symmetrizable data.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algebraic guarantee failed at runtime (e.g. a mutation whose exchange
/// polynomial is not divisible by the old variable). Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw StructuralError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace clustercox
