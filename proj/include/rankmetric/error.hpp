#pragma once

#include <stdexcept>
#include <string>

namespace rankmetric {

// Bad parameters or a violated precondition. The CLI maps this to exit code 1.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A desk-scale enumeration guard was exceeded. The CLI maps this to exit code 2.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed (inexact division, broken sum identity, ...).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgument(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InvariantViolation(msg);
}

}  // namespace detail
}  // namespace rankmetric
