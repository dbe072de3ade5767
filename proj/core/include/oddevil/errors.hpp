#pragma once

#include <stdexcept>
#include <string>

namespace oddevil {

/// An argument lies outside the domain of an operation (bad radix, letter
/// out of range, non-member passed to rank, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact integer arithmetic left the representable range. Never wraps.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A request exceeds a configured memory or search budget.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A constructive characterization reached a state its theorem rules out.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal invariant (e.g. an exact divisibility) failed. Signals a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace oddevil
