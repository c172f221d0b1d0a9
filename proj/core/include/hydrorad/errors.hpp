#pragma once

#include <stdexcept>
#include <string>

namespace hydrorad {

/// Argument outside the mathematical or physical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An E2 (or E1) selection rule forbids the requested transition.
class SelectionRuleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The extended-precision working set would exceed the configured digit cap.
class PrecisionOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An iterative method (Newton, adaptive quadrature, series) did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hydrorad
