#pragma once

#include <stdexcept>
#include <string>

namespace polynil {

// Root of the library's error hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments / requests outside an operation's documented domain.
// The CLI maps these to exit code 2.
struct DomainError : Error {
  using Error::Error;
};

// A brute-force enumeration would exceed the configured state budget.
struct BudgetExceeded : DomainError {
  using DomainError::DomainError;
};

// A convergence comparison was asked for over an empty degree window.
struct EmptyWindow : DomainError {
  using DomainError::DomainError;
};

// Failures detected while computing (invariant violations, ill-posed
// intermediate values). The CLI maps these to exit code 3.
struct ComputationError : Error {
  using Error::Error;
};

// Composition/exponential input required a zero constant term.
struct NonzeroConstantTerm : ComputationError {
  using ComputationError::ComputationError;
};

// log_series input must have constant term exactly 1.
struct ConstantTermNotOne : ComputationError {
  using ComputationError::ComputationError;
};

// Euler transform input must have coefficients in {0,1,2,...}.
struct NegativeOrNonIntegerCoefficient : ComputationError {
  using ComputationError::ComputationError;
};

// A quantity that must be an exact (nonnegative) integer is not.
struct IntegralityViolation : ComputationError {
  using ComputationError::ComputationError;
};

// A series that must be coefficientwise nonnegative has a negative entry.
struct NegativeCoefficient : ComputationError {
  using ComputationError::ComputationError;
};

// Even log-space evaluation left the representable floating range.
struct OverflowUnrepresentable : ComputationError {
  using ComputationError::ComputationError;
};

}  // namespace polynil
