#pragma once

#include <stdexcept>
#include <string>

namespace tqd {

// Argument outside the window an operation is defined on (t ∉ [0, τ], angle ∉ [0, π/2]).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Finite-difference stencil that would leave the protocol window.
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed input: non-Hermitian matrix, dimension mismatch, bad config value.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two eigenvalues closer than the degeneracy threshold.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, double gap)
      : std::runtime_error(what), gap_(gap) {}
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

// Iterative numerics that failed to meet their tolerance. Carries the best
// estimate and its error bound so callers can decide whether to use it.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Propagation step too coarse: norm drift before renormalization exceeded the limit.
class StepSizeError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace tqd
