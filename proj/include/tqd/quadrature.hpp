#pragma once

#include <cstddef>
#include <functional>

namespace tqd {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_depth = 48;
  // Uniform panels adapted independently; keeps narrow peaks from slipping
  // between the first Simpson nodes.
  std::size_t initial_panels = 64;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Adaptive Simpson with Richardson correction. The accepted error satisfies
// error_estimate ≤ max(abs_tol, rel_tol·|value|). Throws NumericError carrying
// the best estimate when some subinterval hits max_depth first, ValidationError
// for a ≥ b or non-positive tolerances, and NumericError on a non-finite
// integrand value.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& opts = {});

inline double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, double rel_tol) {
  QuadratureOptions opts;
  opts.abs_tol = abs_tol;
  opts.rel_tol = rel_tol;
  return adaptive_simpson(f, a, b, opts).value;
}

}  // namespace tqd
