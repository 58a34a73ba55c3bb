#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace tqd {

enum class RampKind { linear, custom };

std::string_view to_string(RampKind kind);
RampKind ramp_kind_from_string(std::string_view name);

/// A scalar control schedule λ(t) = start + delta · shape(t/τ) on t ∈ [0, τ].
///
/// Linear ramps use shape(s) = s and are evaluated without interpolation error.
/// Custom shapes must satisfy shape(0) = 0 and shape(1) = 1 and supply their
/// exact derivative; they exist so protocol-shape studies can reuse every
/// consumer of Ramp unchanged. Immutable after construction.
class Ramp {
 public:
  using ShapeFn = std::function<double(double)>;

  static Ramp linear(double start, double delta, double tau);
  static Ramp custom(double start, double delta, double tau, ShapeFn shape,
                     ShapeFn shape_derivative);

  RampKind kind() const noexcept { return kind_; }
  double start() const noexcept { return start_; }
  double delta() const noexcept { return delta_; }
  double tau() const noexcept { return tau_; }

  // Both throw DomainError for t outside [0, τ].
  double value(double t) const;
  double derivative(double t) const;

 private:
  Ramp(RampKind kind, double start, double delta, double tau, ShapeFn shape,
       ShapeFn shape_derivative);
  void check_window(double t, const char* op) const;

  RampKind kind_;
  double start_;
  double delta_;
  double tau_;
  ShapeFn shape_;
  ShapeFn shape_derivative_;
};

}  // namespace tqd
