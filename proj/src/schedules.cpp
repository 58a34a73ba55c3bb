#include "tqd/schedules.hpp"

#include <cmath>
#include <sstream>

#include "tqd/errors.hpp"

namespace tqd {

std::string_view to_string(RampKind kind) {
  switch (kind) {
    case RampKind::linear:
      return "linear";
    case RampKind::custom:
      return "custom";
  }
  return "unknown";
}

RampKind ramp_kind_from_string(std::string_view name) {
  if (name == "linear") return RampKind::linear;
  // custom shapes carry code, they cannot come from a config string
  throw ValidationError("ramp.kind: unsupported ramp kind '" + std::string(name) +
                        "' (expected 'linear')");
}

Ramp::Ramp(RampKind kind, double start, double delta, double tau, ShapeFn shape,
           ShapeFn shape_derivative)
    : kind_(kind),
      start_(start),
      delta_(delta),
      tau_(tau),
      shape_(std::move(shape)),
      shape_derivative_(std::move(shape_derivative)) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw ValidationError("ramp.tau: duration must be finite and > 0");
  }
  if (!std::isfinite(start) || !std::isfinite(delta)) {
    throw ValidationError("ramp: start and delta must be finite");
  }
}

Ramp Ramp::linear(double start, double delta, double tau) {
  return Ramp(RampKind::linear, start, delta, tau, nullptr, nullptr);
}

Ramp Ramp::custom(double start, double delta, double tau, ShapeFn shape,
                  ShapeFn shape_derivative) {
  if (!shape || !shape_derivative) {
    throw ValidationError("ramp: custom ramps need a shape and its derivative");
  }
  return Ramp(RampKind::custom, start, delta, tau, std::move(shape),
              std::move(shape_derivative));
}

void Ramp::check_window(double t, const char* op) const {
  if (!(t >= 0.0 && t <= tau_)) {
    std::ostringstream msg;
    msg << op << ": t = " << t << " outside protocol window [0, " << tau_ << "]";
    throw DomainError(msg.str());
  }
}

double Ramp::value(double t) const {
  check_window(t, "ramp_value");
  const double s = t / tau_;
  if (kind_ == RampKind::linear) return start_ + delta_ * s;
  return start_ + delta_ * shape_(s);
}

double Ramp::derivative(double t) const {
  check_window(t, "ramp_derivative");
  if (kind_ == RampKind::linear) return delta_ / tau_;
  return delta_ * shape_derivative_(t / tau_) / tau_;
}

}  // namespace tqd
