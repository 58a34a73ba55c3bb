#include "tqd/oscillator.hpp"

#include <cmath>

#include "tqd/errors.hpp"

namespace tqd {

void OscillatorParams::validate() const {
  if (!(omega0 > 0.0)) throw ValidationError("oscillator.omega0: must be > 0");
  if (!std::isfinite(omega_d)) throw ValidationError("oscillator.omega_d: must be finite");
  if (!(omega0 + omega_d > 0.0)) {
    throw ValidationError("oscillator.omega_d: final frequency omega0 + omega_d must be > 0");
  }
  if (!(mass > 0.0)) throw ValidationError("oscillator.mass: must be > 0");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ValidationError("oscillator.tau: must be > 0");
}

double osc_frequency(const OscillatorParams& p, double t) { return p.frequency_ramp().value(t); }

double osc_cost_rate(const OscillatorParams& p, double t) {
  const Ramp ramp = p.frequency_ramp();
  return std::abs(ramp.derivative(t) / (std::sqrt(8.0) * ramp.value(t)));
}

double osc_angle(const OscillatorParams& p, double t) {
  const double w = osc_frequency(p, t);
  // cos²L = 2√(ω₀ω)/(ω₀+ω), sin²L = (√ω − √ω₀)²/(ω₀+ω)
  return std::atan2(std::abs(std::sqrt(w) - std::sqrt(p.omega0)),
                    std::sqrt(2.0 * std::sqrt(p.omega0 * w)));
}

double osc_ground_energy(const OscillatorParams& p, double t) {
  return 0.5 * osc_frequency(p, t);
}

QslSpeed osc_speed(const OscillatorParams& p, double t) {
  return tqd_speed(osc_ground_energy(p, t), osc_cost_rate(p, t), osc_angle(p, t));
}

OscillatorProtocol::OscillatorProtocol(OscillatorParams p) : p_(p) { p_.validate(); }

}  // namespace tqd
