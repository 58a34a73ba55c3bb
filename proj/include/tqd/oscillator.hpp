#pragma once

// Parametric harmonic oscillator H₀(t) = p²/2m + mω_t²x²/2 driven along a
// linear frequency ramp ω_t = ω₀ + ω_d·t/τ, tracked in its ground state.

#include "tqd/qsl.hpp"
#include "tqd/schedules.hpp"

namespace tqd {

struct OscillatorParams {
  double omega0 = 1.0;
  double omega_d = 4.0;
  double mass = 1.0;
  double tau = 1.0;

  // Throws ValidationError naming the offending field.
  void validate() const;
  Ramp frequency_ramp() const { return Ramp::linear(omega0, omega_d, tau); }
};

double osc_frequency(const OscillatorParams& p, double t);

// |∂ₜω_t| / (√8·ω_t)
double osc_cost_rate(const OscillatorParams& p, double t);

// arccos √(2√(ω₀ω_t)/(ω₀+ω_t)), evaluated as atan2(|√ω_t − √ω₀|, √(2√(ω₀ω_t))).
double osc_angle(const OscillatorParams& p, double t);

// ω_t / 2
double osc_ground_energy(const OscillatorParams& p, double t);

QslSpeed osc_speed(const OscillatorParams& p, double t);

class OscillatorProtocol final : public Protocol {
 public:
  explicit OscillatorProtocol(OscillatorParams p);

  const OscillatorParams& params() const noexcept { return p_; }

  double duration() const override { return p_.tau; }
  double control(double t) const override { return osc_frequency(p_, t); }
  double level_energy(double t) const override { return osc_ground_energy(p_, t); }
  double cost_rate(double t) const override { return osc_cost_rate(p_, t); }
  double angle(double t) const override { return osc_angle(p_, t); }

 private:
  OscillatorParams p_;
};

}  // namespace tqd
