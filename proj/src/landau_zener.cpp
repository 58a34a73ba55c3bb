#include "tqd/landau_zener.hpp"

#include <cmath>

#include "tqd/errors.hpp"

namespace tqd {

void LZParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ValidationError("lz.delta: must be > 0");
  if (!std::isfinite(g0)) throw ValidationError("lz.g0: must be finite");
  if (!std::isfinite(g_d)) throw ValidationError("lz.g_d: must be finite");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ValidationError("lz.tau: must be > 0");
}

double lz_field(const LZParams& p, double t) { return p.field_ramp().value(t); }

double lz_reduced_field(const LZParams& p, double t) { return lz_field(p, t) / p.delta; }

double lz_reduced_field_rate(const LZParams& p, double t) {
  return p.field_ramp().derivative(t) / p.delta;
}

HermitianOperator lz_hamiltonian(const LZParams& p, double t) {
  const double g = lz_field(p, t);
  if (p.rescaled) {
    const double h = g / p.delta;
    return HermitianOperator::from_row_major(2, {h, 1.0, 1.0, -h});
  }
  return HermitianOperator::from_row_major(2, {g, p.delta, p.delta, -g});
}

double lz_cd_coefficient(const LZParams& p, double t) {
  const Ramp ramp = p.field_ramp();
  const double g = ramp.value(t);
  const double g_rate = ramp.derivative(t);
  if (p.rescaled) {
    const double h = g / p.delta;
    return -(g_rate / p.delta) / (2.0 * (1.0 + h * h));
  }
  return -g_rate * p.delta / (2.0 * (p.delta * p.delta + g * g));
}

HermitianOperator lz_cd_term(const LZParams& p, double t) {
  const double k = lz_cd_coefficient(p, t);
  return HermitianOperator::from_row_major(2, {0.0, cplx(0.0, -k), cplx(0.0, k), 0.0});
}

double lz_cost_rate(const LZParams& p, double t) {
  const double h = lz_reduced_field(p, t);
  return std::abs(lz_reduced_field_rate(p, t)) / (2.0 * (1.0 + h * h));
}

double lz_mixing_angle(const LZParams& p, double t) {
  return std::atan2(1.0, lz_reduced_field(p, t));
}

std::pair<StateVector, double> lz_ground_state(const LZParams& p, double t) {
  const double h = lz_reduced_field(p, t);
  const double half = 0.5 * std::atan2(1.0, h);
  StateVector v(std::vector<cplx>{-std::sin(half), std::cos(half)});
  fix_gauge(v);
  return {std::move(v), -std::hypot(1.0, h) * p.energy_unit()};
}

double lz_angle(const LZParams& p, double t) {
  return 0.5 * std::abs(lz_mixing_angle(p, t) - lz_mixing_angle(p, 0.0));
}

QslSpeed lz_speed(const LZParams& p, double t) {
  const double energy = std::hypot(1.0, lz_reduced_field(p, t)) * p.energy_unit();
  return tqd_speed(energy, lz_cost_rate(p, t), lz_angle(p, t));
}

LandauZenerProtocol::LandauZenerProtocol(LZParams p) : p_(p) { p_.validate(); }

double LandauZenerProtocol::level_energy(double t) const {
  return -std::hypot(1.0, lz_reduced_field(p_, t)) * p_.energy_unit();
}

}  // namespace tqd
