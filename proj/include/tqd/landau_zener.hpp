#pragma once

// Landau–Zener crossing H = Δσx + g(t)σz with g(t) = g₀ + g_d·t/τ.
//
// The default frame divides energies by Δ: H₀ = σx + h(t)σz with h = g/Δ.
// The counterdiabatic term and ∂ₜC depend only on eigenvector motion, so they
// are the same number in both frames; energies (and hence ε_t, v_QSL) scale by Δ.

#include <utility>

#include "tqd/qsl.hpp"
#include "tqd/schedules.hpp"
#include "tqd/spectral.hpp"

namespace tqd {

struct LZParams {
  double delta = 0.01;
  double g0 = 0.2;
  double g_d = -0.4;
  double tau = 1.0;
  bool rescaled = true;

  void validate() const;
  Ramp field_ramp() const { return Ramp::linear(g0, g_d, tau); }
  double energy_unit() const { return rescaled ? 1.0 : delta; }
};

double lz_field(const LZParams& p, double t);       // g(t)
double lz_reduced_field(const LZParams& p, double t);  // h(t) = g(t)/Δ
double lz_reduced_field_rate(const LZParams& p, double t);  // h'(t)

HermitianOperator lz_hamiltonian(const LZParams& p, double t);

// Coefficient k(t) of H₁ = k·σy:  −g'Δ/(2(Δ² + g²)) = −h'/(2(1 + h²)).
double lz_cd_coefficient(const LZParams& p, double t);
HermitianOperator lz_cd_term(const LZParams& p, double t);

// |h'| / (2(1 + h²))
double lz_cost_rate(const LZParams& p, double t);

// Mixing angle θ = atan2(1, h), continuous and monotone in h.
double lz_mixing_angle(const LZParams& p, double t);

// Ground eigenvector (gauge as in fix_gauge) and energy −√(1+h²)·unit.
std::pair<StateVector, double> lz_ground_state(const LZParams& p, double t);

// |θ(t) − θ(0)| / 2
double lz_angle(const LZParams& p, double t);

QslSpeed lz_speed(const LZParams& p, double t);

class LandauZenerProtocol final : public Protocol {
 public:
  explicit LandauZenerProtocol(LZParams p);

  const LZParams& params() const noexcept { return p_; }

  double duration() const override { return p_.tau; }
  double control(double t) const override { return lz_field(p_, t); }
  double level_energy(double t) const override;
  double cost_rate(double t) const override { return lz_cost_rate(p_, t); }
  double angle(double t) const override { return lz_angle(p_, t); }

 private:
  LZParams p_;
};

}  // namespace tqd
