#pragma once

// Counterdiabatic driving for an arbitrary finite-dimensional schedule H₀(t),
// built from numerical eigenvectors and gauge-aligned finite differences:
//
//   H₁ = i(|∂ₜn⟩⟨n| − |n⟩⟨∂ₜn|),   ⟨n|∂ₜn⟩ = 0.
//
// Independent of the closed forms in oscillator.hpp and landau_zener.hpp,
// which it is used to cross-check.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tqd/landau_zener.hpp"
#include "tqd/oscillator.hpp"
#include "tqd/qsl.hpp"
#include "tqd/spectral.hpp"

namespace tqd {

/// H₀(t) on [0, τ]. evaluate must be callable concurrently (read-only state).
struct HamiltonianSchedule {
  std::size_t dim = 0;
  double tau = 0.0;
  std::function<HermitianOperator(double)> evaluate;
  std::vector<std::string> warnings;

  // Checks t ∈ [0, τ] and the returned dimension.
  HermitianOperator at(double t) const;
};

struct FdOptions {
  double step = 0.0;         // absolute time step h
  int richardson_levels = 1;  // 0 = plain second-order stencil
};

inline FdOptions default_fd(double tau) { return {1e-6 * tau, 1}; }

// Removes the ⟨n|v⟩ component. A vector already orthogonal to working
// precision is returned unchanged, so the operation is idempotent.
StateVector project_out(const StateVector& v, const StateVector& n);

// Central difference of the gauge-aligned eigenvector |n_t⟩ for `level`,
// Richardson-extrapolated, with the |n_t⟩ component projected out. Throws
// BoundaryError unless 0 < t − h and t + h < τ, DegeneracyError from the
// eigensolver, ValidationError for an invalid level.
StateVector eigenstate_derivative(const HamiltonianSchedule& s, double t, std::size_t level,
                                  const FdOptions& fd);

struct CDResult {
  HermitianOperator h1;
  StateVector eigenstate;
  StateVector eigenstate_derivative;  // unnormalized
  double level_energy = 0.0;
  double cost_rate = 0.0;    // ‖∂ₜn‖
  double energy_norm = 0.0;  // √(ε² + ‖∂ₜn‖²)
};

CDResult counterdiabatic(const HamiltonianSchedule& s, double t, std::size_t level,
                         const FdOptions& fd);

HermitianOperator cd_hamiltonian(const HamiltonianSchedule& s, double t, std::size_t level,
                                 const FdOptions& fd);

double energy_norm_generic(const HamiltonianSchedule& s, double t, std::size_t level,
                           const FdOptions& fd);

// Plain (non-extrapolated) central-difference norms at h, h/2, h/4. For a
// second-order stencil each halving shrinks the change about fourfold.
struct RichardsonProbe {
  double norm_h = 0.0;
  double norm_h2 = 0.0;
  double norm_h4 = 0.0;
  double change_coarse() const;  // |norm_h − norm_h2|
  double change_fine() const;    // |norm_h2 − norm_h4|
  // change_fine ≤ max(change_coarse / 2, noise_floor); noise_floor = 1e-7·(1 + norm_h4)
  bool consistent() const;
};

RichardsonProbe richardson_probe(const HamiltonianSchedule& s, double t, std::size_t level,
                                 double step);

// ---- oscillator in a truncated Fock basis ---------------------------------

inline constexpr std::size_t kMinFockLevels = 40;

// H₀ at time t in the number basis of frequency omega_ref (mass cancels).
// The ladder operators are projected, not truncated-then-multiplied, so the
// matrix is diagonal ω(k + ½) when omega_ref = ω_t. Requires n_trunc ≥ 40.
HermitianOperator build_oscillator_fock(const OscillatorParams& p, std::size_t n_trunc,
                                        double t, double omega_ref);

// Same with omega_ref = ω_t.
HermitianOperator build_oscillator_fock(const OscillatorParams& p, std::size_t n_trunc,
                                        double t);

// Warning text when the ground state has amplitude > 1e-10 on the top 5 levels.
std::optional<std::string> fock_truncation_warning(const HermitianOperator& h);

// Fixed-basis schedule; warns on ω changing by more than 5× or on truncation.
HamiltonianSchedule oscillator_fock_schedule(const OscillatorParams& p, std::size_t n_trunc,
                                             double omega_ref);

// ---- two-level schedules ----------------------------------------------------

HamiltonianSchedule lz_schedule(const LZParams& p);

// H₀ + closed-form H₁ (lz_cd_term).
HamiltonianSchedule lz_tqd_schedule(const LZParams& p);

// H₀ + numerical H₁ for `level`. Near the window edges the stencil switches to
// second-order one-sided differences.
HamiltonianSchedule with_counterdiabatic(const HamiltonianSchedule& s, std::size_t level,
                                         const FdOptions& fd);

// ---- schedule-backed protocol ----------------------------------------------

/// Protocol whose ε_n, ∂ₜC and L_t come from numerical eigenvectors. Works at the
/// window edges by switching to one-sided stencils.
class NumericProtocol final : public Protocol {
 public:
  NumericProtocol(HamiltonianSchedule s, std::size_t level, FdOptions fd,
                  std::function<double(double)> control);

  const HamiltonianSchedule& schedule() const noexcept { return s_; }

  double duration() const override { return s_.tau; }
  double control(double t) const override { return control_(t); }
  double level_energy(double t) const override;
  double cost_rate(double t) const override;
  double angle(double t) const override;

 private:
  HamiltonianSchedule s_;
  std::size_t level_;
  FdOptions fd_;
  std::function<double(double)> control_;
  StateVector initial_;
};

// Derivative near the edges: central where it fits, otherwise one-sided.
StateVector eigenstate_derivative_any(const HamiltonianSchedule& s, double t, std::size_t level,
                                      const FdOptions& fd);

}  // namespace tqd
