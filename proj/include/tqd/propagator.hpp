#pragma once

// Fixed-step RK4 integration of i∂ₜψ = H(t)ψ (ħ = 1), used to certify that
// H₀ + H₁ keeps the state on the instantaneous eigenstate of H₀.

#include <cstddef>
#include <string>
#include <vector>

#include "tqd/cd_generic.hpp"
#include "tqd/spectral.hpp"

namespace tqd {

struct Trajectory {
  std::vector<double> times;  // uniform, times.front() = 0, times.back() = τ
  std::vector<StateVector> states;
  double norm_drift = 0.0;  // max |‖ψ‖ − 1| before per-step renormalization
  std::vector<std::string> warnings;
};

struct PropagateOptions {
  double max_norm_drift = 1e-6;
};

inline constexpr std::size_t kMinSteps = 1000;

// Classic RK4 with the midpoint Hamiltonian shared by the two middle stages.
// Throws ValidationError for steps < 1000 or a bad initial state and
// StepSizeError when the pre-renormalization drift exceeds max_norm_drift.
Trajectory propagate(const HamiltonianSchedule& s, const StateVector& psi0, std::size_t steps,
                     const PropagateOptions& opts = {});

// max(10⁴, ⌈50·τ·max_t ‖H(t)‖⌉), the spectral norm sampled on 1025 points.
std::size_t default_step_count(const HamiltonianSchedule& s);

// min over the trajectory grid of |⟨n_t|ψ_t⟩|², n_t the `level` eigenstate of s.
double min_instantaneous_fidelity(const Trajectory& traj, const HamiltonianSchedule& s,
                                  std::size_t level);

// |⟨n_τ|ψ_τ⟩|²
double final_fidelity(const Trajectory& traj, const HamiltonianSchedule& s, std::size_t level);

// K(s) = −H(τ − s): integrating K forward undoes integrating H forward.
HamiltonianSchedule time_reversed(const HamiltonianSchedule& s);

}  // namespace tqd
