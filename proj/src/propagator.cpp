#include "tqd/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tqd/errors.hpp"
#include "tqd/simd/kernels.hpp"

namespace tqd {
namespace {

// out = −i·H·psi
void apply_generator(const HermitianOperator& h, const StateVector& psi, StateVector& out) {
  simd::cgemv(h.entries(), psi.amplitudes(), out.amplitudes());
  for (auto& z : out.amplitudes()) z = cplx(z.imag(), -z.real());
}

// out = base + factor·k
void shifted(const StateVector& base, double factor, const StateVector& k, StateVector& out) {
  std::copy(base.amplitudes().begin(), base.amplitudes().end(), out.amplitudes().begin());
  simd::caxpy(factor, k.amplitudes(), out.amplitudes());
}

}  // namespace

Trajectory propagate(const HamiltonianSchedule& s, const StateVector& psi0, std::size_t steps,
                     const PropagateOptions& opts) {
  if (steps < kMinSteps) {
    throw ValidationError("propagate: steps must be >= " + std::to_string(kMinSteps));
  }
  if (psi0.dim() != s.dim) throw ValidationError("propagate: initial state dimension mismatch");
  if (!psi0.is_unit()) throw ValidationError("propagate: initial state is not unit-norm");

  Trajectory traj;
  traj.warnings = s.warnings;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(psi0);

  const double dt = s.tau / static_cast<double>(steps);
  StateVector psi = psi0;
  StateVector k1 = StateVector::zeros(s.dim), k2 = k1, k3 = k1, k4 = k1, tmp = k1;
  HermitianOperator h_start = s.at(0.0);
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = s.tau * (static_cast<double>(n) / static_cast<double>(steps));
    const double t_next =
        s.tau * (static_cast<double>(n + 1) / static_cast<double>(steps));
    const HermitianOperator h_mid = s.at(0.5 * (t + t_next));
    HermitianOperator h_end = s.at(t_next);

    apply_generator(h_start, psi, k1);
    shifted(psi, 0.5 * dt, k1, tmp);
    apply_generator(h_mid, tmp, k2);
    shifted(psi, 0.5 * dt, k2, tmp);
    apply_generator(h_mid, tmp, k3);
    shifted(psi, dt, k3, tmp);
    apply_generator(h_end, tmp, k4);

    simd::caxpy(dt / 6.0, k1.amplitudes(), psi.amplitudes());
    simd::caxpy(dt / 3.0, k2.amplitudes(), psi.amplitudes());
    simd::caxpy(dt / 3.0, k3.amplitudes(), psi.amplitudes());
    simd::caxpy(dt / 6.0, k4.amplitudes(), psi.amplitudes());

    const double norm = psi.norm();
    const double drift = std::abs(norm - 1.0);
    traj.norm_drift = std::max(traj.norm_drift, drift);
    if (drift > opts.max_norm_drift) {
      std::ostringstream msg;
      msg << "propagate: norm drift " << drift << " at t = " << t_next << " exceeds "
          << opts.max_norm_drift << " with " << steps << " steps; increase the step count";
      throw StepSizeError(msg.str(), drift, opts.max_norm_drift);
    }
    psi *= 1.0 / norm;
    traj.times.push_back(t_next);
    traj.states.push_back(psi);
    h_start = std::move(h_end);
  }
  return traj;
}

std::size_t default_step_count(const HamiltonianSchedule& s) {
  constexpr std::size_t samples = 1025;
  double max_norm = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = s.tau * (static_cast<double>(k) / static_cast<double>(samples - 1));
    const EigenSystem es = eigensystem_hermitian(s.at(t), 0.0);
    max_norm = std::max({max_norm, std::abs(es.eigenvalues.front()),
                         std::abs(es.eigenvalues.back())});
  }
  const double wanted = std::ceil(50.0 * s.tau * max_norm);
  return std::max<std::size_t>(10000, static_cast<std::size_t>(wanted));
}

namespace {

double fidelity_at(const Trajectory& traj, const HamiltonianSchedule& s, std::size_t level,
                   std::size_t k) {
  const EigenSystem es = eigensystem_hermitian(s.at(traj.times[k]));
  return std::norm(inner(es.eigenvectors[level], traj.states[k]));
}

void check_grid(const Trajectory& traj, const HamiltonianSchedule& s, std::size_t level) {
  if (traj.states.empty() || traj.states.size() != traj.times.size()) {
    throw ValidationError("fidelity: empty or inconsistent trajectory");
  }
  if (traj.times.front() != 0.0 || std::abs(traj.times.back() - s.tau) > 1e-12 * s.tau) {
    throw ValidationError("fidelity: trajectory grid does not span the schedule window");
  }
  if (traj.states.front().dim() != s.dim || level >= s.dim) {
    throw ValidationError("fidelity: dimension or level mismatch");
  }
}

}  // namespace

double min_instantaneous_fidelity(const Trajectory& traj, const HamiltonianSchedule& s,
                                  std::size_t level) {
  check_grid(traj, s, level);
  double worst = 1.0;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    worst = std::min(worst, fidelity_at(traj, s, level, k));
  }
  return std::clamp(worst, 0.0, 1.0);
}

double final_fidelity(const Trajectory& traj, const HamiltonianSchedule& s, std::size_t level) {
  check_grid(traj, s, level);
  return std::clamp(fidelity_at(traj, s, level, traj.states.size() - 1), 0.0, 1.0);
}

HamiltonianSchedule time_reversed(const HamiltonianSchedule& s) {
  HamiltonianSchedule out = s;
  out.evaluate = [s](double t) { return s.at(std::max(0.0, s.tau - t)).scaled(-1.0); };
  return out;
}

}  // namespace tqd
