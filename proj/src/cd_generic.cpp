#include "tqd/cd_generic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tqd/errors.hpp"

namespace tqd {

HermitianOperator HamiltonianSchedule::at(double t) const {
  if (!(t >= 0.0 && t <= tau)) {
    std::ostringstream msg;
    msg << "HamiltonianSchedule: t = " << t << " outside [0, " << tau << "]";
    throw DomainError(msg.str());
  }
  HermitianOperator h = evaluate(t);
  if (h.dim() != dim) throw ValidationError("HamiltonianSchedule: dimension changed over time");
  return h;
}

namespace {

enum class Stencil { central, forward, backward };

StateVector level_vector(const HamiltonianSchedule& s, double t, std::size_t level) {
  return std::move(eigensystem_hermitian(s.at(t)).eigenvectors[level]);
}

void check_level(const HamiltonianSchedule& s, std::size_t level) {
  if (level >= s.dim) {
    throw ValidationError("level " + std::to_string(level) + " out of range for dim " +
                          std::to_string(s.dim));
  }
}

// Rotates the phase of v so that ⟨ref|v⟩ is real and positive.
void align_to(StateVector& v, const StateVector& ref) {
  const cplx overlap = inner(ref, v);
  const double mag = std::abs(overlap);
  if (mag < 1e-8) {
    throw NumericError(
        "eigenstate_derivative: eigenvector nearly orthogonal across the stencil; "
        "finite-difference step too large",
        mag, 1.0);
  }
  v *= std::conj(overlap) / mag;
}

StateVector aligned(const HamiltonianSchedule& s, double t, std::size_t level,
                    const StateVector& center) {
  StateVector v = level_vector(s, t, level);
  align_to(v, center);
  return v;
}

StateVector raw_difference(const HamiltonianSchedule& s, double t, std::size_t level, double h,
                           Stencil stencil, const StateVector& center) {
  switch (stencil) {
    case Stencil::central: {
      StateVector d = aligned(s, t + h, level, center);
      d -= aligned(s, t - h, level, center);
      d *= 1.0 / (2.0 * h);
      return d;
    }
    case Stencil::forward: {
      // (−3n₀ + 4n₁ − n₂) / 2h
      StateVector d = cplx(4.0) * aligned(s, t + h, level, center);
      d -= aligned(s, t + 2.0 * h, level, center);
      d -= cplx(3.0) * center;
      d *= 1.0 / (2.0 * h);
      return d;
    }
    case Stencil::backward: {
      StateVector d = cplx(3.0) * center;
      d -= cplx(4.0) * aligned(s, t - h, level, center);
      d += aligned(s, t - 2.0 * h, level, center);
      d *= 1.0 / (2.0 * h);
      return d;
    }
  }
  return center;
}

StateVector extrapolated(const HamiltonianSchedule& s, double t, std::size_t level,
                         const FdOptions& fd, Stencil stencil, const StateVector& center) {
  if (fd.richardson_levels < 0) throw ValidationError("fd: richardson_levels must be >= 0");
  const int levels = fd.richardson_levels;
  std::vector<StateVector> table;
  table.reserve(static_cast<std::size_t>(levels) + 1);
  double h = fd.step;
  for (int k = 0; k <= levels; ++k, h *= 0.5) {
    table.push_back(raw_difference(s, t, level, h, stencil, center));
  }
  // table[k] holds the estimate with step h/2^k; eliminate h², h⁴, ...
  double factor = 4.0;
  for (int j = 1; j <= levels; ++j, factor *= 4.0) {
    for (int k = levels; k >= j; --k) {
      StateVector refined = cplx(factor) * table[k];
      refined -= table[k - 1];
      refined *= 1.0 / (factor - 1.0);
      table[k] = std::move(refined);
    }
  }
  return project_out(table.back(), center);
}

double stencil_reach(const FdOptions& fd, Stencil stencil) {
  return stencil == Stencil::central ? fd.step : 2.0 * fd.step;
}

void check_step(const FdOptions& fd) {
  if (!(fd.step > 0.0) || !std::isfinite(fd.step)) {
    throw ValidationError("fd_step: must be finite and > 0");
  }
}

Stencil choose_stencil(const HamiltonianSchedule& s, double t, const FdOptions& fd) {
  if (t - fd.step > 0.0 && t + fd.step < s.tau) return Stencil::central;
  if (t + stencil_reach(fd, Stencil::forward) <= s.tau && t >= 0.0) return Stencil::forward;
  if (t - stencil_reach(fd, Stencil::backward) >= 0.0 && t <= s.tau) return Stencil::backward;
  std::ostringstream msg;
  msg << "eigenstate_derivative: no stencil of step " << fd.step << " fits in [0, " << s.tau
      << "] at t = " << t;
  throw BoundaryError(msg.str());
}

CDResult assemble(const HamiltonianSchedule& s, double t, std::size_t level,
                  const FdOptions& fd, Stencil stencil) {
  EigenSystem es = eigensystem_hermitian(s.at(t));
  CDResult r{HermitianOperator::zero(s.dim), std::move(es.eigenvectors[level]),
             StateVector{}, es.eigenvalues[level], 0.0, 0.0};
  r.eigenstate_derivative = extrapolated(s, t, level, fd, stencil, r.eigenstate);
  r.h1 = HermitianOperator::antisymmetrized_outer(r.eigenstate_derivative, r.eigenstate);
  r.cost_rate = r.eigenstate_derivative.norm();
  r.energy_norm = std::hypot(r.level_energy, r.cost_rate);
  return r;
}

void check_central(const HamiltonianSchedule& s, double t, const FdOptions& fd) {
  check_step(fd);
  if (!(t - fd.step > 0.0 && t + fd.step < s.tau)) {
    std::ostringstream msg;
    msg << "eigenstate_derivative: stencil [" << t - fd.step << ", " << t + fd.step
        << "] leaves the open window (0, " << s.tau << ")";
    throw BoundaryError(msg.str());
  }
}

}  // namespace

StateVector project_out(const StateVector& v, const StateVector& n) {
  const cplx c = inner(n, v);
  const double floor = static_cast<double>(std::max<std::size_t>(v.dim(), 1)) *
                       std::numeric_limits<double>::epsilon() * v.norm();
  if (std::abs(c) <= floor) return v;
  StateVector out = v;
  out -= c * n;
  return out;
}

StateVector eigenstate_derivative(const HamiltonianSchedule& s, double t, std::size_t level,
                                  const FdOptions& fd) {
  check_level(s, level);
  check_central(s, t, fd);
  const StateVector center = level_vector(s, t, level);
  return extrapolated(s, t, level, fd, Stencil::central, center);
}

StateVector eigenstate_derivative_any(const HamiltonianSchedule& s, double t, std::size_t level,
                                      const FdOptions& fd) {
  check_level(s, level);
  check_step(fd);
  const Stencil stencil = choose_stencil(s, t, fd);
  const StateVector center = level_vector(s, t, level);
  return extrapolated(s, t, level, fd, stencil, center);
}

CDResult counterdiabatic(const HamiltonianSchedule& s, double t, std::size_t level,
                         const FdOptions& fd) {
  check_level(s, level);
  check_central(s, t, fd);
  return assemble(s, t, level, fd, Stencil::central);
}

HermitianOperator cd_hamiltonian(const HamiltonianSchedule& s, double t, std::size_t level,
                                 const FdOptions& fd) {
  return counterdiabatic(s, t, level, fd).h1;
}

double energy_norm_generic(const HamiltonianSchedule& s, double t, std::size_t level,
                           const FdOptions& fd) {
  return counterdiabatic(s, t, level, fd).energy_norm;
}

double RichardsonProbe::change_coarse() const { return std::abs(norm_h - norm_h2); }
double RichardsonProbe::change_fine() const { return std::abs(norm_h2 - norm_h4); }

bool RichardsonProbe::consistent() const {
  const double noise_floor = 1e-7 * (1.0 + norm_h4);
  return change_fine() <= std::max(0.5 * change_coarse(), noise_floor);
}

RichardsonProbe richardson_probe(const HamiltonianSchedule& s, double t, std::size_t level,
                                 double step) {
  FdOptions fd{step, 0};
  RichardsonProbe probe;
  probe.norm_h = eigenstate_derivative(s, t, level, fd).norm();
  fd.step = 0.5 * step;
  probe.norm_h2 = eigenstate_derivative(s, t, level, fd).norm();
  fd.step = 0.25 * step;
  probe.norm_h4 = eigenstate_derivative(s, t, level, fd).norm();
  return probe;
}

// ---- oscillator ------------------------------------------------------------

HermitianOperator build_oscillator_fock(const OscillatorParams& p, std::size_t n_trunc,
                                        double t, double omega_ref) {
  p.validate();
  if (n_trunc < kMinFockLevels) {
    throw ValidationError("build_oscillator_fock: n_trunc must be >= " +
                          std::to_string(kMinFockLevels));
  }
  if (!(omega_ref > 0.0)) throw ValidationError("build_oscillator_fock: omega_ref must be > 0");
  const double w = osc_frequency(p, t);
  // p²/2m = (ω_r/4)(a†a + aa† − a² − a†²),  mω²x²/2 = (ω²/4ω_r)(a†a + aa† + a² + a†²)
  const double kinetic = 0.25 * omega_ref;
  const double potential = 0.25 * w * w / omega_ref;
  const double diag = kinetic + potential;
  const double squeeze = potential - kinetic;
  std::vector<cplx> e(n_trunc * n_trunc);
  for (std::size_t k = 0; k < n_trunc; ++k) {
    e[k * n_trunc + k] = diag * (2.0 * static_cast<double>(k) + 1.0);
    if (k + 2 < n_trunc) {
      const double amp = squeeze * std::sqrt(static_cast<double>((k + 1) * (k + 2)));
      e[k * n_trunc + k + 2] = amp;
      e[(k + 2) * n_trunc + k] = amp;
    }
  }
  return HermitianOperator::from_row_major(n_trunc, std::move(e));
}

HermitianOperator build_oscillator_fock(const OscillatorParams& p, std::size_t n_trunc,
                                        double t) {
  return build_oscillator_fock(p, n_trunc, t, osc_frequency(p, t));
}

std::optional<std::string> fock_truncation_warning(const HermitianOperator& h) {
  const EigenSystem es = eigensystem_hermitian(h);
  const StateVector& ground = es.eigenvectors.front();
  const std::size_t n = ground.dim();
  double tail = 0.0;
  for (std::size_t k = n >= 5 ? n - 5 : 0; k < n; ++k) tail = std::max(tail, std::abs(ground[k]));
  if (tail > 1e-10) {
    std::ostringstream msg;
    msg << "Fock truncation: ground-state amplitude " << tail
        << " on the top 5 of " << n << " levels exceeds 1e-10";
    return msg.str();
  }
  return std::nullopt;
}

HamiltonianSchedule oscillator_fock_schedule(const OscillatorParams& p, std::size_t n_trunc,
                                             double omega_ref) {
  p.validate();
  HamiltonianSchedule s;
  s.dim = n_trunc;
  s.tau = p.tau;
  s.evaluate = [p, n_trunc, omega_ref](double t) {
    return build_oscillator_fock(p, n_trunc, t, omega_ref);
  };
  const double w0 = p.omega0;
  const double w1 = p.omega0 + p.omega_d;
  if (std::max(w0, w1) / std::min(w0, w1) > 5.0) {
    s.warnings.push_back("oscillator frequency changes by more than 5x; Fock truncation stressed");
  }
  for (double t : {0.0, p.tau}) {
    if (auto w = fock_truncation_warning(s.evaluate(t))) s.warnings.push_back(*w);
  }
  return s;
}

// ---- two-level --------------------------------------------------------------

HamiltonianSchedule lz_schedule(const LZParams& p) {
  p.validate();
  return {2, p.tau, [p](double t) { return lz_hamiltonian(p, t); }, {}};
}

HamiltonianSchedule lz_tqd_schedule(const LZParams& p) {
  p.validate();
  return {2, p.tau, [p](double t) { return lz_hamiltonian(p, t) + lz_cd_term(p, t); }, {}};
}

HamiltonianSchedule with_counterdiabatic(const HamiltonianSchedule& s, std::size_t level,
                                         const FdOptions& fd) {
  check_level(s, level);
  check_step(fd);
  HamiltonianSchedule out = s;
  out.evaluate = [s, level, fd](double t) {
    const Stencil stencil = choose_stencil(s, t, fd);
    CDResult r = assemble(s, t, level, fd, stencil);
    return s.at(t) + r.h1;
  };
  return out;
}

// ---- NumericProtocol ----------------------------------------------------------

NumericProtocol::NumericProtocol(HamiltonianSchedule s, std::size_t level, FdOptions fd,
                                 std::function<double(double)> control)
    : s_(std::move(s)), level_(level), fd_(fd), control_(std::move(control)) {
  check_level(s_, level_);
  check_step(fd_);
  if (!control_) control_ = [](double) { return 0.0; };
  initial_ = level_vector(s_, 0.0, level_);
}

double NumericProtocol::level_energy(double t) const {
  return eigensystem_hermitian(s_.at(t)).eigenvalues[level_];
}

double NumericProtocol::cost_rate(double t) const {
  return eigenstate_derivative_any(s_, t, level_, fd_).norm();
}

double NumericProtocol::angle(double t) const {
  return std::min(bures_angle(initial_, level_vector(s_, t, level_)), 0.5 * std::numbers::pi);
}

}  // namespace tqd
