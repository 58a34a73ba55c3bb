#include "tqd/app/validate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <vector>

#include "tqd/app/config.hpp"
#include "tqd/cd_generic.hpp"
#include "tqd/landau_zener.hpp"
#include "tqd/oscillator.hpp"
#include "tqd/propagator.hpp"
#include "tqd/simd/kernels.hpp"

namespace tqd::app {

namespace {

constexpr std::size_t kInteriorPoints = 50;

double interior_time(double tau, std::size_t k) {
  return tau * static_cast<double>(k + 1) / static_cast<double>(kInteriorPoints + 1);
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

CheckResult upper(std::string name, double achieved, double required, std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.achieved = achieved;
  c.required = required;
  c.passed = achieved <= required;
  c.detail = std::move(detail);
  return c;
}

CheckResult lower(std::string name, double achieved, double required, std::string detail) {
  CheckResult c = upper(std::move(name), achieved, required, std::move(detail));
  c.relation = ">=";
  c.passed = achieved >= required;
  return c;
}

// The Landau-Zener grid used by every two-level check.
std::vector<LZParams> lz_grid() {
  std::vector<LZParams> out;
  for (double delta : {0.001, 0.01}) {
    for (double tau : {1.0, 1e3}) {
      LZParams p;
      p.delta = delta;
      p.tau = tau;
      out.push_back(p);
    }
  }
  return out;
}

CheckResult check_lz_cd_term(const ValidationOptions& o) {
  double worst = 0.0;
  for (const LZParams& p : lz_grid()) {
    const HamiltonianSchedule s = lz_schedule(p);
    const FdOptions fd{o.fd_step * p.tau, 1};
    for (std::size_t k = 0; k < kInteriorPoints; ++k) {
      const double t = interior_time(p.tau, k);
      HermitianOperator closed = lz_cd_term(p, t);
      if (o.fault == Fault::lz_cd_sign_flip) closed = closed.scaled(-1.0);
      worst = std::max(worst, cd_hamiltonian(s, t, 0, fd).max_abs_diff(closed));
    }
  }
  return upper("lz_cd_term", worst, 1e-6,
               "max elementwise |H1_numeric - H1_closed|, delta in {0.001, 0.01}, tau in {1, 1000}");
}

CheckResult check_lz_cost_rate(const ValidationOptions& o) {
  double worst = 0.0;
  for (const LZParams& p : lz_grid()) {
    const HamiltonianSchedule s = lz_schedule(p);
    const FdOptions fd{o.fd_step * p.tau, 1};
    for (std::size_t k = 0; k < kInteriorPoints; ++k) {
      const double t = interior_time(p.tau, k);
      worst = std::max(worst, rel_err(counterdiabatic(s, t, 0, fd).cost_rate, lz_cost_rate(p, t)));
    }
  }
  return upper("lz_cost_rate", worst, 1e-5, "max relative error of ||dn/dt||");
}

// Fock oracle: at each t the basis frequency is ω_t, so the ground state is
// well represented and the finite differences only probe its motion.
void oscillator_errors(const OscillatorParams& p, const ValidationOptions& o, double& cost_err,
                       double& norm_err) {
  const FdOptions fd{o.fd_step * p.tau, 1};
  for (std::size_t k = 0; k < kInteriorPoints; ++k) {
    const double t = interior_time(p.tau, k);
    const HamiltonianSchedule s = oscillator_fock_schedule(p, 80, osc_frequency(p, t));
    const CDResult r = counterdiabatic(s, t, 0, fd);
    const double c = osc_cost_rate(p, t);
    const double e = std::hypot(osc_ground_energy(p, t), c);
    cost_err = std::max(cost_err, rel_err(r.cost_rate, c));
    norm_err = std::max(norm_err, rel_err(r.energy_norm, e));
  }
}

std::vector<CheckResult> check_oscillator(const ValidationOptions& o) {
  double cost_err = 0.0;
  double norm_err = 0.0;
  OscillatorParams compression;  // 1 → 5
  OscillatorParams expansion;
  expansion.omega_d = -0.75;  // 1 → 0.25
  oscillator_errors(compression, o, cost_err, norm_err);
  oscillator_errors(expansion, o, cost_err, norm_err);
  return {upper("osc_cost_rate", cost_err, 1e-5, "80-level Fock basis, compression and expansion"),
          upper("osc_energy_norm", norm_err, 1e-5, "80-level Fock basis, compression and expansion")};
}

CheckResult check_energy_norm_identity(const ValidationOptions& o) {
  // ε_t² = ⟨n|(H0 + H1)²|n⟩ for the tracked level
  double worst = 0.0;
  LZParams p;
  const HamiltonianSchedule s = lz_schedule(p);
  const FdOptions fd{o.fd_step * p.tau, 1};
  for (std::size_t k = 0; k < kInteriorPoints; ++k) {
    const double t = interior_time(p.tau, k);
    const CDResult r = counterdiabatic(s, t, 0, fd);
    const double direct = state_norm_of_operator(s.at(t) + r.h1, r.eigenstate);
    worst = std::max(worst, rel_err(direct, r.energy_norm));
  }
  return upper("energy_norm_identity", worst, 1e-8, "||(H0 + H1)|n>|| against sqrt(e^2 + dC^2)");
}

CheckResult check_richardson(const ValidationOptions& o) {
  LZParams p;
  p.delta = 0.01;
  const RichardsonProbe probe =
      richardson_probe(lz_schedule(p), 0.5 * p.tau, 0, o.fd_step * p.tau);
  CheckResult c = upper("richardson_consistency", probe.change_fine(),
                        std::max(0.5 * probe.change_coarse(), 1e-7 * (1.0 + probe.norm_h4)),
                        "change of ||dn/dt|| under step halving at the avoided crossing");
  c.passed = probe.consistent();
  return c;
}

CheckResult check_tqd_fidelity() {
  LZParams p;
  p.delta = 0.01;
  const HamiltonianSchedule driven = lz_tqd_schedule(p);
  const HamiltonianSchedule bare = lz_schedule(p);
  const Trajectory traj =
      propagate(driven, lz_ground_state(p, 0.0).first, default_step_count(driven));
  return lower("tqd_fidelity", min_instantaneous_fidelity(traj, bare, 0), 1.0 - 1e-6,
               "min ground-state fidelity under H0 + H1, delta = 0.01, tau = 1");
}

CheckResult check_bare_fidelity() {
  LZParams p;
  p.delta = 0.01;
  const HamiltonianSchedule bare = lz_schedule(p);
  const Trajectory traj = propagate(bare, lz_ground_state(p, 0.0).first, default_step_count(bare));
  return upper("bare_fidelity", final_fidelity(traj, bare, 0), 0.5,
               "final ground-state fidelity under H0 alone, delta = 0.01, tau = 1");
}

CheckResult check_kernels() {
  const simd::KernelTable* ref = simd::kernels_for(simd::Isa::scalar);
  double worst = 0.0;
  std::string detail = "scalar only";
  for (simd::Isa isa : {simd::Isa::avx2}) {
    const simd::KernelTable* k = simd::kernels_for(isa);
    if (k == nullptr) continue;
    detail = "scalar vs " + std::string(simd::to_string(isa));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 17u, 80u}) {
      std::vector<simd::cplx> a(n * n);
      std::vector<simd::cplx> x(n);
      for (auto& v : a) v = {u(rng), u(rng)};
      for (auto& v : x) v = {u(rng), u(rng)};
      const double scale = static_cast<double>(n);
      worst = std::max(worst, std::abs(ref->cdot(a.data(), x.data(), n) -
                                       k->cdot(a.data(), x.data(), n)) / scale);
      std::vector<simd::cplx> y1(n);
      std::vector<simd::cplx> y2(n);
      ref->cgemv(a.data(), x.data(), y1.data(), n);
      k->cgemv(a.data(), x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(y1[i] - y2[i]) / scale);
      y1 = x;
      y2 = x;
      ref->caxpy({0.3, -0.7}, a.data(), y1.data(), n);
      k->caxpy({0.3, -0.7}, a.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(y1[i] - y2[i]));
      std::vector<double> e(n), c(n), d(n), o1(n), o2(n);
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = u(rng);
        c[i] = u(rng);
        d[i] = i % 4 == 0 ? 0.0 : 0.5 * std::abs(u(rng));
      }
      ref->tqd_speed(e.data(), c.data(), d.data(), o1.data(), n);
      k->tqd_speed(e.data(), c.data(), d.data(), o2.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        if (o1[i] != o2[i]) worst = std::max(worst, 1.0);  // must be bit-identical
      }
    }
  }
  return upper("kernel_equivalence", worst, 1e-13, detail);
}

template <class F>
void run_check(std::vector<CheckResult>& out, const char* name, double required, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    CheckResult c;
    c.name = name;
    c.passed = false;
    c.achieved = std::nan("");
    c.required = required;
    c.detail = std::string("error: ") + e.what();
    out.push_back(std::move(c));
  }
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport run_validation(const ValidationOptions& o) {
  ValidationReport r;
  auto& v = r.checks;
  run_check(v, "lz_cd_term", 1e-6, [&] { v.push_back(check_lz_cd_term(o)); });
  run_check(v, "lz_cost_rate", 1e-5, [&] { v.push_back(check_lz_cost_rate(o)); });
  run_check(v, "osc_cost_rate", 1e-5, [&] {
    for (CheckResult& c : check_oscillator(o)) v.push_back(std::move(c));
  });
  run_check(v, "energy_norm_identity", 1e-8, [&] { v.push_back(check_energy_norm_identity(o)); });
  run_check(v, "richardson_consistency", 0.0, [&] { v.push_back(check_richardson(o)); });
  run_check(v, "tqd_fidelity", 1.0 - 1e-6, [&] { v.push_back(check_tqd_fidelity()); });
  run_check(v, "bare_fidelity", 0.5, [&] { v.push_back(check_bare_fidelity()); });
  run_check(v, "kernel_equivalence", 1e-13, [&] { v.push_back(check_kernels()); });
  return r;
}

std::string format_validation(const ValidationReport& r) {
  std::string out;
  std::size_t failed = 0;
  for (const CheckResult& c : r.checks) {
    if (!c.passed) ++failed;
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name + ": achieved " + format_double(c.achieved, 10) + ", required " + c.relation +
           " " + format_double(c.required, 6);
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += '\n';
  }
  out += std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) +
         " checks passed\n";
  return out;
}

}  // namespace tqd::app
