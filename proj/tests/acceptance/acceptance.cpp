// Acceptance run: one PASS/FAIL line per criterion, detail lines beneath.
// Usage: acceptance [path-to-tqd]   (criterion 8 is skipped without the CLI path)

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tqd/cd_generic.hpp"
#include "tqd/landau_zener.hpp"
#include "tqd/oscillator.hpp"
#include "tqd/propagator.hpp"
#include "tqd/qsl.hpp"

using namespace tqd;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> lines;

  void expect(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Outcome::expect(bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  passed = passed && ok;
  lines.push_back(std::string(ok ? "ok   " : "MISS ") + buf);
}

void note(Outcome& o, const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  o.lines.push_back(std::string("     ") + buf);
}

OscillatorParams osc(double omega_d, double tau) {
  OscillatorParams p;
  p.omega_d = omega_d;
  p.tau = tau;
  return p;
}

LZParams lz(double delta, double tau) {
  LZParams p;
  p.delta = delta;
  p.tau = tau;
  return p;
}

double interior(double tau, int k) { return tau * (k + 1) / 51.0; }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Outcome oracle_oscillator() {
  Outcome o;
  for (const OscillatorParams& p : {osc(4.0, 1.0), osc(-0.75, 1.0)}) {
    double cost = 0.0, norm = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double t = interior(p.tau, k);
      const CDResult r = counterdiabatic(oscillator_fock_schedule(p, 80, osc_frequency(p, t)), t,
                                         0, default_fd(p.tau));
      const double c = osc_cost_rate(p, t);
      cost = std::max(cost, rel(r.cost_rate, c));
      norm = std::max(norm, rel(r.energy_norm, std::hypot(osc_ground_energy(p, t), c)));
    }
    o.expect(cost <= 1e-5, "omega_d=%g cost rate max rel err %.3e (<= 1e-5)", p.omega_d, cost);
    o.expect(norm <= 1e-5, "omega_d=%g energy norm max rel err %.3e (<= 1e-5)", p.omega_d, norm);
  }
  return o;
}

Outcome oracle_lz() {
  Outcome o;
  for (double delta : {0.001, 0.01}) {
    for (double tau : {1.0, 1e3}) {
      const LZParams p = lz(delta, tau);
      const HamiltonianSchedule s = lz_schedule(p);
      double worst = 0.0;
      for (int k = 0; k < 50; ++k) {
        const double t = interior(tau, k);
        worst = std::max(worst, cd_hamiltonian(s, t, 0, default_fd(tau)).max_abs_diff(lz_cd_term(p, t)));
      }
      o.expect(worst <= 1e-6, "delta=%g tau=%g max elementwise |dH1| %.3e (<= 1e-6)", delta, tau,
               worst);
    }
  }
  return o;
}

Outcome tqd_guarantee() {
  Outcome o;
  const LZParams p = lz(0.01, 1.0);
  const HamiltonianSchedule bare = lz_schedule(p);
  const HamiltonianSchedule driven = lz_tqd_schedule(p);
  const StateVector g0 = lz_ground_state(p, 0.0).first;
  const Trajectory td = propagate(driven, g0, default_step_count(driven));
  const double fmin = min_instantaneous_fidelity(td, bare, 0);
  o.expect(fmin >= 1.0 - 1e-6, "H0+H1 min fidelity 1 - %.3e over %zu steps (>= 1 - 1e-6)",
           1.0 - fmin, td.times.size() - 1);
  const Trajectory tb = propagate(bare, g0, default_step_count(bare));
  const double fb = final_fidelity(tb, bare, 0);
  o.expect(fb < 0.5, "H0 alone final fidelity %.6f (< 0.5)", fb);
  return o;
}

Outcome trade_off() {
  Outcome o;
  double scaling = 0.0;
  bool increasing = true;
  for (int k = 0; k <= 20; ++k) {
    const double s = 0.05 * k;
    const double c05 = osc_cost_rate(osc(4.0, 0.5), 0.5 * s);
    const double c1 = osc_cost_rate(osc(4.0, 1.0), s);
    const double c2 = osc_cost_rate(osc(4.0, 2.0), 2.0 * s);
    scaling = std::max({scaling, rel(0.5 * c05, c1), rel(2.0 * c2, c1)});
    if (k >= 1 && k <= 10) {
      const double v05 = osc_speed(osc(4.0, 0.5), 0.5 * s).value();
      const double v1 = osc_speed(osc(4.0, 1.0), s).value();
      const double v2 = osc_speed(osc(4.0, 2.0), 2.0 * s).value();
      increasing = increasing && v05 > v1 && v1 > v2;
    }
  }
  o.expect(scaling <= 1e-12, "cost rate 1/tau scaling max rel dev %.3e (<= 1e-12)", scaling);
  o.expect(increasing, "v_QSL strictly increasing as tau decreases, t/tau in [0.05, 0.5]%s", "");
  bool bounded = true;
  for (double tau : {0.5, 1.0, 2.0}) {
    bounded = bounded && qsl_time(OscillatorProtocol(osc(4.0, tau))) <= tau &&
              qsl_time(OscillatorProtocol(osc(-0.75, tau))) <= tau;
  }
  for (double delta : {0.001, 0.01}) {
    for (double tau : {1.0, 1e3}) bounded = bounded && qsl_time(LandauZenerProtocol(lz(delta, tau))) <= tau;
  }
  o.expect(bounded, "tau_QSL <= tau for all oscillator and LZ protocols tested%s", "");
  return o;
}

double spread(double s) {
  double lo = 1e300, hi = 0.0;
  for (double tau : {0.5, 1.0, 2.0}) {
    const double v = osc_speed(osc(4.0, tau), s * tau).value();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return (hi - lo) / hi;  // max pairwise relative difference
}

Outcome oscillator_profiles() {
  Outcome o;
  bool larger = true;
  for (double tau : {0.5, 1.0, 2.0}) {
    const double c = qsl_time(OscillatorProtocol(osc(4.0, tau)));
    const double e = qsl_time(OscillatorProtocol(osc(-0.75, tau)));
    larger = larger && e > c;
    note(o, "tau=%g: tau_QSL compression %.6g, expansion %.6g", tau, c, e);
  }
  o.expect(larger, "expansion tau_QSL > compression tau_QSL at each tau%s", "");
  const double late = spread(0.99);
  const double early = spread(0.1);
  o.expect(late <= 0.02, "compression v_QSL spread at t=0.99tau %.4f (<= 0.02)", late);
  note(o, "v at t=0.99tau: %.6g (0.5), %.6g (1), %.6g (2)", osc_speed(osc(4.0, 0.5), 0.495).value(),
       osc_speed(osc(4.0, 1.0), 0.99).value(), osc_speed(osc(4.0, 2.0), 1.98).value());
  o.expect(early > 0.2, "compression v_QSL spread at t=0.1tau %.4f (> 0.2)", early);
  return o;
}

Outcome crossing_profiles() {
  Outcome o;
  const auto narrow = sample_protocol(LandauZenerProtocol(lz(0.001, 1e3)), 1001);
  const auto wide = sample_protocol(LandauZenerProtocol(lz(0.01, 1e3)), 1001);
  const std::size_t kn = argmin_speed(narrow);
  const std::size_t kw = argmin_speed(wide);
  o.expect(kn == 500, "tau=1e3 delta=0.001 grid minimum at k=%zu, t/tau=%.3f (nearest 0.5: k=500)", kn,
           narrow[kn].t / 1e3);
  const double vn = narrow[kn].speed.value();
  const double vw = wide[kw].speed.value();
  o.expect(vw > vn, "tau=1e3 min v_QSL delta=0.01 %.7f > delta=0.001 %.7f", vw, vn);
  note(o, "cost rate at the crossing: %.3g (delta=0.01), %.3g (delta=0.001)", wide[500].cost_rate,
       narrow[500].cost_rate);
  note(o, "adiabatic-limit minima (cost rate dropped): %.7f (delta=0.01), %.7f (delta=0.001)",
       qsl_speed(1.0, wide[500].angle).value(), qsl_speed(1.0, narrow[500].angle).value());

  for (double delta : {0.001, 0.01}) {
    const LZParams p = lz(delta, 1.0);
    const auto smp = sample_protocol(LandauZenerProtocol(p), 1001);
    // avoided-crossing window |g| <= delta; outside it v_QSL diverges as t -> 0
    std::size_t first = 0, last = 0;
    for (std::size_t k = 0; k < smp.size(); ++k) {
      if (std::abs(lz_reduced_field(p, smp[k].t)) <= 1.0 + 1e-12) {
        if (last == 0) first = k;
        last = k + 1;
      }
    }
    const std::size_t km = argmax_speed(smp, first, last);
    const double off = std::abs(smp[km].t - 0.5);
    o.expect(off <= 0.005,
             "tau=1 delta=%g max v_QSL in crossing window at t/tau=%.3f (|t/tau-0.5| <= 0.005)", delta,
             smp[km].t);
  }
  return o;
}

Outcome analytic_cost() {
  Outcome o;
  const double comp = std::log(5.0) / std::sqrt(8.0);
  const double exp = std::abs(std::log(0.25)) / std::sqrt(8.0);
  for (double tau : {0.5, 1.0, 2.0}) {
    const double c = total_cost(OscillatorProtocol(osc(4.0, tau)));
    const double e = total_cost(OscillatorProtocol(osc(-0.75, tau)));
    o.expect(std::abs(c - comp) <= 1e-8, "tau=%g compression C=%.10f vs ln5/sqrt8=%.10f", tau, c, comp);
    o.expect(std::abs(e - exp) <= 1e-8, "tau=%g expansion C=%.10f vs |ln0.25|/sqrt8=%.10f", tau, e, exp);
  }
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.expect(false, "no CLI path given%s", "");
    return o;
  }
  bool same = true;
  for (const char* args : {"--model landau-zener --lz.delta 0.001 --lz.tau 1000",
                           "--oscillator.omega_d -0.75 --oscillator.tau 0.5"}) {
    std::string out[2];
    for (int run = 0; run < 2; ++run) {
      const std::string path = "acceptance_det_" + std::to_string(run) + ".csv";
      const std::string cmd = "\"" + cli + "\" report " + args + " --output " + path;
      if (std::system(cmd.c_str()) != 0) same = false;
      out[run] = slurp(path) + slurp("acceptance_det_" + std::to_string(run) + ".summary.csv");
      std::remove(path.c_str());
      std::remove(("acceptance_det_" + std::to_string(run) + ".summary.csv").c_str());
    }
    same = same && !out[0].empty() && out[0] == out[1];
    o.expect(out[0] == out[1] && !out[0].empty(), "report %s: %zu bytes, identical", args,
             out[0].size());
  }
  o.passed = o.passed && same;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* title;
    double time_limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence, oscillator (80-level Fock)", 60.0, oracle_oscillator},
      {2, "oracle equivalence, Landau-Zener counterdiabatic term", 10.0, oracle_lz},
      {3, "transitionless driving keeps the ground state", 10.0, tqd_guarantee},
      {4, "trade-off law: 1/tau cost scaling, speed ordering, tau_QSL <= tau", 0.0, trade_off},
      {5, "oscillator speed profiles and QSL times", 0.0, oscillator_profiles},
      {6, "Landau-Zener speed profiles", 0.0, crossing_profiles},
      {7, "analytic total cost", 0.0, analytic_cost},
      {8, "report determinism", 0.0, [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.lines.push_back(std::string("MISS exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0) {
      o.expect(secs <= c.time_limit, "runtime %.2f s (<= %.0f s)", secs, c.time_limit);
    }
    std::printf("%s [%d] %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const std::string& l : o.lines) std::printf("       %s\n", l.c_str());
    if (!o.passed) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
