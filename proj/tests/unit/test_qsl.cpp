#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tqd/errors.hpp"
#include "tqd/landau_zener.hpp"
#include "tqd/oscillator.hpp"
#include "tqd/qsl.hpp"

using namespace tqd;

namespace {

class ConstantProtocol final : public Protocol {
 public:
  ConstantProtocol(double e, double c, double angle_end) : e_(e), c_(c), l_(angle_end) {}
  double duration() const override { return 2.0; }
  double control(double) const override { return 0.0; }
  double level_energy(double) const override { return e_; }
  double cost_rate(double) const override { return c_; }
  double angle(double t) const override { return l_ * t / 2.0; }

 private:
  double e_, c_, l_;
};

OscillatorParams osc(double omega_d, double tau) {
  OscillatorParams p;
  p.omega_d = omega_d;
  p.tau = tau;
  return p;
}

}  // namespace

TEST_CASE("qsl speed values") {
  CHECK(qsl_speed(1.0, std::numbers::pi / 4).value() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(qsl_speed(0.0, std::numbers::pi / 4).value() == 0.0);
  CHECK(qsl_speed(1.5723, 0.3747).value() == doctest::Approx(4.615).epsilon(1e-3));
  CHECK(qsl_speed(1.572330188676101, 0.374734432708740).value() ==
        doctest::Approx(4.616014971039575).epsilon(1e-13));
}

TEST_CASE("unbounded speed marker") {
  CHECK(qsl_speed(1.0, 0.0).is_unbounded());
  CHECK(qsl_speed(1.0, std::numbers::pi / 2).is_unbounded());
  CHECK(qsl_speed(0.0, 0.0).is_finite());
  CHECK(qsl_speed(0.0, 0.0).value() == 0.0);
  CHECK_THROWS_AS(qsl_speed(1.0, 0.0).value(), DomainError);
  CHECK(std::isinf(qsl_speed(1.0, 0.0).as_double()));
  CHECK_THROWS_AS(qsl_speed(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(qsl_speed(1.0, 1.6), DomainError);
  CHECK_THROWS_AS(qsl_speed(-1.0, 0.5), DomainError);
}

TEST_CASE("speed increases with cost rate") {
  for (double e : {0.1, 1.0, 20.0}) {
    for (double l : {0.01, 0.4, 1.2}) {
      double prev = tqd_speed(e, 0.0, l).value();
      for (double c = 0.01; c < 100.0; c *= 1.7) {
        const double v = tqd_speed(e, c, l).value();
        CHECK(v > prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("constant protocol integrals") {
  const ConstantProtocol p(3.0, 4.0, 1.0);
  CHECK(time_averaged_energy(p) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(total_cost(p) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(qsl_time(p) == doctest::Approx(2.0 * std::pow(std::sin(1.0), 2) / 20.0).epsilon(1e-12));
  CHECK(qsl_time(ConstantProtocol(1.0, 0.0, 0.0)) == 0.0);
}

TEST_CASE("oscillator total cost is independent of tau") {
  for (double tau : {0.5, 1.0, 2.0}) {
    CHECK(total_cost(OscillatorProtocol(osc(4.0, tau))) ==
          doctest::Approx(0.569022230890437).epsilon(1e-9));
    CHECK(total_cost(OscillatorProtocol(osc(-0.75, tau))) ==
          doctest::Approx(0.490129071734274).epsilon(1e-9));
  }
  CHECK(std::abs(total_cost(OscillatorProtocol(osc(4.0, 0.5))) -
                 total_cost(OscillatorProtocol(osc(4.0, 2.0)))) <= 1e-8);
  CHECK(total_cost(OscillatorProtocol(osc(0.0, 1.0))) == 0.0);
}

TEST_CASE("oscillator qsl times and mean energies") {
  struct Row {
    double tau, c_qsl, c_e, x_qsl, x_e;
  };
  const Row rows[] = {
      {0.5, 0.0629033582431772, 2.02408913142320, 0.0950889945096752, 1.05164641308543},
      {1.0, 0.0759395433965818, 1.67662324600922, 0.163766723119263, 0.610624662295864},
      {2.0, 0.0819814014753150, 1.55305961423912, 0.237485704584948, 0.421077976776621},
  };
  double prev = 0.0;
  for (const Row& r : rows) {
    const OscillatorProtocol comp(osc(4.0, r.tau));
    const OscillatorProtocol exp(osc(-0.75, r.tau));
    const double tq = qsl_time(comp);
    CHECK(tq == doctest::Approx(r.c_qsl).epsilon(1e-8));
    CHECK(time_averaged_energy(comp) == doctest::Approx(r.c_e).epsilon(1e-8));
    CHECK(qsl_time(exp) == doctest::Approx(r.x_qsl).epsilon(1e-8));
    CHECK(time_averaged_energy(exp) == doctest::Approx(r.x_e).epsilon(1e-8));
    CHECK(tq > prev);
    CHECK(qsl_time(exp) > tq);
    CHECK(tq <= r.tau);
    CHECK(qsl_time(exp) <= r.tau);
    prev = tq;
  }
  CHECK(time_averaged_energy(OscillatorProtocol(osc(0.0, 1.0))) == doctest::Approx(0.5));
}

TEST_CASE("landau-zener mean energy regression") {
  const LandauZenerProtocol lz{LZParams{}};
  CHECK(time_averaged_energy(lz, {1e-10, 1e-10}) ==
        doctest::Approx(11.16864087246863).epsilon(1e-9));
  CHECK(qsl_time(lz) == doctest::Approx(0.04465656322036811).epsilon(1e-8));
  CHECK(qsl_time(lz) <= 1.0);
}

TEST_CASE("cost rate scales as one over tau") {
  for (int k = 1; k <= 9; ++k) {
    const double s = 0.1 * k;
    const double c05 = osc_cost_rate(osc(4.0, 0.5), 0.5 * s);
    const double c1 = osc_cost_rate(osc(4.0, 1.0), s);
    const double c2 = osc_cost_rate(osc(4.0, 2.0), 2.0 * s);
    CHECK(std::abs(c05 - 2.0 * c1) <= 1e-12 * c05);
    CHECK(std::abs(c05 - 4.0 * c2) <= 1e-12 * c05);
  }
}

TEST_CASE("sampled report") {
  const ProtocolReport r = build_report(OscillatorProtocol(osc(4.0, 1.0)), 5);
  REQUIRE(r.samples.size() == 5);
  CHECK(r.samples.front().t == 0.0);
  CHECK(r.samples.back().t == 1.0);
  CHECK(r.samples.front().speed.is_unbounded());
  CHECK(r.samples[2].speed.value() == doctest::Approx(4.616014971039575).epsilon(1e-12));
  CHECK(argmin_speed(r.samples) == 2);
  CHECK(argmax_speed(r.samples) == 4);
  CHECK(r.total_cost == doctest::Approx(0.569022230890437).epsilon(1e-9));
  CHECK_THROWS_AS(sample_protocol(OscillatorProtocol(osc(4.0, 1.0)), 2), ValidationError);
}
