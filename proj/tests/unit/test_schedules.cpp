#include <cmath>
#include <random>

#include "doctest.h"
#include "tqd/errors.hpp"
#include "tqd/schedules.hpp"

using tqd::Ramp;

TEST_CASE("linear ramp values") {
  const Ramp r = Ramp::linear(1.0, 4.0, 1.0);
  CHECK(r.value(0.0) == 1.0);
  CHECK(r.value(0.5) == 3.0);
  CHECK(r.value(1.0) == 5.0);
  CHECK(Ramp::linear(0.2, -0.4, 2.0).value(1.0) == 0.0);
}

TEST_CASE("linear ramp derivative is constant") {
  CHECK(Ramp::linear(1.0, 4.0, 1.0).derivative(0.3) == 4.0);
  CHECK(Ramp::linear(1.0, 4.0, 2.0).derivative(1.7) == 2.0);
  const Ramp lz = Ramp::linear(0.2, -0.4, 1000.0);
  for (double t : {0.0, 1.0, 500.0, 1000.0}) CHECK(lz.derivative(t) == doctest::Approx(-0.0004));
}

TEST_CASE("ramp endpoints differ by delta") {
  CHECK(Ramp::linear(1.0, 4.0, 1.0).value(1.0) - Ramp::linear(1.0, 4.0, 1.0).value(0.0) == 4.0);
  const Ramp e = Ramp::linear(1.0, -0.75, 0.5);
  CHECK(e.value(0.5) - e.value(0.0) == -0.75);
  const Ramp lz = Ramp::linear(0.2, -0.4, 1000.0);
  CHECK(lz.value(1000.0) - lz.value(0.0) == doctest::Approx(-0.4).epsilon(1e-15));
}

TEST_CASE("finite differences agree with the analytic derivative") {
  std::mt19937_64 rng(11);
  for (double tau : {0.5, 1.0, 1000.0}) {
    const Ramp r = Ramp::linear(0.2, -0.4, tau);
    const double h = 1e-6 * tau;
    std::uniform_real_distribution<double> u(h, tau - h);
    for (int i = 0; i < 100; ++i) {
      const double t = u(rng);
      const double fd = (r.value(t + h) - r.value(t - h)) / (2 * h);
      CHECK(std::abs(fd - r.derivative(t)) <= 1e-6);
    }
  }
}

TEST_CASE("custom shape") {
  const Ramp r = Ramp::custom(
      1.0, 2.0, 2.0, [](double s) { return s * s; }, [](double s) { return 2 * s; });
  CHECK(r.kind() == tqd::RampKind::custom);
  CHECK(r.value(1.0) == doctest::Approx(1.5));
  CHECK(r.derivative(1.0) == doctest::Approx(1.0));
}

TEST_CASE("ramp errors") {
  const Ramp r = Ramp::linear(1.0, 4.0, 1.0);
  CHECK_THROWS_AS(r.value(-1e-9), tqd::DomainError);
  CHECK_THROWS_AS(r.value(1.0 + 1e-9), tqd::DomainError);
  CHECK_THROWS_AS(r.derivative(2.0), tqd::DomainError);
  CHECK_THROWS_AS(Ramp::linear(1.0, 4.0, 0.0), tqd::ValidationError);
  CHECK_THROWS_AS(Ramp::linear(1.0, 4.0, -1.0), tqd::ValidationError);
  CHECK(tqd::ramp_kind_from_string("linear") == tqd::RampKind::linear);
  CHECK_THROWS_AS(tqd::ramp_kind_from_string("cubic"), tqd::ValidationError);
}
