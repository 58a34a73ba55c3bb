#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "tqd/errors.hpp"
#include "tqd/spectral.hpp"

using namespace tqd;

namespace {

HermitianOperator random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[i * n + j] = {g(rng), g(rng)};
      a[j * n + i] = std::conj(a[i * n + j]);
    }
  }
  return HermitianOperator::from_row_major(n, a);
}

StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return StateVector::normalized(v);
}

const double kSqrt401 = 20.02498439450079;

}  // namespace

TEST_CASE("pauli spectra") {
  const EigenSystem z = eigensystem_hermitian(pauli_z());
  CHECK(z.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(z.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(std::abs(z.eigenvectors[0][1] - cplx(1.0)) < 1e-12);
  CHECK(std::abs(z.eigenvectors[1][0] - cplx(1.0)) < 1e-12);

  const EigenSystem x = eigensystem_hermitian(pauli_x() + pauli_z().scaled(0.0));
  CHECK(x.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(x.eigenvalues[1] == doctest::Approx(1.0));

  const EigenSystem lz = eigensystem_hermitian(pauli_x() + pauli_z().scaled(20.0));
  CHECK(lz.eigenvalues[0] == doctest::Approx(-kSqrt401).epsilon(1e-14));
  CHECK(lz.eigenvalues[1] == doctest::Approx(kSqrt401).epsilon(1e-14));
}

TEST_CASE("state norm of operator") {
  std::mt19937_64 rng(3);
  const StateVector psi = random_state(5, rng);
  CHECK(state_norm_of_operator(HermitianOperator::identity(5), psi) == doctest::Approx(1.0));

  const StateVector gx = eigensystem_hermitian(pauli_x()).eigenvectors[0];
  CHECK(state_norm_of_operator(pauli_y().scaled(-2.5), gx) == doctest::Approx(2.5));

  const HermitianOperator h = pauli_x() + pauli_z().scaled(20.0);
  const StateVector g = eigensystem_hermitian(h).eigenvectors[0];
  CHECK(state_norm_of_operator(h, g) == doctest::Approx(kSqrt401).epsilon(1e-13));
}

TEST_CASE("state norm squared equals expectation of the square") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const HermitianOperator a = random_hermitian(n, rng);
    const StateVector psi = random_state(n, rng);
    const StateVector a_psi = a.apply(psi);
    const double expect = inner(psi, a.apply(a_psi)).real();
    const double s = state_norm_of_operator(a, psi);
    CHECK(std::abs(s * s - expect) <= 1e-10 * (1.0 + expect));
  }
}

TEST_CASE("bures angle") {
  std::mt19937_64 rng(9);
  const StateVector a = random_state(4, rng);
  CHECK(bures_angle(a, a) <= 1e-15);
  CHECK(bures_angle(StateVector::basis(3, 0), StateVector::basis(3, 2)) ==
        doctest::Approx(std::numbers::pi / 2));

  // ground states of σx + hσz at h = 20 and h = 0
  const StateVector g20 = eigensystem_hermitian(pauli_x() + pauli_z().scaled(20.0)).eigenvectors[0];
  const StateVector g0 = eigensystem_hermitian(pauli_x()).eigenvectors[0];
  CHECK(bures_angle(g20, g0) == doctest::Approx(0.760418965536477).epsilon(1e-12));

  for (int i = 0; i < 100; ++i) {
    const StateVector p = random_state(6, rng);
    const StateVector q = random_state(6, rng);
    CHECK(bures_angle(p, q) == bures_angle(q, p));
  }
}

TEST_CASE("random hermitian reconstruction, residual and orthonormality") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const HermitianOperator h = random_hermitian(n, rng);
    const EigenSystem es = eigensystem_hermitian(h);
    REQUIRE(es.eigenvalues.size() == n);
    std::vector<cplx> rec(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      const StateVector& v = es.eigenvectors[k];
      if (k > 0) CHECK(es.eigenvalues[k] >= es.eigenvalues[k - 1]);
      StateVector r = h.apply(v) - cplx(es.eigenvalues[k]) * v;
      CHECK(r.norm() <= 1e-10 * (1.0 + std::abs(es.eigenvalues[k])));
      for (std::size_t j = 0; j < n; ++j) {
        const cplx ov = inner(es.eigenvectors[j], v);
        CHECK(std::abs(ov - cplx(j == k ? 1.0 : 0.0)) <= 1e-10);
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rec[i * n + j] += es.eigenvalues[k] * v[i] * std::conj(v[j]);
      }
    }
    for (std::size_t i = 0; i < n * n; ++i) CHECK(std::abs(rec[i] - h.entries()[i]) <= 1e-9);
  }
}

TEST_CASE("gauge fixing makes the largest component real positive") {
  StateVector v = StateVector::normalized({{0.1, 0.2}, {0.0, -0.9}, {0.3, 0.0}});
  fix_gauge(v);
  CHECK(v[1].imag() == doctest::Approx(0.0));
  CHECK(v[1].real() > 0.0);
  CHECK(v.is_unit());
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(HermitianOperator::from_row_major(2, {1.0, 2.0, 3.0, 4.0}), ValidationError);
  CHECK_THROWS_AS(HermitianOperator::from_row_major(2, {1.0, 2.0, 2.0}), ValidationError);
  CHECK_THROWS_AS(HermitianOperator::from_row_major(1, {1.0}), ValidationError);
  CHECK_THROWS_AS(eigensystem_hermitian(HermitianOperator::identity(3)), DegeneracyError);
  CHECK_THROWS_AS(state_norm_of_operator(pauli_x(), StateVector::zeros(2)), ValidationError);
  CHECK_THROWS_AS(StateVector::normalized({0.0, 0.0}), ValidationError);
}
