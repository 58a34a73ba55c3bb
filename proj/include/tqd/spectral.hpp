#pragma once

// Small dense complex Hermitian linear algebra.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tqd {

using cplx = std::complex<double>;

/// Complex amplitude vector. Operations that need a physical state check unit
/// norm themselves; eigenstate derivatives use the same type unnormalized.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<cplx> amplitudes);
  static StateVector zeros(std::size_t dim);
  static StateVector basis(std::size_t dim, std::size_t index);
  // Rescales to unit norm; throws ValidationError for the zero vector.
  static StateVector normalized(std::vector<cplx> amplitudes);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  std::span<cplx> amplitudes() noexcept { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  cplx& operator[](std::size_t i) { return amps_[i]; }

  double norm() const;
  bool is_unit(double tol = 1e-10) const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(cplx factor);

 private:
  std::vector<cplx> amps_;
};

StateVector operator+(StateVector a, const StateVector& b);
StateVector operator-(StateVector a, const StateVector& b);
StateVector operator*(cplx factor, StateVector v);

// ⟨a|b⟩
cplx inner(const StateVector& a, const StateVector& b);

/// Dense row-major complex Hermitian matrix, dim ≥ 2.
class HermitianOperator {
 public:
  static constexpr double kHermiticityTol = 1e-12;

  // Throws ValidationError if dim < 2, the size is wrong, or
  // |A(i,j) − conj(A(j,i))| > kHermiticityTol for some i, j.
  static HermitianOperator from_row_major(std::size_t dim, std::vector<cplx> entries);
  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);
  // i·(|d⟩⟨n| − |n⟩⟨d|); Hermitian by construction, no tolerance check.
  static HermitianOperator antisymmetrized_outer(const StateVector& d, const StateVector& n);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const cplx> entries() const noexcept { return data_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  StateVector apply(const StateVector& psi) const;
  double frobenius_norm() const;
  double max_abs_diff(const HermitianOperator& other) const;
  HermitianOperator scaled(double factor) const;

  HermitianOperator& operator+=(const HermitianOperator& other);
  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) {
    a += b;
    return a;
  }

 private:
  HermitianOperator(std::size_t dim, std::vector<cplx> entries)
      : dim_(dim), data_(std::move(entries)) {}

  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();

struct EigenSystem {
  std::vector<double> eigenvalues;        // ascending
  std::vector<StateVector> eigenvectors;  // orthonormal, gauge-fixed
};

inline constexpr double kDegeneracyThreshold = 1e-12;

// Makes the largest-magnitude component real and positive. Ties within a
// relative 1e-9 go to the lowest index so the choice is deterministic.
void fix_gauge(StateVector& v);

// Ascending eigenvalues with gauge-fixed eigenvectors. Throws DegeneracyError
// when two consecutive eigenvalues are closer than min_gap.
EigenSystem eigensystem_hermitian(const HermitianOperator& h,
                                  double min_gap = kDegeneracyThreshold);

// ‖Aψ‖₂, the Schatten-1 norm of A|ψ⟩⟨ψ| for a pure state.
double state_norm_of_operator(const HermitianOperator& a, const StateVector& psi);

// arccos|⟨ψ0|ψ1⟩| in [0, π/2], evaluated through atan2 so small angles keep
// full relative precision. Exactly symmetric in its arguments.
double bures_angle(const StateVector& psi0, const StateVector& psi1);

}  // namespace tqd
