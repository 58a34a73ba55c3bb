#include "tqd/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "tqd/errors.hpp"
#include "tqd/simd/kernels.hpp"

namespace tqd {

// ---- StateVector -----------------------------------------------------------

StateVector::StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {}

StateVector StateVector::zeros(std::size_t dim) { return StateVector(std::vector<cplx>(dim)); }

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ValidationError("StateVector::basis: index out of range");
  std::vector<cplx> a(dim);
  a[index] = 1.0;
  return StateVector(std::move(a));
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
  StateVector v(std::move(amplitudes));
  const double n = v.norm();
  if (!(n > 0.0)) throw ValidationError("StateVector::normalized: zero vector");
  v *= 1.0 / n;
  return v;
}

double StateVector::norm() const { return std::sqrt(simd::norm2(amps_)); }

bool StateVector::is_unit(double tol) const {
  return std::abs(simd::norm2(amps_) - 1.0) <= tol;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  simd::caxpy(1.0, other.amps_, amps_);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  simd::caxpy(-1.0, other.amps_, amps_);
  return *this;
}

StateVector& StateVector::operator*=(cplx factor) {
  for (auto& a : amps_) a *= factor;
  return *this;
}

StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
StateVector operator*(cplx factor, StateVector v) { return v *= factor; }

cplx inner(const StateVector& a, const StateVector& b) {
  return simd::cdot(a.amplitudes(), b.amplitudes());
}

// ---- HermitianOperator -----------------------------------------------------

HermitianOperator HermitianOperator::from_row_major(std::size_t dim,
                                                    std::vector<cplx> entries) {
  if (dim < 2) throw ValidationError("HermitianOperator: dim must be >= 2");
  if (entries.size() != dim * dim) {
    throw ValidationError("HermitianOperator: expected " + std::to_string(dim * dim) +
                          " entries, got " + std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const double err = std::abs(entries[i * dim + j] - std::conj(entries[j * dim + i]));
      if (!(err <= kHermiticityTol)) {
        std::ostringstream msg;
        msg << "HermitianOperator: entry (" << i << "," << j
            << ") violates Hermiticity by " << err;
        throw ValidationError(msg.str());
      }
    }
  }
  return HermitianOperator(dim, std::move(entries));
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return from_row_major(dim, std::vector<cplx>(dim * dim));
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  std::vector<cplx> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return from_row_major(dim, std::move(e));
}

HermitianOperator HermitianOperator::antisymmetrized_outer(const StateVector& d,
                                                           const StateVector& n) {
  const std::size_t dim = n.dim();
  if (d.dim() != dim || dim < 2) {
    throw ValidationError("antisymmetrized_outer: dimension mismatch");
  }
  const cplx i_unit(0.0, 1.0);
  std::vector<cplx> e(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      e[r * dim + c] = i_unit * (d[r] * std::conj(n[c]) - n[r] * std::conj(d[c]));
    }
  }
  return HermitianOperator(dim, std::move(e));
}

StateVector HermitianOperator::apply(const StateVector& psi) const {
  if (psi.dim() != dim_) {
    throw ValidationError("HermitianOperator::apply: dimension mismatch (" +
                          std::to_string(dim_) + " vs " + std::to_string(psi.dim()) + ")");
  }
  StateVector out = StateVector::zeros(dim_);
  simd::cgemv(data_, psi.amplitudes(), out.amplitudes());
  return out;
}

double HermitianOperator::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double HermitianOperator::max_abs_diff(const HermitianOperator& other) const {
  if (other.dim_ != dim_) throw ValidationError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    m = std::max(m, std::abs(data_[k] - other.data_[k]));
  }
  return m;
}

HermitianOperator HermitianOperator::scaled(double factor) const {
  HermitianOperator out = *this;
  for (auto& z : out.data_) z *= factor;
  return out;
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  if (other.dim_ != dim_) throw ValidationError("HermitianOperator +: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

HermitianOperator pauli_x() { return HermitianOperator::from_row_major(2, {0.0, 1.0, 1.0, 0.0}); }

HermitianOperator pauli_y() {
  return HermitianOperator::from_row_major(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0});
}

HermitianOperator pauli_z() { return HermitianOperator::from_row_major(2, {1.0, 0.0, 0.0, -1.0}); }

// ---- eigen-decomposition ---------------------------------------------------

void fix_gauge(StateVector& v) {
  double max_mag = 0.0;
  for (const auto& a : v.amplitudes()) max_mag = std::max(max_mag, std::abs(a));
  if (max_mag == 0.0) return;
  const double cutoff = max_mag * (1.0 - 1e-9);
  for (const auto& a : v.amplitudes()) {
    const double mag = std::abs(a);
    if (mag >= cutoff) {
      v *= std::conj(a) / mag;
      return;
    }
  }
}

EigenSystem eigensystem_hermitian(const HermitianOperator& h, double min_gap) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = h(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigensystem_hermitian: eigensolver did not converge", 0.0, 0.0);
  }
  EigenSystem out;
  out.eigenvalues.resize(h.dim());
  out.eigenvectors.reserve(h.dim());
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[k] = solver.eigenvalues()(k);
    std::vector<cplx> col(h.dim());
    for (Eigen::Index i = 0; i < n; ++i) col[i] = solver.eigenvectors()(i, k);
    StateVector v(std::move(col));
    fix_gauge(v);
    out.eigenvectors.push_back(std::move(v));
  }
  for (std::size_t k = 1; k < out.eigenvalues.size(); ++k) {
    const double gap = out.eigenvalues[k] - out.eigenvalues[k - 1];
    if (gap < min_gap) {
      std::ostringstream msg;
      msg << "eigensystem_hermitian: levels " << k - 1 << " and " << k
          << " are degenerate (gap " << gap << " < " << min_gap << ")";
      throw DegeneracyError(msg.str(), gap);
    }
  }
  return out;
}

double state_norm_of_operator(const HermitianOperator& a, const StateVector& psi) {
  if (psi.dim() != a.dim()) {
    throw ValidationError("state_norm_of_operator: dimension mismatch");
  }
  if (!psi.is_unit()) throw ValidationError("state_norm_of_operator: state is not unit-norm");
  return a.apply(psi).norm();
}

double bures_angle(const StateVector& psi0, const StateVector& psi1) {
  if (psi0.dim() != psi1.dim()) throw ValidationError("bures_angle: dimension mismatch");
  const cplx overlap = inner(psi0, psi1);
  // residuals of each state orthogonal to the other; their mean is symmetric
  StateVector r1 = psi1;
  simd::caxpy(-overlap, psi0.amplitudes(), r1.amplitudes());
  StateVector r0 = psi0;
  simd::caxpy(-std::conj(overlap), psi1.amplitudes(), r0.amplitudes());
  const double sine = 0.5 * (r0.norm() + r1.norm());
  return std::atan2(sine, std::abs(overlap));
}

}  // namespace tqd
