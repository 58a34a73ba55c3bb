#include <cmath>
#include <limits>

#include "tables.hpp"

namespace tqd::simd::detail {
namespace {

cplx cdot_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return {re, im};
}

void cgemv_scalar(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* row = a + i * n;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      re += row[j].real() * x[j].real() - row[j].imag() * x[j].imag();
      im += row[j].real() * x[j].imag() + row[j].imag() * x[j].real();
    }
    y[i] = {re, im};
  }
}

void caxpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real();
    const double xi = x[k].imag();
    y[k] = {y[k].real() + (ar * xr - ai * xi), y[k].imag() + (ar * xi + ai * xr)};
  }
}

void tqd_speed_scalar(const double* e, const double* c, const double* d, double* out,
                      std::size_t n) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double num = std::sqrt(e[k] * e[k] + c[k] * c[k]);
    if (d[k] == 0.0) {
      out[k] = num > 0.0 ? inf : 0.0;
    } else {
      out[k] = num / d[k];
    }
  }
}

}  // namespace

const KernelTable scalar_table{Isa::scalar, cdot_scalar, cgemv_scalar, caxpy_scalar,
                               tqd_speed_scalar};

}  // namespace tqd::simd::detail
