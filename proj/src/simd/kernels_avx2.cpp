// Compiled with -mavx2 -mfma -ffp-contract=off; only reached after the CPU
// check in dispatch.cpp.
#include <immintrin.h>

#include <cmath>
#include <limits>

#include "tables.hpp"

namespace tqd::simd::detail {
namespace {

// Two complex doubles per __m256d: [re0, im0, re1, im1].
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline void sum_even_odd(__m256d v, double& even, double& odd) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  even = t[0] + t[2];
  odd = t[1] + t[3];
}

cplx cdot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d same0 = _mm256_setzero_pd();  // ar·br, ai·bi
  __m256d cross0 = _mm256_setzero_pd();  // ar·bi, ai·br
  __m256d same1 = _mm256_setzero_pd();
  __m256d cross1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d va0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb0 = _mm256_loadu_pd(pb + 2 * k);
    const __m256d va1 = _mm256_loadu_pd(pa + 2 * k + 4);
    const __m256d vb1 = _mm256_loadu_pd(pb + 2 * k + 4);
    same0 = _mm256_fmadd_pd(va0, vb0, same0);
    cross0 = _mm256_fmadd_pd(va0, swap_re_im(vb0), cross0);
    same1 = _mm256_fmadd_pd(va1, vb1, same1);
    cross1 = _mm256_fmadd_pd(va1, swap_re_im(vb1), cross1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    same0 = _mm256_fmadd_pd(va, vb, same0);
    cross0 = _mm256_fmadd_pd(va, swap_re_im(vb), cross0);
  }
  double s_even, s_odd, c_even, c_odd;
  sum_even_odd(_mm256_add_pd(same0, same1), s_even, s_odd);
  sum_even_odd(_mm256_add_pd(cross0, cross1), c_even, c_odd);
  double re = s_even + s_odd;
  double im = c_even - c_odd;
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return {re, im};
}

void cgemv_avx2(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* row = a + i * n;
    const double* pr = reinterpret_cast<const double*>(row);
    __m256d same = _mm256_setzero_pd();   // ar·xr, ai·xi
    __m256d cross = _mm256_setzero_pd();  // ar·xi, ai·xr
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      const __m256d va = _mm256_loadu_pd(pr + 2 * j);
      const __m256d vx = _mm256_loadu_pd(px + 2 * j);
      same = _mm256_fmadd_pd(va, vx, same);
      cross = _mm256_fmadd_pd(va, swap_re_im(vx), cross);
    }
    double s_even, s_odd, c_even, c_odd;
    sum_even_odd(same, s_even, s_odd);
    sum_even_odd(cross, c_even, c_odd);
    double re = s_even - s_odd;
    double im = c_even + c_odd;
    for (; j < n; ++j) {
      re += row[j].real() * x[j].real() - row[j].imag() * x[j].imag();
      im += row[j].real() * x[j].imag() + row[j].imag() * x[j].real();
    }
    y[i] = {re, im};
  }
}

void caxpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * k);
    const __m256d t1 = _mm256_mul_pd(vx, ar);              // xr·ar, xi·ar
    const __m256d t2 = _mm256_mul_pd(swap_re_im(vx), ai);  // xi·ai, xr·ai
    const __m256d prod = _mm256_addsub_pd(t1, t2);         // re: t1-t2, im: t1+t2
    _mm256_storeu_pd(py + 2 * k, _mm256_add_pd(_mm256_loadu_pd(py + 2 * k), prod));
  }
  for (; k < n; ++k) {
    const double xr = x[k].real();
    const double xi = x[k].imag();
    y[k] = {y[k].real() + (alpha.real() * xr - alpha.imag() * xi),
            y[k].imag() + (alpha.real() * xi + alpha.imag() * xr)};
  }
}

// Same operation order as the scalar reference, so results are bit-identical.
void tqd_speed_avx2(const double* e, const double* c, const double* d, double* out,
                    std::size_t n) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const __m256d zero = _mm256_setzero_pd();
  const __m256d vinf = _mm256_set1_pd(inf);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d ve = _mm256_loadu_pd(e + k);
    const __m256d vc = _mm256_loadu_pd(c + k);
    const __m256d vd = _mm256_loadu_pd(d + k);
    const __m256d num =
        _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(ve, ve), _mm256_mul_pd(vc, vc)));
    const __m256d quotient = _mm256_div_pd(num, vd);
    const __m256d d_zero = _mm256_cmp_pd(vd, zero, _CMP_EQ_OQ);
    const __m256d num_pos = _mm256_cmp_pd(num, zero, _CMP_GT_OQ);
    const __m256d at_pole = _mm256_blendv_pd(zero, vinf, num_pos);
    _mm256_storeu_pd(out + k, _mm256_blendv_pd(quotient, at_pole, d_zero));
  }
  for (; k < n; ++k) {
    const double num = std::sqrt(e[k] * e[k] + c[k] * c[k]);
    if (d[k] == 0.0) {
      out[k] = num > 0.0 ? inf : 0.0;
    } else {
      out[k] = num / d[k];
    }
  }
}

}  // namespace

const KernelTable avx2_table{Isa::avx2, cdot_avx2, cgemv_avx2, caxpy_avx2, tqd_speed_avx2};

}  // namespace tqd::simd::detail
