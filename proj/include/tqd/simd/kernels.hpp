#pragma once

// Data-parallel inner loops shared by the propagator, the spectral helpers and
// grid reports. Every kernel has a scalar reference implementation; wider
// variants are selected once at runtime from CPU features and must agree with
// the reference (see tests/unit/test_kernels.cpp).
//
// Set TQD_SIMD=scalar (or avx2) in the environment to pin the selection.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace tqd::simd {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  // Σ_k conj(a_k) b_k
  cplx (*cdot)(const cplx* a, const cplx* b, std::size_t n);
  // y = A x for a square row-major n×n matrix; y must not alias x
  void (*cgemv)(const cplx* a, const cplx* x, cplx* y, std::size_t n);
  // y += alpha x
  void (*caxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // out_k = sqrt(e_k² + c_k²) / d_k; d_k == 0 gives +inf (or 0 when the
  // numerator is 0). d is cos(L)·sin(L) of the Bures angle.
  void (*tqd_speed)(const double* e, const double* c, const double* d, double* out,
                    std::size_t n);
};

bool isa_supported(Isa isa);

// Table for a specific ISA; nullptr when the ISA is not compiled in or the CPU lacks it.
const KernelTable* kernels_for(Isa isa);

// Currently selected table.
const KernelTable& kernels();
Isa active_isa();

// Throws ValidationError when the ISA is unavailable.
void select_isa(Isa isa);

// Span front-ends over the active table. Sizes are checked.
cplx cdot(std::span<const cplx> a, std::span<const cplx> b);
// Squared Euclidean norm.
double norm2(std::span<const cplx> x);
void cgemv(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y);
void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
void tqd_speed(std::span<const double> e, std::span<const double> c,
               std::span<const double> d, std::span<double> out);

}  // namespace tqd::simd
