#include <atomic>
#include <cstdlib>
#include <string>

#include "tables.hpp"
#include "tqd/errors.hpp"

namespace tqd::simd {
namespace {

bool cpu_has_avx2() {
#if TQD_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  const KernelTable* best = &detail::scalar_table;
  if (const KernelTable* wide = kernels_for(Isa::avx2)) best = wide;
  if (const char* env = std::getenv("TQD_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return &detail::scalar_table;
    if (want == "avx2" && kernels_for(Isa::avx2)) return kernels_for(Isa::avx2);
  }
  return best;
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw ValidationError(std::string(op) + ": size mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) { return kernels_for(isa) != nullptr; }

const KernelTable* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_table;
    case Isa::avx2:
#if TQD_HAVE_AVX2_KERNELS
      if (cpu_has_avx2()) return &detail::avx2_table;
#endif
      return nullptr;
  }
  return nullptr;
}

const KernelTable& kernels() { return *active_slot().load(std::memory_order_acquire); }

Isa active_isa() { return kernels().isa; }

void select_isa(Isa isa) {
  const KernelTable* table = kernels_for(isa);
  if (table == nullptr) {
    throw ValidationError("simd: ISA '" + std::string(to_string(isa)) +
                          "' is not available on this CPU/build");
  }
  active_slot().store(table, std::memory_order_release);
}

cplx cdot(std::span<const cplx> a, std::span<const cplx> b) {
  require_same_size(a.size(), b.size(), "cdot");
  return kernels().cdot(a.data(), b.data(), a.size());
}

double norm2(std::span<const cplx> x) { return cdot(x, x).real(); }

void cgemv(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y) {
  require_same_size(a.size(), x.size() * x.size(), "cgemv");
  require_same_size(x.size(), y.size(), "cgemv");
  kernels().cgemv(a.data(), x.data(), y.data(), x.size());
}

void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  require_same_size(x.size(), y.size(), "caxpy");
  kernels().caxpy(alpha, x.data(), y.data(), x.size());
}

void tqd_speed(std::span<const double> e, std::span<const double> c,
               std::span<const double> d, std::span<double> out) {
  require_same_size(e.size(), c.size(), "tqd_speed");
  require_same_size(e.size(), d.size(), "tqd_speed");
  require_same_size(e.size(), out.size(), "tqd_speed");
  kernels().tqd_speed(e.data(), c.data(), d.data(), out.data(), e.size());
}

}  // namespace tqd::simd
