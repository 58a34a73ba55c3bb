#pragma once

#include "tqd/simd/kernels.hpp"

namespace tqd::simd::detail {

extern const KernelTable scalar_table;
#if TQD_HAVE_AVX2_KERNELS
extern const KernelTable avx2_table;
#endif

}  // namespace tqd::simd::detail
