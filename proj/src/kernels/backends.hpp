#pragma once

#include "indpath/kernels.hpp"

namespace indpath::kernels::detail {

#if defined(INDPATH_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

#if defined(INDPATH_HAVE_NEON)
const KernelTable& neon_table();
#endif

}  // namespace indpath::kernels::detail
