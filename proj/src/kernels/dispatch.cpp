#include <atomic>
#include <stdexcept>
#include <string>

#include "backends.hpp"

namespace indpath::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(INDPATH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(INDPATH_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (!available(b))
    throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
  switch (b) {
#if defined(INDPATH_HAVE_AVX2)
    case Backend::Avx2: return detail::avx2_table();
#endif
#if defined(INDPATH_HAVE_NEON)
    case Backend::Neon: return detail::neon_table();
#endif
    default: return scalar_table();
  }
}

Backend best_available() {
  if (available(Backend::Avx2)) return Backend::Avx2;
  if (available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

namespace {

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{&table(best_available())};
  return current;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void select(Backend b) { slot().store(&table(b), std::memory_order_release); }

}  // namespace indpath::kernels
