// AVX2 kernels. This translation unit is compiled with -mavx2 and only
// reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include "backends.hpp"

namespace indpath::kernels::detail {
namespace {

inline __m256i load(const Exponent* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Exponent* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// all lanes a <= b (unsigned)
inline bool block_leq(__m256i a, __m256i b) {
  const __m256i eq = _mm256_cmpeq_epi32(_mm256_max_epu32(a, b), b);
  return _mm256_movemask_epi8(eq) == -1;
}

Exponent add_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  __m256i top = _mm256_setzero_si256();
  for (std::size_t i = 0; i < len; i += kLanes) {
    const __m256i s = _mm256_add_epi32(load(a + i), load(b + i));
    store(out + i, s);
    top = _mm256_max_epu32(top, s);
  }
  // horizontal max
  __m128i m = _mm_max_epu32(_mm256_castsi256_si128(top), _mm256_extracti128_si256(top, 1));
  m = _mm_max_epu32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epu32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<Exponent>(_mm_cvtsi128_si32(m));
}

void min_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes)
    store(out + i, _mm256_min_epu32(load(a + i), load(b + i)));
}

void max_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes)
    store(out + i, _mm256_max_epu32(load(a + i), load(b + i)));
}

void sat_sub_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes) {
    const __m256i va = load(a + i);
    const __m256i vb = load(b + i);
    store(out + i, _mm256_sub_epi32(_mm256_max_epu32(va, vb), vb));
  }
}

bool leq_all_avx2(const Exponent* a, const Exponent* b, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes)
    if (!block_leq(load(a + i), load(b + i))) return false;
  return true;
}

bool any_geq_avx2(const Exponent* a, const Exponent* b, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes) {
    const __m256i va = load(a + i);
    const __m256i ge = _mm256_cmpeq_epi32(_mm256_max_epu32(va, load(b + i)), va);
    if (_mm256_movemask_epi8(ge) != 0) return true;
  }
  return false;
}

std::size_t find_leq_row_avx2(const Exponent* rows, std::size_t stride, std::size_t count,
                              const Exponent* probe, std::size_t len) {
  if (len == kLanes) {
    const __m256i p = load(probe);
    for (std::size_t r = 0; r < count; ++r)
      if (block_leq(load(rows + r * stride), p)) return r;
    return kNotFound;
  }
  for (std::size_t r = 0; r < count; ++r)
    if (leq_all_avx2(rows + r * stride, probe, len)) return r;
  return kNotFound;
}

std::size_t find_geq_row_avx2(const Exponent* rows, std::size_t stride, std::size_t count,
                              const Exponent* probe, std::size_t len) {
  if (len == kLanes) {
    const __m256i p = load(probe);
    for (std::size_t r = 0; r < count; ++r)
      if (block_leq(p, load(rows + r * stride))) return r;
    return kNotFound;
  }
  for (std::size_t r = 0; r < count; ++r)
    if (leq_all_avx2(probe, rows + r * stride, len)) return r;
  return kNotFound;
}

}  // namespace

const KernelTable& avx2_table() {
  static constexpr KernelTable table{
      Backend::Avx2, add_avx2,     min_avx2,          max_avx2,          sat_sub_avx2,
      leq_all_avx2,  any_geq_avx2, find_leq_row_avx2, find_geq_row_avx2,
  };
  return table;
}

}  // namespace indpath::kernels::detail
