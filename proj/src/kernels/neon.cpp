// NEON kernels for AArch64 (Advanced SIMD is mandatory there, so no runtime
// probe is needed beyond the build-time architecture check).

#include <arm_neon.h>

#include "backends.hpp"

namespace indpath::kernels::detail {
namespace {

// one kLanes block = two q registers
struct Pair {
  uint32x4_t lo, hi;
};

inline Pair load(const Exponent* p) { return {vld1q_u32(p), vld1q_u32(p + 4)}; }

inline void store(Exponent* p, Pair v) {
  vst1q_u32(p, v.lo);
  vst1q_u32(p + 4, v.hi);
}

inline bool block_leq(Pair a, Pair b) {
  const uint32x4_t m = vandq_u32(vcleq_u32(a.lo, b.lo), vcleq_u32(a.hi, b.hi));
  return vminvq_u32(m) == 0xFFFFFFFFu;
}

Exponent add_neon(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  uint32x4_t top = vdupq_n_u32(0);
  for (std::size_t i = 0; i < len; i += kLanes) {
    const Pair va = load(a + i);
    const Pair vb = load(b + i);
    const Pair s{vaddq_u32(va.lo, vb.lo), vaddq_u32(va.hi, vb.hi)};
    store(out + i, s);
    top = vmaxq_u32(top, vmaxq_u32(s.lo, s.hi));
  }
  return vmaxvq_u32(top);
}

void min_neon(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes) {
    const Pair va = load(a + i);
    const Pair vb = load(b + i);
    store(out + i, {vminq_u32(va.lo, vb.lo), vminq_u32(va.hi, vb.hi)});
  }
}

void max_neon(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes) {
    const Pair va = load(a + i);
    const Pair vb = load(b + i);
    store(out + i, {vmaxq_u32(va.lo, vb.lo), vmaxq_u32(va.hi, vb.hi)});
  }
}

void sat_sub_neon(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes) {
    const Pair va = load(a + i);
    const Pair vb = load(b + i);
    store(out + i, {vqsubq_u32(va.lo, vb.lo), vqsubq_u32(va.hi, vb.hi)});
  }
}

bool leq_all_neon(const Exponent* a, const Exponent* b, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes)
    if (!block_leq(load(a + i), load(b + i))) return false;
  return true;
}

bool any_geq_neon(const Exponent* a, const Exponent* b, std::size_t len) {
  for (std::size_t i = 0; i < len; i += kLanes) {
    const Pair va = load(a + i);
    const Pair vb = load(b + i);
    const uint32x4_t m = vorrq_u32(vcgeq_u32(va.lo, vb.lo), vcgeq_u32(va.hi, vb.hi));
    if (vmaxvq_u32(m) != 0) return true;
  }
  return false;
}

std::size_t find_leq_row_neon(const Exponent* rows, std::size_t stride, std::size_t count,
                              const Exponent* probe, std::size_t len) {
  for (std::size_t r = 0; r < count; ++r)
    if (leq_all_neon(rows + r * stride, probe, len)) return r;
  return kNotFound;
}

std::size_t find_geq_row_neon(const Exponent* rows, std::size_t stride, std::size_t count,
                              const Exponent* probe, std::size_t len) {
  for (std::size_t r = 0; r < count; ++r)
    if (leq_all_neon(probe, rows + r * stride, len)) return r;
  return kNotFound;
}

}  // namespace

const KernelTable& neon_table() {
  static constexpr KernelTable table{
      Backend::Neon, add_neon,     min_neon,          max_neon,          sat_sub_neon,
      leq_all_neon,  any_geq_neon, find_leq_row_neon, find_geq_row_neon,
  };
  return table;
}

}  // namespace indpath::kernels::detail
