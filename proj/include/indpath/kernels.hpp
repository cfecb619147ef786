#pragma once
// Exponent-vector kernels.
//
// Every routine works on blocks of kLanes unsigned 32-bit exponents. Callers
// pass lengths that are multiples of kLanes and keep padding lanes in a state
// that makes the padded result harmless (zero for monomials, kAbsent for
// irreducible components). The scalar table is the reference; SIMD tables
// must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace indpath::kernels {

using Exponent = std::uint32_t;

inline constexpr std::size_t kLanes = 8;
inline constexpr std::size_t kNotFound = static_cast<std::size_t>(-1);

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

struct KernelTable {
  Backend backend;

  // out = a + b; returns the largest lane of out.
  Exponent (*add)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len);
  // out = min(a, b)
  void (*min)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len);
  // out = max(a, b)
  void (*max)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len);
  // out = max(a - b, 0)
  void (*sat_sub)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len);
  // a[i] <= b[i] for every lane
  bool (*leq_all)(const Exponent* a, const Exponent* b, std::size_t len);
  // a[i] >= b[i] for some lane
  bool (*any_geq)(const Exponent* a, const Exponent* b, std::size_t len);
  // First row r in [0, count) with rows[r] <= probe lane-wise, or kNotFound.
  // Row r starts at rows + r * stride.
  std::size_t (*find_leq_row)(const Exponent* rows, std::size_t stride, std::size_t count,
                              const Exponent* probe, std::size_t len);
  // First row r with probe <= rows[r] lane-wise, or kNotFound.
  std::size_t (*find_geq_row)(const Exponent* rows, std::size_t stride, std::size_t count,
                              const Exponent* probe, std::size_t len);
};

const KernelTable& scalar_table();

// True when the backend was compiled in and the running CPU supports it.
bool available(Backend b);

// Throws std::invalid_argument when the backend is not available.
const KernelTable& table(Backend b);

// The table used by the library. Defaults to the best available backend.
const KernelTable& active();

// Overrides the active backend for the whole process (tests, benchmarks).
void select(Backend b);

Backend best_available();

}  // namespace indpath::kernels
