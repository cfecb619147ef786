#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "indpath/kernels.hpp"

using namespace indpath::kernels;

namespace {

std::vector<Backend> simd_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Avx2, Backend::Neon})
    if (available(b)) out.push_back(b);
  return out;
}

// Small values so that equal lanes and the <= boundary are hit often; a few
// lanes near UINT32_MAX catch signed-compare mistakes.
std::vector<Exponent> random_lanes(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_int_distribution<Exponent> small(0, 4);
  std::vector<Exponent> v(len);
  for (auto& x : v) {
    const int p = pick(rng);
    x = p == 0 ? ~Exponent{0} - small(rng) : p == 1 ? Exponent{1} << 31 : small(rng);
  }
  return v;
}

struct Restore {
  Backend saved = active().backend;
  ~Restore() { select(saved); }
};

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(available(Backend::Scalar));
  CHECK(table(Backend::Scalar).backend == Backend::Scalar);
  CHECK(backend_name(Backend::Scalar) == "scalar");
}

TEST_CASE("unavailable backends are rejected") {
  for (Backend b : {Backend::Avx2, Backend::Neon})
    if (!available(b)) CHECK_THROWS_AS(table(b), std::invalid_argument);
}

TEST_CASE("select switches the active table") {
  Restore restore;
  select(Backend::Scalar);
  CHECK(active().backend == Backend::Scalar);
  for (Backend b : simd_backends()) {
    select(b);
    CHECK(active().backend == b);
  }
  select(best_available());
  CHECK(active().backend == best_available());
}

TEST_CASE("SIMD kernels match the scalar reference") {
  const auto backends = simd_backends();
  if (backends.empty()) {
    MESSAGE("no SIMD backend on this machine; scalar only");
    return;
  }
  const KernelTable& ref = scalar_table();
  std::mt19937 rng(12345);

  for (Backend b : backends) {
    const KernelTable& simd = table(b);
    CAPTURE(backend_name(b));
    for (int round = 0; round < 4000; ++round) {
      const std::size_t len = kLanes * (1 + static_cast<std::size_t>(round % 3));
      const auto a = random_lanes(rng, len);
      const auto c = random_lanes(rng, len);
      std::vector<Exponent> o1(len), o2(len);

      CHECK(ref.add(a.data(), c.data(), o1.data(), len) == simd.add(a.data(), c.data(), o2.data(), len));
      CHECK(o1 == o2);
      ref.min(a.data(), c.data(), o1.data(), len);
      simd.min(a.data(), c.data(), o2.data(), len);
      CHECK(o1 == o2);
      ref.max(a.data(), c.data(), o1.data(), len);
      simd.max(a.data(), c.data(), o2.data(), len);
      CHECK(o1 == o2);
      ref.sat_sub(a.data(), c.data(), o1.data(), len);
      simd.sat_sub(a.data(), c.data(), o2.data(), len);
      CHECK(o1 == o2);
      CHECK(ref.leq_all(a.data(), c.data(), len) == simd.leq_all(a.data(), c.data(), len));
      CHECK(ref.leq_all(a.data(), a.data(), len) == simd.leq_all(a.data(), a.data(), len));
      CHECK(ref.any_geq(a.data(), c.data(), len) == simd.any_geq(a.data(), c.data(), len));
    }
  }
}

TEST_CASE("SIMD row searches match the scalar reference") {
  const auto backends = simd_backends();
  if (backends.empty()) return;
  const KernelTable& ref = scalar_table();
  std::mt19937 rng(777);
  std::uniform_int_distribution<Exponent> tiny(0, 2);

  for (Backend b : backends) {
    const KernelTable& simd = table(b);
    for (int round = 0; round < 2000; ++round) {
      const std::size_t len = kLanes * (1 + static_cast<std::size_t>(round % 3));
      const std::size_t stride = len + kLanes * static_cast<std::size_t>(round % 2);
      const std::size_t count = static_cast<std::size_t>(round % 17);
      std::vector<Exponent> rows(stride * count + 1);
      for (auto& x : rows) x = tiny(rng);
      std::vector<Exponent> probe(len);
      for (auto& x : probe) x = tiny(rng) + 1;

      CHECK(ref.find_leq_row(rows.data(), stride, count, probe.data(), len) ==
            simd.find_leq_row(rows.data(), stride, count, probe.data(), len));
      CHECK(ref.find_geq_row(rows.data(), stride, count, probe.data(), len) ==
            simd.find_geq_row(rows.data(), stride, count, probe.data(), len));
    }
  }
}

TEST_CASE("scalar kernels on hand-checked vectors") {
  const KernelTable& k = scalar_table();
  std::array<Exponent, 8> a{1, 2, 3, 0, 0, 0, 0, 0};
  std::array<Exponent, 8> b{2, 2, 1, 0, 0, 0, 0, 5};
  std::array<Exponent, 8> out{};

  CHECK(k.add(a.data(), b.data(), out.data(), 8) == 5);
  CHECK(out == std::array<Exponent, 8>{3, 4, 4, 0, 0, 0, 0, 5});
  k.sat_sub(a.data(), b.data(), out.data(), 8);
  CHECK(out == std::array<Exponent, 8>{0, 0, 2, 0, 0, 0, 0, 0});
  CHECK_FALSE(k.leq_all(a.data(), b.data(), 8));
  CHECK(k.any_geq(a.data(), b.data(), 8));

  std::array<Exponent, 24> rows{};
  rows[0] = 3;              // row 0: (3, 0, ...)
  rows[8 + 1] = 1;          // row 1: (0, 1, ...)
  rows[16] = rows[17] = 9;  // row 2: (9, 9, ...)
  std::array<Exponent, 8> probe{1, 1, 0, 0, 0, 0, 0, 0};
  CHECK(k.find_leq_row(rows.data(), 8, 3, probe.data(), 8) == 1);
  CHECK(k.find_geq_row(rows.data(), 8, 3, probe.data(), 8) == 2);
  CHECK(k.find_leq_row(rows.data(), 8, 1, probe.data(), 8) == kNotFound);
}
