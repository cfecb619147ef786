#include <algorithm>

#include "indpath/kernels.hpp"

namespace indpath::kernels {
namespace {

Exponent add_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  Exponent top = 0;
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = a[i] + b[i];
    top = std::max(top, out[i]);
  }
  return top;
}

void min_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = std::min(a[i], b[i]);
}

void max_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = std::max(a[i], b[i]);
}

void sat_sub_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = a[i] > b[i] ? a[i] - b[i] : 0;
}

bool leq_all_scalar(const Exponent* a, const Exponent* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool any_geq_scalar(const Exponent* a, const Exponent* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (a[i] >= b[i]) return true;
  return false;
}

std::size_t find_leq_row_scalar(const Exponent* rows, std::size_t stride, std::size_t count,
                                const Exponent* probe, std::size_t len) {
  for (std::size_t r = 0; r < count; ++r)
    if (leq_all_scalar(rows + r * stride, probe, len)) return r;
  return kNotFound;
}

std::size_t find_geq_row_scalar(const Exponent* rows, std::size_t stride, std::size_t count,
                                const Exponent* probe, std::size_t len) {
  for (std::size_t r = 0; r < count; ++r)
    if (leq_all_scalar(probe, rows + r * stride, len)) return r;
  return kNotFound;
}

}  // namespace

const KernelTable& scalar_table() {
  static constexpr KernelTable table{
      Backend::Scalar,  add_scalar,     min_scalar,          max_scalar,         sat_sub_scalar,
      leq_all_scalar,   any_geq_scalar, find_leq_row_scalar, find_geq_row_scalar,
  };
  return table;
}

}  // namespace indpath::kernels
