#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indpath/kernels.hpp"

namespace indpath {

using Exponent = kernels::Exponent;

/// Largest number of variables a monomial can carry. Exponent storage is
/// inline so that generator lists are contiguous rows for the batch kernels.
inline constexpr std::size_t kMaxVars = 24;

/// Exponent cap. Every constructor and arithmetic result is checked against it.
inline constexpr Exponent kMaxExponent = Exponent{1} << 24;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of kernel lanes needed for nvars variables.
constexpr std::size_t padded_lanes(std::size_t nvars) {
  return (nvars + kernels::kLanes - 1) / kernels::kLanes * kernels::kLanes;
}

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector.
///
/// Variables are addressed with 1-based indices in the public interface.
/// Lanes past nvars are always zero, which keeps the kernels and defaulted
/// comparison honest.
class Monomial {
 public:
  /// The unit monomial 1 in nvars variables.
  explicit Monomial(std::size_t nvars);

  /// exps[i] is the exponent of x_{i+1}.
  static Monomial from_exponents(std::span<const Exponent> exps);

  /// x_var^exp in nvars variables.
  static Monomial variable(std::size_t nvars, int var, Exponent exp = 1);

  /// x^F: the squarefree monomial with support F (1-based indices).
  static Monomial from_support(std::size_t nvars, std::span<const int> vars);

  /// Parses `1` or `x<i>(^<e>)?(*x<j>(^<e>)?)*` with strictly increasing indices.
  static Monomial parse(std::string_view text, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  Exponent exponent(int var) const;
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  std::vector<int> support() const;
  std::uint32_t support_size() const;
  Monomial squarefree_part() const;

  /// Canonical text, e.g. `x1*x3^2`, or `1`.
  std::string to_string() const;

  /// Padded exponent lanes for the kernels.
  std::span<const Exponent> lanes() const { return {exps_.data(), padded_lanes(nvars_)}; }
  const Exponent* data() const { return exps_.data(); }

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  friend Monomial mul(const Monomial&, const Monomial&);
  friend Monomial gcd(const Monomial&, const Monomial&);
  friend Monomial lcm(const Monomial&, const Monomial&);
  friend Monomial quotient(const Monomial&, const Monomial&);

  void refresh_degree();

  alignas(32) std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// Row stride, in exponents, of a contiguous array of monomials.
inline constexpr std::size_t kMonomialStride = sizeof(Monomial) / sizeof(Exponent);

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// a / gcd(a, b), written `a : b`.
Monomial quotient(const Monomial& a, const Monomial& b);

/// Canonical order: degree ascending, then lexicographic with x_1 > x_2 > ...
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

void check_same_nvars(std::size_t a, std::size_t b);

}  // namespace indpath
