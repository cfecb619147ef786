#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indpath/monomial.hpp"

namespace indpath {

/// Raised when a result would be the whole ring, which MonomialIdeal does not
/// represent.
class UnitIdeal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A monomial ideal held as its unique minimal generating set, sorted in
/// canonical order (see canonical_less). Empty generator list is the zero
/// ideal; the unit ideal is not representable.
class MonomialIdeal {
 public:
  /// The zero ideal.
  explicit MonomialIdeal(std::size_t nvars);

  /// Drops non-minimal and duplicate generators and sorts the rest.
  /// Throws UnitIdeal if the unit monomial is among the inputs.
  static MonomialIdeal minimize(std::size_t nvars, std::vector<Monomial> gens);

  /// Generators given as canonical monomial strings.
  static MonomialIdeal parse(std::size_t nvars, std::span<const std::string> gens);

  std::size_t nvars() const { return nvars_; }
  std::span<const Monomial> gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_squarefree() const;
  bool is_generated_by_pure_powers() const;

  bool contains(const Monomial& m) const;

  /// `(x1*x3, x2*x4)`; the zero ideal prints as `(0)`.
  std::string to_string() const;
  std::vector<std::string> gen_strings() const;

  std::size_t hash() const;
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal add_generator(const MonomialIdeal& I, const Monomial& m);

 private:
  struct Canonical {};
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> sorted_minimal, Canonical)
      : nvars_(nvars), gens_(std::move(sorted_minimal)) {}

  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

struct IdealHash {
  std::size_t operator()(const MonomialIdeal& I) const { return I.hash(); }
};

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
/// I + (m) in one linear pass.
MonomialIdeal add_generator(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^k for k >= 1, multiplying by I and minimizing after every step.
MonomialIdeal power(const MonomialIdeal& I, int k);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// I : u. Throws UnitIdeal when u is in I.
MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& u);
/// I : u, or nullopt when the colon is the unit ideal.
std::optional<MonomialIdeal> try_colon_monomial(const MonomialIdeal& I, const Monomial& u);

/// I : J as the intersection of I : v over the generators v of J.
/// J must be nonzero; throws UnitIdeal when J is contained in I.
MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal radical(const MonomialIdeal& I);

bool equals(const MonomialIdeal& I, const MonomialIdeal& J);
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

/// The ideal generated by the variables with the given 1-based indices.
MonomialIdeal variable_ideal(std::size_t nvars, std::span<const int> vars);

}  // namespace indpath
