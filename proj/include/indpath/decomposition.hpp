#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "indpath/ideal.hpp"

namespace indpath {

/// The prime ideal generated by a non-empty set of variables.
class VarPrime {
 public:
  /// vars: strictly increasing 1-based indices within [1, nvars].
  VarPrime(std::size_t nvars, std::vector<int> vars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<int>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool contains_var(int v) const;

  MonomialIdeal to_ideal() const;
  /// `(x1, x3)`
  std::string to_string() const;

  friend bool operator==(const VarPrime&, const VarPrime&) = default;
  /// Smaller primes first, then lexicographic on indices.
  friend std::strong_ordering operator<=>(const VarPrime& a, const VarPrime& b);

 private:
  std::size_t nvars_;
  std::vector<int> vars_;
};

/// An irreducible monomial ideal (x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}).
///
/// Lanes for variables outside the support (and padding lanes) hold kAbsent,
/// so Q' ⊆ Q is exactly lanes(Q) <= lanes(Q') and the divisibility kernels
/// apply unchanged.
class IrreducibleComponent {
 public:
  static constexpr Exponent kAbsent = ~Exponent{0};

  /// powers: (variable, exponent >= 1) pairs; must be non-empty.
  IrreducibleComponent(std::size_t nvars, std::span<const std::pair<int, Exponent>> powers);

  /// Requires every generator of I to be a pure power.
  static IrreducibleComponent from_pure_powers(const MonomialIdeal& I);

  std::size_t nvars() const { return nvars_; }
  /// 0 when the variable is not in the support.
  Exponent power_of(int var) const;
  std::vector<std::pair<int, Exponent>> powers() const;
  std::size_t support_size() const;

  VarPrime radical() const;
  MonomialIdeal to_ideal() const;
  /// other ⊆ *this
  bool contains(const IrreducibleComponent& other) const;
  bool contains(const Monomial& m) const;

  /// `x<i>^<e>` for every generator, increasing index.
  std::vector<std::string> generator_strings() const;
  /// `(x1^2, x4)`
  std::string to_string() const;

  const Exponent* data() const { return lanes_.data(); }

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend std::strong_ordering operator<=>(const IrreducibleComponent& a,
                                          const IrreducibleComponent& b);

 private:
  alignas(32) std::array<Exponent, kMaxVars> lanes_;
  std::uint32_t nvars_ = 0;
};

inline constexpr std::size_t kComponentStride = sizeof(IrreducibleComponent) / sizeof(Exponent);

using Components = std::vector<IrreducibleComponent>;

/// Thrown when a decomposition runs past its deadline.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memo table for the splitting recursion, keyed on the canonical ideal.
/// Least-recently-used entries are evicted once `capacity` entries are held.
/// Keys and values are stored packed, one byte per exponent when they fit.
/// Safe to share between threads; insertion is insert-or-get.
class DecompositionCache {
 public:
  explicit DecompositionCache(std::size_t capacity = 1 << 17);

  std::shared_ptr<const Components> find(const MonomialIdeal& key);
  /// Returns the stored value, which is the existing one if key was present.
  std::shared_ptr<const Components> insert(const MonomialIdeal& key,
                                           std::shared_ptr<const Components> value);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }
  std::size_t hits() const;
  std::size_t misses() const;
  void clear();

 private:
  using Order = std::list<const std::string*>;
  struct Entry {
    std::string value;
    Order::iterator position;
  };

  void touch(Entry& e);

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Entry> map_;
  Order order_;  // front = most recent
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

struct DecompositionOptions {
  /// Shared memo table; a private one of default capacity is used when null.
  std::shared_ptr<DecompositionCache> cache;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Irredundant irreducible decomposition, sorted canonically. I must be nonzero.
Components irreducible_decomposition(const MonomialIdeal& I,
                                     const DecompositionOptions& options = {});

/// Drops every component that contains another one, then every component
/// whose removal leaves the intersection equal to I. Output sorted.
Components irredundant_filter(Components components, const MonomialIdeal& I);

/// Intersection of all components (the zero ideal's complement case never
/// arises since components are non-empty).
MonomialIdeal intersect_all(std::span<const IrreducibleComponent> components);

std::vector<VarPrime> associated_primes(const MonomialIdeal& I,
                                        const DecompositionOptions& options = {});
/// Distinct radicals of the given (irredundant) components, sorted.
std::vector<VarPrime> radicals_of(std::span<const IrreducibleComponent> components);

enum class WitnessReason { Ok, InPower, ColonTooBig, ColonTooSmall };

std::string_view reason_code(WitnessReason r);

struct WitnessResult {
  WitnessReason reason = WitnessReason::Ok;
  /// I^k : u when u is not in I^k.
  std::optional<MonomialIdeal> colon;

  bool ok() const { return reason == WitnessReason::Ok; }
};

/// Checks u ∉ I^k and I^k : u == P.
WitnessResult verify_witness(const MonomialIdeal& I, int k, const Monomial& u, const VarPrime& P);
/// Same check against an already computed power.
WitnessResult verify_witness_in(const MonomialIdeal& power_ideal, const Monomial& u,
                                const VarPrime& P);

/// Minimal vertex covers of the support hypergraph of a squarefree ideal,
/// by exhaustive subset search. Limited to 20 variables.
std::vector<VarPrime> minimal_primes_squarefree(const MonomialIdeal& I);

}  // namespace indpath
