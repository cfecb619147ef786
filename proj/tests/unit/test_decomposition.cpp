#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "indpath/decomposition.hpp"
#include "support/oracles.hpp"

using namespace indpath;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<std::string> gens) { return MonomialIdeal::parse(n, gens); }
Monomial m(std::string_view text, std::size_t n) { return Monomial::parse(text, n); }

IrreducibleComponent comp(std::size_t n, std::vector<std::pair<int, Exponent>> powers) {
  return IrreducibleComponent(n, powers);
}

VarPrime prime(std::size_t n, std::vector<int> vars) { return VarPrime(n, std::move(vars)); }

std::set<std::string> texts(const Components& cs) {
  std::set<std::string> out;
  for (const auto& q : cs) out.insert(q.to_string());
  return out;
}

std::set<std::vector<int>> var_sets(const std::vector<VarPrime>& ps) {
  std::set<std::vector<int>> out;
  for (const auto& p : ps) out.insert(p.vars());
  return out;
}

const MonomialIdeal kP4 = ideal(4, {"x1*x3", "x1*x4", "x2*x4"});
const MonomialIdeal kP5 = ideal(5, {"x1*x3", "x1*x4", "x1*x5", "x2*x4", "x2*x5", "x3*x5"});

void check_irredundant(const Components& cs, const MonomialIdeal& I) {
  REQUIRE_FALSE(cs.empty());
  CHECK(intersect_all(cs) == I);
  if (cs.size() == 1) return;
  for (std::size_t skip = 0; skip < cs.size(); ++skip) {
    Components rest;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (j != skip) rest.push_back(cs[j]);
    CHECK(intersect_all(rest) != I);
  }
}

}  // namespace

TEST_CASE("VarPrime") {
  CHECK(prime(5, {1, 3}).to_string() == "(x1, x3)");
  CHECK(prime(5, {1, 3}).to_ideal() == ideal(5, {"x1", "x3"}));
  CHECK(prime(5, {2}) < prime(5, {1, 3}));
  CHECK(prime(5, {1, 3}) < prime(5, {1, 4}));
  CHECK_THROWS(prime(5, {}));
  CHECK_THROWS(prime(5, {3, 1}));
  CHECK_THROWS(prime(5, {6}));
  CHECK_THROWS(prime(5, {0}));
}

TEST_CASE("IrreducibleComponent") {
  const auto q = comp(4, {{1, 2}, {4, 1}});
  CHECK(q.to_string() == "(x1^2, x4)");
  CHECK(q.generator_strings() == std::vector<std::string>{"x1^2", "x4^1"});
  CHECK(q.power_of(1) == 2);
  CHECK(q.power_of(2) == 0);
  CHECK(q.support_size() == 2);
  CHECK(q.radical() == prime(4, {1, 4}));
  CHECK(q.to_ideal() == ideal(4, {"x1^2", "x4"}));
  CHECK(q.contains(m("x1^3", 4)));
  CHECK_FALSE(q.contains(m("x1*x2^5*x3^5", 4)));

  // (x1^2, x4) ⊆ (x1, x4) ⊆ (x1, x2, x4)
  CHECK(comp(4, {{1, 1}, {4, 1}}).contains(q));
  CHECK(comp(4, {{1, 1}, {2, 1}, {4, 1}}).contains(comp(4, {{1, 1}, {4, 1}})));
  CHECK_FALSE(q.contains(comp(4, {{1, 1}, {4, 1}})));
  CHECK(IrreducibleComponent::from_pure_powers(ideal(4, {"x2^3", "x3"})) == comp(4, {{2, 3}, {3, 1}}));
  CHECK_THROWS(IrreducibleComponent::from_pure_powers(kP4));
  CHECK_THROWS(comp(4, {}));
  CHECK_THROWS(comp(4, {{5, 1}}));
  CHECK_THROWS(comp(4, {{1, 0}}));
}

TEST_CASE("decomposition examples") {
  CHECK(texts(irreducible_decomposition(kP4)) == std::set<std::string>{"(x1, x2)", "(x1, x4)", "(x3, x4)"});
  CHECK(texts(irreducible_decomposition(ideal(3, {"x1^2*x3^2"}))) == std::set<std::string>{"(x1^2)", "(x3^2)"});
  CHECK(texts(irreducible_decomposition(kP5)) ==
        std::set<std::string>{"(x1, x2, x3)", "(x1, x2, x5)", "(x1, x4, x5)", "(x3, x4, x5)"});
  CHECK_THROWS(irreducible_decomposition(MonomialIdeal(3)));
}

TEST_CASE("square of Ind_2(P_4) has the six two-variable components") {
  const MonomialIdeal sq = power(kP4, 2);
  const Components cs = irreducible_decomposition(sq);
  Components expected;
  for (auto [i, j] : {std::pair{1, 2}, {1, 4}, {3, 4}})
    for (Exponent r = 1; r <= 2; ++r) expected.push_back(comp(4, {{i, r}, {j, 3 - r}}));
  CHECK(texts(cs) == texts(expected));
  CHECK(intersect_all(expected) == sq);
}

TEST_CASE("irredundant_filter") {
  const MonomialIdeal x1 = ideal(2, {"x1"});
  const Components pair{comp(2, {{1, 1}}), comp(2, {{1, 1}, {2, 1}})};
  CHECK(irredundant_filter(pair, x1) == Components{comp(2, {{1, 1}})});

  const Components clean = irreducible_decomposition(kP4);
  CHECK(irredundant_filter(clean, kP4) == clean);

  // duplicates and a redundant superset of a decomposition of Ind_2(P_5)
  Components noisy = irreducible_decomposition(kP5);
  noisy.push_back(noisy.front());
  noisy.push_back(comp(5, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}));
  noisy.push_back(comp(5, {{1, 1}, {2, 1}, {4, 2}, {5, 1}}));
  CHECK(texts(irredundant_filter(noisy, kP5)) ==
        std::set<std::string>{"(x1, x2, x3)", "(x1, x2, x5)", "(x1, x4, x5)", "(x3, x4, x5)"});
}

TEST_CASE("associated primes examples") {
  CHECK(associated_primes(ideal(5, {"x1*x3*x5"})) ==
        std::vector<VarPrime>{prime(5, {1}), prime(5, {3}), prime(5, {5})});
  CHECK(associated_primes(kP4) == std::vector<VarPrime>{prime(4, {1, 2}), prime(4, {1, 4}), prime(4, {3, 4})});
  const auto sq = associated_primes(power(kP5, 2));
  CHECK(var_sets(sq) ==
        std::set<std::vector<int>>{{1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {3, 4, 5}, {1, 2, 3, 4, 5}});
  CHECK_THROWS(associated_primes(MonomialIdeal(2)));
}

TEST_CASE("verify_witness") {
  CHECK(verify_witness(kP5, 1, m("x4*x5", 5), prime(5, {1, 2, 3})).ok());
  CHECK(verify_witness(kP5, 2, m("x1*x3*x5", 5), prime(5, {1, 2, 3, 4, 5})).ok());

  const auto in_power = verify_witness(kP5, 1, m("x1*x3", 5), prime(5, {1}));
  CHECK(in_power.reason == WitnessReason::InPower);
  CHECK(reason_code(in_power.reason) == "u in I^k");
  CHECK_FALSE(in_power.colon.has_value());

  // I:x4x5 = (x1, x2, x3) is strictly bigger than (x1, x2)
  const auto big = verify_witness(kP5, 1, m("x4*x5", 5), prime(5, {1, 2}));
  CHECK(big.reason == WitnessReason::ColonTooBig);
  CHECK(reason_code(big.reason) == "colon too big");

  // I:1 = I is not (x1, x2, x3)
  const auto small = verify_witness(kP5, 1, Monomial(5), prime(5, {1, 2, 3}));
  CHECK(small.reason == WitnessReason::ColonTooSmall);
  CHECK(reason_code(small.reason) == "colon too small");
  CHECK(*small.colon == kP5);

  CHECK_THROWS(verify_witness(kP5, 0, Monomial(5), prime(5, {1})));
}

TEST_CASE("minimal_primes_squarefree") {
  CHECK(var_sets(minimal_primes_squarefree(kP4)) == std::set<std::vector<int>>{{1, 2}, {1, 4}, {3, 4}});
  CHECK(var_sets(minimal_primes_squarefree(ideal(5, {"x1*x3*x5"}))) == std::set<std::vector<int>>{{1}, {3}, {5}});
  CHECK(var_sets(minimal_primes_squarefree(kP5)) ==
        std::set<std::vector<int>>{{1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {3, 4, 5}});
  CHECK_THROWS(minimal_primes_squarefree(ideal(3, {"x1^2"})));
  CHECK_THROWS(minimal_primes_squarefree(MonomialIdeal(3)));
}

TEST_CASE("random squarefree ideals: Ass equals minimal covers") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(round % 5);
    const auto gens = oracle::random_gens(rng, n, 1 + static_cast<std::size_t>(rng() % 6), 1);
    const MonomialIdeal I = oracle::to_ideal(n, gens);
    std::vector<std::uint32_t> edges;
    for (const auto& g : I.gens()) {
      std::uint32_t mask = 0;
      for (int v : g.support()) mask |= 1u << (v - 1);
      edges.push_back(mask);
    }
    const auto covers = oracle::minimal_covers(static_cast<int>(n), edges);
    CHECK(var_sets(associated_primes(I)) == covers);
    CHECK(var_sets(minimal_primes_squarefree(I)) == covers);
  }
}

TEST_CASE("random ideals: roundtrip, irredundancy and Ass by exhaustive colons") {
  std::mt19937_64 rng(8675309);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 1 + static_cast<std::size_t>(round % 5);
    const auto gens = oracle::random_gens(rng, n, 1 + static_cast<std::size_t>(rng() % 5), 3);
    const MonomialIdeal I = oracle::to_ideal(n, gens);
    CAPTURE(I.to_string());
    const Components cs = irreducible_decomposition(I);
    check_irredundant(cs, I);
    CHECK(var_sets(radicals_of(cs)) == oracle::ass_by_colons(oracle::gens_of(I)));
    CHECK(std::is_sorted(cs.begin(), cs.end()));
  }
}

TEST_CASE("powers of small path ideals: Ass by exhaustive colons") {
  for (auto [I, kmax] : {std::pair{kP4, 3}, {kP5, 2}}) {
    for (int k = 1; k <= kmax; ++k) {
      const MonomialIdeal Ik = power(I, k);
      CAPTURE(k);
      CHECK(var_sets(associated_primes(Ik)) == oracle::ass_by_colons(oracle::gens_of(Ik)));
      check_irredundant(irreducible_decomposition(Ik), Ik);
    }
  }
}

TEST_CASE("every decomposition prime has a witness, found by bounded search") {
  const MonomialIdeal sq = power(kP5, 2);
  const auto gens = oracle::gens_of(sq);
  for (const VarPrime& p : associated_primes(sq)) {
    CAPTURE(p.to_string());
    CHECK(oracle::witness_exists(gens, p.vars(), 2));
  }
}

TEST_CASE("cache: hits, LRU eviction and tiny capacities") {
  auto cache = std::make_shared<DecompositionCache>(4);
  DecompositionOptions opts{cache, std::nullopt};
  const Components first = irreducible_decomposition(power(kP5, 2), opts);
  CHECK(cache->size() <= 4);
  CHECK(cache->misses() > 0);
  const std::size_t hits_before = cache->hits();
  CHECK(irreducible_decomposition(power(kP5, 2), opts) == first);
  CHECK(cache->hits() > hits_before);

  auto one = std::make_shared<DecompositionCache>(1);
  CHECK(irreducible_decomposition(power(kP5, 2), DecompositionOptions{one, std::nullopt}) == first);
  CHECK(one->size() == 1);
  one->clear();
  CHECK(one->size() == 0);
  CHECK_THROWS(DecompositionCache(0));
}

TEST_CASE("cache: least recently used entry is evicted first") {
  DecompositionCache cache(2);
  const MonomialIdeal a = ideal(3, {"x1"});
  const MonomialIdeal b = ideal(3, {"x2"});
  const MonomialIdeal c = ideal(3, {"x3"});
  auto value = [](const MonomialIdeal& I) {
    return std::make_shared<const Components>(Components{IrreducibleComponent::from_pure_powers(I)});
  };
  cache.insert(a, value(a));
  cache.insert(b, value(b));
  CHECK(cache.find(a) != nullptr);  // a is now the most recent
  cache.insert(c, value(c));
  CHECK(cache.find(b) == nullptr);
  CHECK(*cache.find(a) == *value(a));
  CHECK(*cache.find(c) == *value(c));
}

TEST_CASE("cache: exponents that need the wide encoding") {
  auto cache = std::make_shared<DecompositionCache>();
  const MonomialIdeal I = ideal(3, {"x1^300*x2", "x2^2*x3^1000"});
  const Components direct = irreducible_decomposition(I);
  const Components cached = irreducible_decomposition(I, DecompositionOptions{cache, std::nullopt});
  CHECK(direct == cached);
  CHECK(irreducible_decomposition(I, DecompositionOptions{cache, std::nullopt}) == direct);
  check_irredundant(direct, I);
}

TEST_CASE("shared cache across threads gives identical results") {
  auto cache = std::make_shared<DecompositionCache>(64);
  const MonomialIdeal I = power(kP5, 3);
  const Components reference = irreducible_decomposition(I);
  std::vector<Components> results(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < results.size(); ++i)
      pool.emplace_back([&, i] { results[i] = irreducible_decomposition(I, DecompositionOptions{cache, std::nullopt}); });
  }
  for (const auto& r : results) CHECK(r == reference);
}

TEST_CASE("results do not depend on the kernel backend") {
  const kernels::Backend saved = kernels::active().backend;
  const MonomialIdeal I = power(kP5, 2);
  const Components fast = irreducible_decomposition(I);
  kernels::select(kernels::Backend::Scalar);
  const Components scalar = irreducible_decomposition(I);
  kernels::select(saved);
  CHECK(fast == scalar);
}

TEST_CASE("budget breach raises BudgetExceeded") {
  DecompositionOptions opts;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(irreducible_decomposition(power(kP5, 2), opts), BudgetExceeded);
}
