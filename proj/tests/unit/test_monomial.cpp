#include <random>
#include <vector>

#include "doctest.h"
#include "indpath/monomial.hpp"

using namespace indpath;

namespace {

Monomial m(std::string_view text, std::size_t nvars = 5) { return Monomial::parse(text, nvars); }

Monomial random_monomial(std::mt19937& rng, std::size_t nvars, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> d(0, max_exp);
  std::vector<Exponent> e(nvars);
  for (auto& x : e) x = d(rng);
  return Monomial::from_exponents(e);
}

}  // namespace

TEST_CASE("mul") {
  CHECK(mul(m("x1*x3"), m("x2")) == m("x1*x2*x3"));
  CHECK(mul(m("x2*x4"), Monomial(5)) == m("x2*x4"));
  CHECK(mul(m("x1"), m("x1")) == m("x1^2"));
}

TEST_CASE("divides") {
  CHECK(divides(m("x1*x3"), m("x1^2*x3*x5")));
  CHECK_FALSE(divides(m("x2"), m("x1*x3")));
  CHECK(divides(Monomial(5), m("x4^3")));
  CHECK(divides(Monomial(5), Monomial(5)));
}

TEST_CASE("gcd and lcm") {
  CHECK(gcd(m("x1*x3"), m("x1*x4")) == m("x1"));
  CHECK(lcm(m("x1*x3"), m("x1*x4")) == m("x1*x3*x4"));
  CHECK(gcd(m("x2^2*x5"), Monomial(5)) == Monomial(5));
}

TEST_CASE("quotient") {
  CHECK(quotient(m("x1*x4"), m("x4*x5")) == m("x1"));
  CHECK(quotient(m("x2^3*x3"), m("x2^3*x3")) == Monomial(5));
  CHECK(quotient(m("x1^2*x3"), m("x1")) == m("x1*x3"));
}

TEST_CASE("support, degree, squarefree part") {
  CHECK(m("x1^2*x3").support() == std::vector<int>{1, 3});
  CHECK(m("x1*x3*x5").degree() == 3);
  CHECK(m("x1^3*x2^2").squarefree_part() == m("x1*x2"));
  CHECK(Monomial(3).support().empty());
  CHECK(Monomial(3).is_one());
  CHECK(m("x2^4*x5").support_size() == 2);
}

TEST_CASE("text round trip") {
  for (const char* text : {"1", "x1", "x1*x3^2", "x2^7*x4*x5", "x1*x2*x3*x4*x5"}) {
    CAPTURE(text);
    CHECK(m(text).to_string() == text);
  }
  CHECK(Monomial::parse("x10^2*x12", 12).to_string() == "x10^2*x12");
  // ^1 is accepted and printed without the caret
  CHECK(m("x1^1*x2").to_string() == "x1*x2");
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "x0", "x6", "x2*x1", "x1*x1", "x1^0", "x1^", "x1**x2", "y1", "x1*", "2", "x1^-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Monomial::parse(bad, 5), ParseError);
  }
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(mul(Monomial(3), Monomial(4)), DimensionMismatch);
  CHECK_THROWS_AS(divides(Monomial(3), Monomial(4)), DimensionMismatch);
  CHECK_THROWS(Monomial(0));
  CHECK_THROWS(Monomial(kMaxVars + 1));
  CHECK_THROWS(Monomial::variable(3, 4));
  CHECK_THROWS(m("x1").exponent(6));
}

TEST_CASE("exponent cap fails loudly") {
  const Monomial big = Monomial::variable(2, 1, kMaxExponent);
  CHECK_THROWS_AS(mul(big, Monomial::variable(2, 1)), ExponentOverflow);
  CHECK_THROWS_AS(Monomial::variable(2, 1, kMaxExponent + 1), ExponentOverflow);
  CHECK_NOTHROW(mul(big, Monomial::variable(2, 2)));
}

TEST_CASE("padding lanes stay zero") {
  const Monomial a = m("x1^2*x5");
  for (std::size_t i = a.nvars(); i < a.lanes().size(); ++i) CHECK(a.lanes()[i] == 0);
  CHECK(a.lanes().size() % kernels::kLanes == 0);
}

TEST_CASE("canonical order: degree first") {
  CHECK(canonical_less(m("x5"), m("x1*x2")));
  CHECK(canonical_less(m("x1*x3"), m("x1*x4")));
  CHECK(canonical_less(m("x1*x4"), m("x2*x3")));
  CHECK_FALSE(canonical_less(m("x1*x3"), m("x1*x3")));
}

TEST_CASE("algebraic laws on random monomials") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 3000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 9);
    const Monomial a = random_monomial(rng, n, 3);
    const Monomial b = random_monomial(rng, n, 3);
    const Monomial c = random_monomial(rng, n, 3);
    const Monomial one(n);

    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, one) == a);
    CHECK(quotient(mul(a, b), b) == a);
    CHECK(lcm(a, gcd(a, b)) == a);
    CHECK(gcd(a, lcm(a, b)) == a);

    const bool d = divides(a, b);
    CHECK(d == (lcm(a, b) == b));
    CHECK(d == (gcd(a, b) == a));
    CHECK(d == quotient(a, b).is_one());

    CHECK(mul(a, b).degree() == a.degree() + b.degree());
    CHECK(Monomial::parse(a.to_string(), n) == a);
    if (a == b) CHECK(a.hash() == b.hash());
    CHECK((canonical_less(a, b) || canonical_less(b, a) || a == b));
  }
}
