#include "indpath/monomial.hpp"

#include <charconv>

namespace indpath {
namespace {

void check_nvars(std::size_t nvars) {
  if (nvars == 0 || nvars > kMaxVars)
    throw std::invalid_argument("nvars must be in [1, " + std::to_string(kMaxVars) + "], got " +
                                std::to_string(nvars));
}

void check_var(std::size_t nvars, int var) {
  if (var < 1 || static_cast<std::size_t>(var) > nvars)
    throw std::out_of_range("variable index x" + std::to_string(var) + " outside [1, " +
                            std::to_string(nvars) + "]");
}

void check_exponent(std::uint64_t e) {
  if (e > kMaxExponent)
    throw ExponentOverflow("exponent " + std::to_string(e) + " exceeds cap " +
                           std::to_string(kMaxExponent));
}

}  // namespace

void check_same_nvars(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b) + " variables");
}

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint32_t>(nvars)) {
  check_nvars(nvars);
}

Monomial Monomial::from_exponents(std::span<const Exponent> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    check_exponent(exps[i]);
    m.exps_[i] = exps[i];
  }
  m.refresh_degree();
  return m;
}

Monomial Monomial::variable(std::size_t nvars, int var, Exponent exp) {
  Monomial m(nvars);
  check_var(nvars, var);
  check_exponent(exp);
  m.exps_[var - 1] = exp;
  m.degree_ = exp;
  return m;
}

Monomial Monomial::from_support(std::size_t nvars, std::span<const int> vars) {
  Monomial m(nvars);
  for (int v : vars) {
    check_var(nvars, v);
    m.exps_[v - 1] = 1;
  }
  m.refresh_degree();
  return m;
}

Monomial Monomial::parse(std::string_view text, std::size_t nvars) {
  Monomial m(nvars);
  if (text == "1") return m;
  if (text.empty()) throw ParseError("empty monomial text");

  auto fail = [&](const std::string& why) {
    throw ParseError("bad monomial '" + std::string(text) + "': " + why);
  };
  auto read_number = [&](std::size_t& pos) -> std::uint64_t {
    std::uint64_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected a number");
    pos += static_cast<std::size_t>(ptr - first);
    return value;
  };

  std::size_t pos = 0;
  int previous = 0;
  while (true) {
    if (pos >= text.size() || text[pos] != 'x') fail("expected 'x'");
    ++pos;
    const std::uint64_t var = read_number(pos);
    if (var < 1 || var > nvars) fail("variable index out of range");
    if (static_cast<int>(var) <= previous) fail("indices must be strictly increasing");
    previous = static_cast<int>(var);
    std::uint64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = read_number(pos);
      if (exp == 0) fail("zero exponent");
      check_exponent(exp);
    }
    m.exps_[var - 1] = static_cast<Exponent>(exp);
    if (pos == text.size()) break;
    if (text[pos] != '*') fail("expected '*'");
    ++pos;
  }
  m.refresh_degree();
  return m;
}

Exponent Monomial::exponent(int var) const {
  check_var(nvars_, var);
  return exps_[var - 1];
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > 0) out.push_back(static_cast<int>(i + 1));
  return out;
}

std::uint32_t Monomial::support_size() const {
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < nvars_; ++i) count += exps_[i] > 0 ? 1 : 0;
  return count;
}

Monomial Monomial::squarefree_part() const {
  Monomial m(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) m.exps_[i] = exps_[i] > 0 ? 1 : 0;
  m.refresh_degree();
  return m;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void Monomial::refresh_degree() {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += exps_[i];
  degree_ = static_cast<std::uint32_t>(d);
}

Monomial mul(const Monomial& a, const Monomial& b) {
  check_same_nvars(a.nvars(), b.nvars());
  Monomial out(a.nvars());
  const Exponent top =
      kernels::active().add(a.data(), b.data(), out.exps_.data(), padded_lanes(a.nvars()));
  check_exponent(top);
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_nvars(a.nvars(), b.nvars());
  if (a.degree() > b.degree()) return false;
  return kernels::active().leq_all(a.data(), b.data(), padded_lanes(a.nvars()));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_nvars(a.nvars(), b.nvars());
  Monomial out(a.nvars());
  kernels::active().min(a.data(), b.data(), out.exps_.data(), padded_lanes(a.nvars()));
  out.refresh_degree();
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_nvars(a.nvars(), b.nvars());
  Monomial out(a.nvars());
  kernels::active().max(a.data(), b.data(), out.exps_.data(), padded_lanes(a.nvars()));
  out.refresh_degree();
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  check_same_nvars(a.nvars(), b.nvars());
  Monomial out(a.nvars());
  kernels::active().sat_sub(a.data(), b.data(), out.exps_.data(), padded_lanes(a.nvars()));
  out.refresh_degree();
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  const Exponent* x = a.data();
  const Exponent* y = b.data();
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (x[i] != y[i]) return x[i] > y[i];
  return false;
}

}  // namespace indpath
