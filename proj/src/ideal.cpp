#include "indpath/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace indpath {
namespace {

// First generator dividing m among gens[0, count), or kNotFound.
std::size_t find_divisor(std::span<const Monomial> gens, std::size_t count, const Monomial& m) {
  if (count == 0) return kernels::kNotFound;
  return kernels::active().find_leq_row(gens.front().data(), kMonomialStride, count, m.data(),
                                        padded_lanes(m.nvars()));
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0 || nvars > kMaxVars)
    throw std::invalid_argument("nvars must be in [1, " + std::to_string(kMaxVars) + "]");
}

MonomialIdeal MonomialIdeal::minimize(std::size_t nvars, std::vector<Monomial> gens) {
  MonomialIdeal zero(nvars);
  if (gens.empty()) return zero;
  for (const Monomial& g : gens) {
    check_same_nvars(nvars, g.nvars());
    if (g.is_one()) throw UnitIdeal("generating set contains the unit monomial");
  }

  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Sorted by degree, so only already-kept generators of strictly smaller
  // degree can divide the candidate; equal degree divisibility means equality.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  std::size_t lower = 0;
  std::uint32_t current_degree = gens.front().degree();
  for (Monomial& g : gens) {
    if (g.degree() != current_degree) {
      current_degree = g.degree();
      lower = kept.size();
    }
    if (find_divisor(kept, lower, g) == kernels::kNotFound) kept.push_back(std::move(g));
  }
  return MonomialIdeal(nvars, std::move(kept), Canonical{});
}

MonomialIdeal MonomialIdeal::parse(std::size_t nvars, std::span<const std::string> gens) {
  std::vector<Monomial> ms;
  ms.reserve(gens.size());
  for (const std::string& s : gens) ms.push_back(Monomial::parse(s, nvars));
  return minimize(nvars, std::move(ms));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.degree() == g.support_size(); });
}

bool MonomialIdeal::is_generated_by_pure_powers() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.support_size() == 1; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  check_same_nvars(nvars_, m.nvars());
  const auto upper =
      std::upper_bound(gens_.begin(), gens_.end(), m.degree(),
                       [](std::uint32_t d, const Monomial& g) { return d < g.degree(); });
  const auto count = static_cast<std::size_t>(upper - gens_.begin());
  return find_divisor(gens_, count, m) != kernels::kNotFound;
}

std::vector<std::string> MonomialIdeal::gen_strings() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const Monomial& g : gens_) out.push_back(g.to_string());
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  out += ')';
  return out;
}

std::size_t MonomialIdeal::hash() const {
  std::size_t h = nvars_ * 0x100000001B3ull;
  for (const Monomial& g : gens_) h = (h ^ g.hash()) * 0x100000001B3ull;
  return h;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_nvars(I.nvars(), J.nvars());
  if (J.is_zero()) return I;
  if (I.is_zero()) return J;
  if (J.size() == 1) return add_generator(I, J.gens().front());
  std::vector<Monomial> all(I.gens().begin(), I.gens().end());
  all.insert(all.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::minimize(I.nvars(), std::move(all));
}

MonomialIdeal add_generator(const MonomialIdeal& I, const Monomial& m) {
  check_same_nvars(I.nvars(), m.nvars());
  if (m.is_one()) throw UnitIdeal("generating set contains the unit monomial");
  if (I.contains(m)) return I;
  const auto& k = kernels::active();
  const std::size_t len = padded_lanes(m.nvars());
  std::vector<Monomial> gens;
  gens.reserve(I.size() + 1);
  bool placed = false;
  for (const Monomial& g : I.gens()) {
    if (!placed && canonical_less(m, g)) {
      gens.push_back(m);
      placed = true;
    }
    if (g.degree() < m.degree() || !k.leq_all(m.data(), g.data(), len)) gens.push_back(g);
  }
  if (!placed) gens.push_back(m);
  return MonomialIdeal(I.nvars(), std::move(gens), MonomialIdeal::Canonical{});
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_nvars(I.nvars(), J.nvars());
  std::unordered_set<Monomial, MonomialHash> products;
  products.reserve(I.size() * J.size());
  for (const Monomial& u : I.gens())
    for (const Monomial& v : J.gens()) products.insert(mul(u, v));
  return MonomialIdeal::minimize(I.nvars(), {products.begin(), products.end()});
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  MonomialIdeal result = I;
  for (int step = 1; step < k; ++step) result = product(result, I);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_nvars(I.nvars(), J.nvars());
  std::unordered_set<Monomial, MonomialHash> lcms;
  lcms.reserve(I.size() * J.size());
  for (const Monomial& u : I.gens())
    for (const Monomial& v : J.gens()) lcms.insert(lcm(u, v));
  return MonomialIdeal::minimize(I.nvars(), {lcms.begin(), lcms.end()});
}

std::optional<MonomialIdeal> try_colon_monomial(const MonomialIdeal& I, const Monomial& u) {
  check_same_nvars(I.nvars(), u.nvars());
  std::vector<Monomial> quotients;
  quotients.reserve(I.size());
  for (const Monomial& g : I.gens()) {
    Monomial q = quotient(g, u);
    if (q.is_one()) return std::nullopt;
    quotients.push_back(q);
  }
  return MonomialIdeal::minimize(I.nvars(), std::move(quotients));
}

MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& u) {
  auto result = try_colon_monomial(I, u);
  if (!result) throw UnitIdeal("I : " + u.to_string() + " is the unit ideal");
  return *std::move(result);
}

MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_nvars(I.nvars(), J.nvars());
  if (J.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  std::optional<MonomialIdeal> acc;
  for (const Monomial& v : J.gens()) {
    auto part = try_colon_monomial(I, v);
    if (!part) continue;  // unit ideal is neutral for intersection
    acc = acc ? intersect(*acc, *part) : *std::move(part);
  }
  if (!acc) throw UnitIdeal("J is contained in I, so I : J is the unit ideal");
  return *std::move(acc);
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> parts;
  parts.reserve(I.size());
  for (const Monomial& g : I.gens()) parts.push_back(g.squarefree_part());
  return MonomialIdeal::minimize(I.nvars(), std::move(parts));
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_nvars(I.nvars(), J.nvars());
  return I == J;
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_nvars(I.nvars(), J.nvars());
  return std::all_of(I.gens().begin(), I.gens().end(),
                     [&](const Monomial& g) { return J.contains(g); });
}

MonomialIdeal variable_ideal(std::size_t nvars, std::span<const int> vars) {
  std::vector<Monomial> gens;
  gens.reserve(vars.size());
  for (int v : vars) gens.push_back(Monomial::variable(nvars, v));
  return MonomialIdeal::minimize(nvars, std::move(gens));
}

}  // namespace indpath
