#include "indpath/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace indpath {

// ---------------------------------------------------------------- VarPrime

VarPrime::VarPrime(std::size_t nvars, std::vector<int> vars) : nvars_(nvars), vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("VarPrime needs at least one variable");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] < 1 || static_cast<std::size_t>(vars_[i]) > nvars_)
      throw std::invalid_argument("VarPrime index out of range");
    if (i && vars_[i] <= vars_[i - 1])
      throw std::invalid_argument("VarPrime indices must be strictly increasing");
  }
}

bool VarPrime::contains_var(int v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

MonomialIdeal VarPrime::to_ideal() const { return variable_ideal(nvars_, vars_); }

std::string VarPrime::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ", ";
    out += 'x' + std::to_string(vars_[i]);
  }
  return out + ')';
}

std::strong_ordering operator<=>(const VarPrime& a, const VarPrime& b) {
  if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
  if (auto c = a.vars_.size() <=> b.vars_.size(); c != 0) return c;
  return a.vars_ <=> b.vars_;
}

// ---------------------------------------------------- IrreducibleComponent

IrreducibleComponent::IrreducibleComponent(std::size_t nvars,
                                           std::span<const std::pair<int, Exponent>> powers)
    : nvars_(static_cast<std::uint32_t>(nvars)) {
  if (nvars == 0 || nvars > kMaxVars) throw std::invalid_argument("bad nvars for component");
  if (powers.empty()) throw std::invalid_argument("irreducible component needs a generator");
  lanes_.fill(kAbsent);
  for (auto [var, exp] : powers) {
    if (var < 1 || static_cast<std::size_t>(var) > nvars)
      throw std::invalid_argument("component variable out of range");
    if (exp < 1 || exp > kMaxExponent) throw std::invalid_argument("component exponent out of range");
    Exponent& slot = lanes_[var - 1];
    slot = std::min(slot, exp);
  }
}

IrreducibleComponent IrreducibleComponent::from_pure_powers(const MonomialIdeal& I) {
  std::vector<std::pair<int, Exponent>> powers;
  powers.reserve(I.size());
  for (const Monomial& g : I.gens()) {
    const auto supp = g.support();
    if (supp.size() != 1) throw std::invalid_argument("generator is not a pure power: " + g.to_string());
    powers.emplace_back(supp.front(), g.exponent(supp.front()));
  }
  return IrreducibleComponent(I.nvars(), powers);
}

Exponent IrreducibleComponent::power_of(int var) const {
  if (var < 1 || static_cast<std::size_t>(var) > nvars_) throw std::out_of_range("variable index");
  const Exponent e = lanes_[var - 1];
  return e == kAbsent ? 0 : e;
}

std::vector<std::pair<int, Exponent>> IrreducibleComponent::powers() const {
  std::vector<std::pair<int, Exponent>> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (lanes_[i] != kAbsent) out.emplace_back(static_cast<int>(i + 1), lanes_[i]);
  return out;
}

std::size_t IrreducibleComponent::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(lanes_.begin(), lanes_.begin() + nvars_, [](Exponent e) { return e != kAbsent; }));
}

VarPrime IrreducibleComponent::radical() const {
  std::vector<int> vars;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (lanes_[i] != kAbsent) vars.push_back(static_cast<int>(i + 1));
  return VarPrime(nvars_, std::move(vars));
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Monomial> gens;
  for (auto [var, exp] : powers()) gens.push_back(Monomial::variable(nvars_, var, exp));
  return MonomialIdeal::minimize(nvars_, std::move(gens));
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  check_same_nvars(nvars_, other.nvars_);
  return kernels::active().leq_all(data(), other.data(), padded_lanes(nvars_));
}

bool IrreducibleComponent::contains(const Monomial& m) const {
  check_same_nvars(nvars_, m.nvars());
  return kernels::active().any_geq(m.data(), data(), padded_lanes(nvars_));
}

std::vector<std::string> IrreducibleComponent::generator_strings() const {
  std::vector<std::string> out;
  for (auto [var, exp] : powers()) out.push_back('x' + std::to_string(var) + '^' + std::to_string(exp));
  return out;
}

std::string IrreducibleComponent::to_string() const {
  std::string out = "(";
  bool first = true;
  for (auto [var, exp] : powers()) {
    if (!first) out += ", ";
    first = false;
    out += 'x' + std::to_string(var);
    if (exp > 1) out += '^' + std::to_string(exp);
  }
  return out + ')';
}

std::strong_ordering operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
  if (auto c = a.support_size() <=> b.support_size(); c != 0) return c;
  // Support pattern first (present sorts before absent at the first difference),
  // then exponents.
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    const bool pa = a.lanes_[i] != IrreducibleComponent::kAbsent;
    const bool pb = b.lanes_[i] != IrreducibleComponent::kAbsent;
    if (pa != pb) return pa ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  for (std::size_t i = 0; i < a.nvars_; ++i)
    if (auto c = a.lanes_[i] <=> b.lanes_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ------------------------------------------------------ DecompositionCache

namespace {

// Packed layout: nvars, width (1 or 4), then nvars lanes per row.
template <class Row>
std::string pack_rows(std::size_t nvars, std::span<const Row> rows, Exponent absent) {
  Exponent top = 0;
  for (const Row& r : rows)
    for (std::size_t i = 0; i < nvars; ++i)
      if (r.data()[i] != absent) top = std::max(top, r.data()[i]);
  const std::size_t width = top < 255 ? 1 : 4;
  std::string out(2 + rows.size() * nvars * width, '\0');
  out[0] = static_cast<char>(nvars);
  out[1] = static_cast<char>(width);
  char* p = out.data() + 2;
  for (const Row& r : rows)
    for (std::size_t i = 0; i < nvars; ++i) {
      const Exponent e = r.data()[i] == absent ? (width == 1 ? 255 : absent) : r.data()[i];
      if (width == 1)
        *p++ = static_cast<char>(e);
      else {
        std::memcpy(p, &e, 4);
        p += 4;
      }
    }
  return out;
}

std::string pack_ideal(const MonomialIdeal& I) {
  return pack_rows<Monomial>(I.nvars(), I.gens(), IrreducibleComponent::kAbsent);
}

std::shared_ptr<const Components> unpack_components(const std::string& packed) {
  const std::size_t nvars = static_cast<unsigned char>(packed[0]);
  const std::size_t width = static_cast<unsigned char>(packed[1]);
  const std::size_t rows = (packed.size() - 2) / (nvars * width);
  auto out = std::make_shared<Components>();
  out->reserve(rows);
  const char* p = packed.data() + 2;
  std::vector<std::pair<int, Exponent>> powers;
  for (std::size_t r = 0; r < rows; ++r) {
    powers.clear();
    for (std::size_t i = 0; i < nvars; ++i) {
      Exponent e;
      if (width == 1) {
        e = static_cast<unsigned char>(*p++);
        if (e == 255) e = IrreducibleComponent::kAbsent;
      } else {
        std::memcpy(&e, p, 4);
        p += 4;
      }
      if (e != IrreducibleComponent::kAbsent) powers.emplace_back(static_cast<int>(i + 1), e);
    }
    out->emplace_back(nvars, powers);
  }
  return out;
}

}  // namespace

DecompositionCache::DecompositionCache(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw std::invalid_argument("cache capacity must be positive");
}

void DecompositionCache::touch(Entry& e) { order_.splice(order_.begin(), order_, e.position); }

std::shared_ptr<const Components> DecompositionCache::find(const MonomialIdeal& key) {
  const std::string packed = pack_ideal(key);
  std::string value;
  {
    std::lock_guard lock(mutex_);
    auto it = map_.find(packed);
    if (it == map_.end()) {
      ++misses_;
      return nullptr;
    }
    ++hits_;
    touch(it->second);
    value = it->second.value;
  }
  return unpack_components(value);
}

std::shared_ptr<const Components> DecompositionCache::insert(const MonomialIdeal& key,
                                                             std::shared_ptr<const Components> value) {
  if (value->empty()) throw std::invalid_argument("empty decomposition");
  std::string packed_key = pack_ideal(key);
  std::string packed_value =
      pack_rows<IrreducibleComponent>(key.nvars(), *value, IrreducibleComponent::kAbsent);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = map_.try_emplace(std::move(packed_key), Entry{std::move(packed_value), {}});
  if (!inserted) {
    touch(it->second);
    return value;
  }
  order_.push_front(&it->first);
  it->second.position = order_.begin();
  while (map_.size() > capacity_) {
    const std::string* victim = order_.back();
    order_.pop_back();
    map_.erase(*victim);
  }
  return value;
}

std::size_t DecompositionCache::size() const {
  std::lock_guard lock(mutex_);
  return map_.size();
}

std::size_t DecompositionCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t DecompositionCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

void DecompositionCache::clear() {
  std::lock_guard lock(mutex_);
  map_.clear();
  order_.clear();
}

// ------------------------------------------------------------ decomposition

namespace {

// Keeps the inclusion-minimal components. Input must be sorted and unique.
// Q is dropped when some other Q' satisfies Q' ⊆ Q, i.e. lanes(Q) <= lanes(Q').
Components prune_contained(Components cs) {
  if (cs.size() < 2) return cs;
  const auto& k = kernels::active();
  const std::size_t len = padded_lanes(cs.front().nvars());
  const Exponent* rows = cs.front().data();
  std::vector<char> keep(cs.size(), 1);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Exponent* probe = cs[i].data();
    if (k.find_geq_row(rows, kComponentStride, i, probe, len) != kernels::kNotFound ||
        k.find_geq_row(rows + (i + 1) * kComponentStride, kComponentStride, cs.size() - i - 1, probe,
                       len) != kernels::kNotFound)
      keep[i] = 0;
  }
  Components out;
  out.reserve(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (keep[i]) out.push_back(cs[i]);
  return out;
}

void sort_unique(Components& cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

// Any total order will do inside the recursion; the canonical one is applied once at the end.
bool raw_less(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  return std::memcmp(a.data(), b.data(), kMaxVars * sizeof(Exponent)) < 0;
}

// rows of `from` that no row of `against` is contained in
void keep_uncovered(const Components& from, const Components& against, Components& out) {
  if (against.empty()) {
    out.insert(out.end(), from.begin(), from.end());
    return;
  }
  const auto& k = kernels::active();
  const std::size_t len = padded_lanes(from.front().nvars());
  for (const auto& q : from)
    if (k.find_geq_row(against.front().data(), kComponentStride, against.size(), q.data(), len) ==
        kernels::kNotFound)
      out.push_back(q);
}

// Minimal elements of the union of two antichains.
Components merge_antichains(const Components& a, const Components& b) {
  Components shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared), raw_less);
  Components a_only, b_only;
  std::set_difference(a.begin(), a.end(), shared.begin(), shared.end(), std::back_inserter(a_only), raw_less);
  std::set_difference(b.begin(), b.end(), shared.begin(), shared.end(), std::back_inserter(b_only), raw_less);
  Components kept = shared;
  kept.reserve(a.size() + b.size());
  keep_uncovered(a_only, b_only, kept);
  keep_uncovered(b_only, a_only, kept);
  std::sort(kept.begin(), kept.end(), raw_less);
  return kept;
}

class Splitter {
 public:
  Splitter(DecompositionCache& cache, std::optional<std::chrono::steady_clock::time_point> deadline)
      : cache_(cache), deadline_(deadline) {}

  std::shared_ptr<const Components> run(const MonomialIdeal& I) {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw BudgetExceeded("decomposition exceeded its time budget");
    if (auto hit = cache_.find(I)) return hit;

    Components result;
    const auto gens = I.gens();
    const auto mixed = std::find_if(gens.begin(), gens.end(),
                                    [](const Monomial& g) { return g.support_size() >= 2; });
    if (mixed == gens.end()) {
      result.push_back(IrreducibleComponent::from_pure_powers(I));
    } else {
      // pivot: smallest variable of the first mixed generator
      const Monomial& g = *mixed;
      const int var = g.support().front();
      const Monomial pure = Monomial::variable(I.nvars(), var, g.exponent(var));
      const Monomial rest = quotient(g, pure);

      auto left = run(add_generator(I, pure));
      auto right = run(add_generator(I, rest));
      result = merge_antichains(*left, *right);
    }
    return cache_.insert(I, std::make_shared<const Components>(std::move(result)));
  }

 private:
  DecompositionCache& cache_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace

Components irreducible_decomposition(const MonomialIdeal& I, const DecompositionOptions& options) {
  if (I.is_zero()) throw std::invalid_argument("cannot decompose the zero ideal");
  std::shared_ptr<DecompositionCache> cache = options.cache;
  if (!cache) cache = std::make_shared<DecompositionCache>();
  Splitter splitter(*cache, options.deadline);
  auto components = splitter.run(I);
  return irredundant_filter(*components, I);
}

Components irredundant_filter(Components components, const MonomialIdeal& I) {
  if (components.empty()) return components;
  const std::size_t nvars = components.front().nvars();
  check_same_nvars(nvars, I.nvars());
  sort_unique(components);
  components = prune_contained(std::move(components));

  // Exact stage. The monomials outside an irreducible Q are the divisors of
  // its corner prod x_i^(a_i - 1) over supp(Q) times a high power of every
  // other variable, so the others intersect inside Q iff the corner escapes
  // one of them. "High" means at least every finite exponent present.
  Exponent high = 1;
  for (const auto& q : components)
    for (auto [var, exp] : q.powers()) high = std::max(high, exp);

  std::vector<char> alive(components.size(), 1);
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::vector<Exponent> corner(nvars, high);
    for (auto [var, exp] : components[i].powers()) corner[var - 1] = exp - 1;
    const Monomial m = Monomial::from_exponents(corner);
    bool escapes = false;
    for (std::size_t j = 0; j < components.size() && !escapes; ++j) {
      if (j == i || !alive[j]) continue;
      escapes = !components[j].contains(m);
    }
    if (escapes) alive[i] = 0;
  }
  Components out;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (alive[i]) out.push_back(components[i]);
  return out;
}

MonomialIdeal intersect_all(std::span<const IrreducibleComponent> components) {
  if (components.empty()) throw std::invalid_argument("intersection of no components");
  MonomialIdeal acc = components.front().to_ideal();
  for (std::size_t i = 1; i < components.size(); ++i) acc = intersect(acc, components[i].to_ideal());
  return acc;
}

std::vector<VarPrime> radicals_of(std::span<const IrreducibleComponent> components) {
  std::vector<VarPrime> primes;
  primes.reserve(components.size());
  for (const auto& q : components) primes.push_back(q.radical());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<VarPrime> associated_primes(const MonomialIdeal& I, const DecompositionOptions& options) {
  if (I.is_zero()) throw std::invalid_argument("associated primes of the zero ideal");
  return radicals_of(irreducible_decomposition(I, options));
}

// ------------------------------------------------------------------ witness

std::string_view reason_code(WitnessReason r) {
  switch (r) {
    case WitnessReason::Ok: return "ok";
    case WitnessReason::InPower: return "u in I^k";
    case WitnessReason::ColonTooBig: return "colon too big";
    case WitnessReason::ColonTooSmall: return "colon too small";
  }
  return "unknown";
}

WitnessResult verify_witness_in(const MonomialIdeal& power_ideal, const Monomial& u,
                                const VarPrime& P) {
  check_same_nvars(power_ideal.nvars(), u.nvars());
  check_same_nvars(power_ideal.nvars(), P.nvars());
  WitnessResult result;
  if (power_ideal.contains(u)) {
    result.reason = WitnessReason::InPower;
    return result;
  }
  result.colon = colon_monomial(power_ideal, u);
  const MonomialIdeal p = P.to_ideal();
  if (*result.colon == p)
    result.reason = WitnessReason::Ok;
  else if (is_subset(p, *result.colon))
    result.reason = WitnessReason::ColonTooBig;
  else
    result.reason = WitnessReason::ColonTooSmall;
  return result;
}

WitnessResult verify_witness(const MonomialIdeal& I, int k, const Monomial& u, const VarPrime& P) {
  if (k < 1) throw std::invalid_argument("witness power must be >= 1");
  return verify_witness_in(power(I, k), u, P);
}

// -------------------------------------------------------- vertex-cover oracle

std::vector<VarPrime> minimal_primes_squarefree(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("minimal primes of the zero ideal");
  if (!I.is_squarefree()) throw std::invalid_argument("ideal is not squarefree");
  const std::size_t n = I.nvars();
  if (n > 20) throw std::invalid_argument("exhaustive cover search limited to 20 variables");

  std::vector<std::uint32_t> edges;
  for (const Monomial& g : I.gens()) {
    std::uint32_t mask = 0;
    for (int v : g.support()) mask |= 1u << (v - 1);
    edges.push_back(mask);
  }
  auto hits_all = [&](std::uint32_t s) {
    return std::all_of(edges.begin(), edges.end(), [s](std::uint32_t e) { return (e & s) != 0; });
  };

  std::vector<VarPrime> out;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t s = 1; s < limit; ++s) {
    if (!hits_all(s)) continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest && minimal; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (hits_all(s & ~bit)) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> vars;
    for (std::uint32_t rest = s; rest; rest &= rest - 1)
      vars.push_back(std::countr_zero(rest) + 1);
    out.emplace_back(n, std::move(vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace indpath
