#include "indpath/closed_form.hpp"

#include <algorithm>
#include <string>

namespace indpath {
namespace {

void require_nonzero(int n, int t) {
  if (classify(n, t) == CaseTag::Zero)
    throw ZeroIdealParams("Ind_" + std::to_string(t) + "(P_" + std::to_string(n) + ") is the zero ideal");
}

void extend_parity(int n, int m, int j, int next, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  if (j > m) {
    out.push_back(current);
    return;
  }
  // i_j must share the parity of j and leave room for the m - j entries after it
  int start = next;
  if ((start - j) % 2 != 0) ++start;
  for (int v = start; v <= n - (m - j); v += 2) {
    current.push_back(v);
    extend_parity(n, m, j + 1, v + 1, current, out);
    current.pop_back();
  }
}

Monomial power_of(const Monomial& m, int e) {
  Monomial out(m.nvars());
  for (int i = 0; i < e; ++i) out = mul(out, m);
  return out;
}

Monomial product_of_vars(std::size_t nvars, std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  return Monomial::from_support(nvars, vars);
}

}  // namespace

std::vector<ParityPrime> enumerate_parity_primes(int n, int t, int level) {
  if (t < 1 || n < 2 * t || n > kMaxPathVertices)
    throw std::invalid_argument("parity primes need 2t <= n <= " + std::to_string(kMaxPathVertices));
  if (level < 1 || level > t) throw std::invalid_argument("level must lie in [1, t]");
  const int m = n - 2 * t + 2 * level;
  std::vector<std::vector<int>> lists;
  std::vector<int> current;
  extend_parity(n, m, 1, 1, current, lists);
  std::vector<ParityPrime> out;
  out.reserve(lists.size());
  for (auto& l : lists) out.push_back(ParityPrime{n, t, level, std::move(l)});
  return out;
}

std::vector<VarPrime> predicted_ass(int n, int t, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const CaseTag tag = classify(n, t);
  const auto nvars = static_cast<std::size_t>(n);
  std::vector<VarPrime> out;
  switch (tag) {
    case CaseTag::Zero:
      require_nonzero(n, t);
      break;
    case CaseTag::DegenerateT1: {
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
      out.emplace_back(nvars, std::move(all));
      break;
    }
    case CaseTag::Case2tMinus1:
      for (int i = 1; i <= n; i += 2) out.emplace_back(nvars, std::vector<int>{i});
      break;
    case CaseTag::Case2t:
      for (int i = 1; i <= n; i += 2)
        for (int j = i + 1; j <= n; j += 2) out.emplace_back(nvars, std::vector<int>{i, j});
      break;
    case CaseTag::CaseGt2t:
      for (int level = 1; level <= std::min(t, k); ++level)
        for (const auto& p : enumerate_parity_primes(n, t, level)) out.push_back(p.prime());
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int predicted_astab(int n, int t) {
  const CaseTag tag = classify(n, t);
  require_nonzero(n, t);
  return tag == CaseTag::CaseGt2t ? t : 1;
}

std::vector<VarPrime> predicted_stable_set(int n, int t) {
  return predicted_ass(n, t, std::max(t, 1));
}

bool predicted_ntf(int n, int t) { return predicted_astab(n, t) == 1; }

PredictedDecomposition predicted_decomposition_2t(int t, int k) {
  if (t < 2 || 2 * t > kMaxPathVertices) throw std::invalid_argument("t must satisfy 2 <= t <= 12");
  if (k < 1) throw std::invalid_argument("k must be positive");
  const auto nvars = static_cast<std::size_t>(2 * t);
  PredictedDecomposition out{t, k, {}};
  for (int r = 1; r <= k; ++r)
    for (int i = 1; i <= 2 * t; i += 2)
      for (int j = i + 1; j <= 2 * t; j += 2) {
        const std::pair<int, Exponent> powers[] = {{i, static_cast<Exponent>(r)},
                                                   {j, static_cast<Exponent>(k + 1 - r)}};
        out.components.emplace_back(nvars, powers);
      }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

int parity_level(int n, int t, const VarPrime& P) {
  const int excess = static_cast<int>(P.size()) - (n - 2 * t);
  if (excess < 2 || excess % 2 != 0)
    throw std::invalid_argument("prime size does not match any level");
  return excess / 2;
}

Monomial witness_monomial(int n, int t, int k, const VarPrime& P) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const CaseTag tag = classify(n, t);
  require_nonzero(n, t);
  const auto nvars = static_cast<std::size_t>(n);
  if (P.nvars() != nvars) throw DimensionMismatch("prime lives in a different ring");

  if (tag == CaseTag::CaseGt2t) {
    const int level = parity_level(n, t, P);
    if (level > k)
      throw std::invalid_argument("level " + std::to_string(level) + " exceeds k = " + std::to_string(k));
  }
  const auto predicted = predicted_ass(n, t, k);
  if (!std::binary_search(predicted.begin(), predicted.end(), P))
    throw std::invalid_argument(P.to_string() + " is not a predicted associated prime");

  std::vector<int> a_vars;
  for (int v = 1; v <= n; ++v)
    if (!P.contains_var(v)) a_vars.push_back(v);
  const Monomial xa = product_of_vars(nvars, a_vars);
  const auto& idx = P.vars();  // idx[j - 1] is i_j

  switch (tag) {
    case CaseTag::DegenerateT1:
      return Monomial::variable(nvars, 1, static_cast<Exponent>(k - 1));
    case CaseTag::Case2tMinus1: {
      std::vector<int> odd;
      for (int v = 1; v <= n; v += 2) odd.push_back(v);
      const Monomial f = power_of(product_of_vars(nvars, odd), k);
      return quotient(f, Monomial::variable(nvars, idx.front()));
    }
    case CaseTag::Case2t: {
      const Monomial u1 = mul(Monomial::variable(nvars, idx.front()), xa);
      return mul(power_of(u1, k - 1), xa);
    }
    case CaseTag::CaseGt2t: {
      const int level = parity_level(n, t, P);
      if (level == 1) {
        const Monomial u1 = mul(xa, Monomial::variable(nvars, idx.front()));
        return mul(power_of(u1, k - 1), xa);
      }
      // odd positions 1, 3, ..., 2l+1 (all exist since |P| >= 2l + 1)
      std::vector<int> odd_positions;
      for (int j = 1; j <= 2 * level + 1; j += 2) odd_positions.push_back(idx[static_cast<std::size_t>(j - 1)]);
      auto u_odd = [&](int pos) {  // u_pos for odd pos = 2j - 1
        std::vector<int> vars;
        for (int v : odd_positions)
          if (v != idx[static_cast<std::size_t>(pos - 1)]) vars.push_back(v);
        return product_of_vars(nvars, vars);
      };
      std::vector<int> w_vars;
      for (int j = 1; j <= 2 * level - 3; j += 2) w_vars.push_back(idx[static_cast<std::size_t>(j - 1)]);
      const Monomial w = product_of_vars(nvars, w_vars);

      Monomial u = power_of(mul(xa, u_odd(1)), k - level + 1);
      for (int j = 2; j <= level - 1; ++j) u = mul(u, mul(xa, u_odd(2 * j - 1)));
      return mul(u, mul(xa, w));
    }
    case CaseTag::Zero: break;
  }
  throw std::logic_error("unreachable case in witness_monomial");
}

}  // namespace indpath
