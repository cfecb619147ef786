#include "indpath/path_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indpath {
namespace {

void check_path(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("n and t must be positive");
  if (n > kMaxPathVertices)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the path cap " +
                                std::to_string(kMaxPathVertices));
}

void extend(int n, int t, int next, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == t) {
    out.push_back(current);
    return;
  }
  const int remaining = t - static_cast<int>(current.size());
  // the remaining picks need at least 2*remaining - 1 positions
  for (int v = next; v + 2 * (remaining - 1) <= n; ++v) {
    current.push_back(v);
    extend(n, t, v + 2, current, out);
    current.pop_back();
  }
}

// Subsets of positions [0, m) of the given size with no two adjacent entries.
void nonadjacent_positions(int m, int size, int next, std::vector<int>& current,
                           std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (int p = next; p < m; ++p) {
    current.push_back(p);
    nonadjacent_positions(m, size, p + 2, current, out);
    current.pop_back();
  }
}

}  // namespace

std::string_view case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::DegenerateT1: return "DEGENERATE_T1";
    case CaseTag::Zero: return "ZERO";
    case CaseTag::Case2tMinus1: return "CASE_2T_MINUS_1";
    case CaseTag::Case2t: return "CASE_2T";
    case CaseTag::CaseGt2t: return "CASE_GT_2T";
  }
  return "UNKNOWN";
}

CaseTag classify(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("n and t must be positive");
  if (t == 1) return CaseTag::DegenerateT1;
  if (n < 2 * t - 1) return CaseTag::Zero;
  if (n == 2 * t - 1) return CaseTag::Case2tMinus1;
  if (n == 2 * t) return CaseTag::Case2t;
  return CaseTag::CaseGt2t;
}

PathFamilyParams PathFamilyParams::make(int n, int t, std::optional<int> k) {
  if (k && *k < 1) throw std::invalid_argument("k must be positive");
  return PathFamilyParams{n, t, k, classify(n, t)};
}

std::vector<std::vector<int>> independent_sets(int n, int t) {
  check_path(n, t);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(t));
  extend(n, t, 1, current, out);
  return out;
}

MonomialIdeal ind_ideal(int n, int t) {
  check_path(n, t);
  std::vector<Monomial> gens;
  for (const auto& s : independent_sets(n, t))
    gens.push_back(Monomial::from_support(static_cast<std::size_t>(n), s));
  return MonomialIdeal::minimize(static_cast<std::size_t>(n), std::move(gens));
}

Monomial g_generator(int t, int i) {
  if (t < 1 || 2 * t > kMaxPathVertices) throw std::invalid_argument("t out of range");
  if (i < 0 || i > t) throw std::out_of_range("g_i needs 0 <= i <= t");
  std::vector<int> vars;
  for (int j = 1; j <= i; ++j) vars.push_back(2 * j - 1);
  for (int v = 2 * i + 2; v <= 2 * t; v += 2) vars.push_back(v);
  return Monomial::from_support(static_cast<std::size_t>(2 * t), vars);
}

std::vector<int> complement_components(int n, const VarPrime& P) {
  if (P.nvars() != static_cast<std::size_t>(n)) throw DimensionMismatch("prime lives in a different ring");
  std::vector<int> runs;
  int current = 0;
  for (int v = 1; v <= n; ++v) {
    if (P.contains_var(v)) {
      if (current) runs.push_back(current);
      current = 0;
    } else {
      ++current;
    }
  }
  if (current) runs.push_back(current);
  return runs;
}

CoverFacts check_cover_facts(int n, int t, const VarPrime& B, int level) {
  check_path(n, t);
  if (B.nvars() != static_cast<std::size_t>(n)) throw std::invalid_argument("malformed B: wrong ring");
  if (level < 1 || level > t) throw std::invalid_argument("level must lie in [1, t]");

  CoverFacts r;
  const int a_size = n - static_cast<int>(B.size());
  r.complement_size = a_size == 2 * t - 2 * level;

  r.cover_bound = true;
  for (const auto& s : independent_sets(n, t)) {
    const auto hit = std::count_if(s.begin(), s.end(), [&](int v) { return B.contains_var(v); });
    if (hit < level) {
      r.cover_bound = false;
      break;
    }
  }

  std::vector<int> a_vars;
  for (int v = 1; v <= n; ++v)
    if (!B.contains_var(v)) a_vars.push_back(v);

  const MonomialIdeal I = ind_ideal(n, t);
  std::vector<std::vector<int>> choices;
  std::vector<int> current;
  nonadjacent_positions(static_cast<int>(B.size()), level, 0, current, choices);
  r.membership = true;
  for (const auto& positions : choices) {
    std::vector<int> vars = a_vars;
    for (int p : positions) vars.push_back(B.vars()[static_cast<std::size_t>(p)]);
    std::sort(vars.begin(), vars.end());
    if (I.is_zero() || !I.contains(Monomial::from_support(static_cast<std::size_t>(n), vars))) {
      r.membership = false;
      break;
    }
  }
  return r;
}

}  // namespace indpath
