#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "indpath/decomposition.hpp"
#include "indpath/ideal.hpp"

namespace indpath {

/// Largest path length accepted by the enumerators.
inline constexpr int kMaxPathVertices = 24;

enum class CaseTag { DegenerateT1, Zero, Case2tMinus1, Case2t, CaseGt2t };

std::string_view case_name(CaseTag tag);

/// Classifies (n, t) for Ind_t(P_n). t == 1 wins over every other tag.
CaseTag classify(int n, int t);

struct PathFamilyParams {
  int n = 0;
  int t = 0;
  std::optional<int> k;
  CaseTag tag = CaseTag::Zero;

  static PathFamilyParams make(int n, int t, std::optional<int> k = std::nullopt);
};

/// All t-subsets of [n] with no two consecutive entries, lexicographic.
std::vector<std::vector<int>> independent_sets(int n, int t);

/// Ind_t(P_n); the zero ideal when n < 2t - 1.
MonomialIdeal ind_ideal(int n, int t);

/// g_i = x_1 x_3 ... x_{2i-1} * x_{2i+2} x_{2i+4} ... x_{2t} in 2t variables.
Monomial g_generator(int t, int i);

/// Sizes, left to right, of the maximal runs of [n] \ P.
std::vector<int> complement_components(int n, const VarPrime& P);

struct CoverFacts {
  bool complement_size = false;  // |A| == 2t - 2l
  bool cover_bound = false;      // |S ∩ B| >= l for all independent t-sets S
  bool membership = false;       // x^H x^A in I for every admissible H

  bool all() const { return complement_size && cover_bound && membership; }
};

/// Exhaustive check of the three path-family facts for a prime B at level l.
CoverFacts check_cover_facts(int n, int t, const VarPrime& B, int level);

}  // namespace indpath
