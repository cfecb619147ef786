#pragma once

#include <vector>

#include "indpath/decomposition.hpp"
#include "indpath/path_family.hpp"

namespace indpath {

/// Thrown for (n, t) pairs where Ind_t(P_n) is the zero ideal.
class ZeroIdealParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index list i_1 < ... < i_m, m = n - 2t + 2*level, with i_j ≡ j (mod 2).
struct ParityPrime {
  int n = 0;
  int t = 0;
  int level = 0;
  std::vector<int> indices;

  VarPrime prime() const { return VarPrime(static_cast<std::size_t>(n), indices); }
};

/// Every parity prime for (n, t, level), lexicographic. Needs n >= 2t and
/// 1 <= level <= t.
std::vector<ParityPrime> enumerate_parity_primes(int n, int t, int level);

/// Closed-form Ass(Ind_t(P_n)^k), sorted (by size, then indices).
std::vector<VarPrime> predicted_ass(int n, int t, int k);

int predicted_astab(int n, int t);
std::vector<VarPrime> predicted_stable_set(int n, int t);
bool predicted_ntf(int n, int t);

/// Components (x_i^r, x_j^{k+1-r}) for odd i < even j in [2t], 1 <= r <= k.
struct PredictedDecomposition {
  int t = 0;
  int k = 0;
  Components components;
};

PredictedDecomposition predicted_decomposition_2t(int t, int k);

/// Level l of a prime in the n > 2t family: |P| = n - 2t + 2l.
int parity_level(int n, int t, const VarPrime& P);

/// A monomial u with u ∉ I^k and I^k : u == P, for P in predicted_ass(n, t, k).
///
///   n == 2t       u = (x_{i_1} x^A)^{k-1} x^A
///   n > 2t, l = 1 u = (x^A x_{i_1})^{k-1} x^A
///   n > 2t, l > 1 u = (x^A u_1)^{k-l+1} (x^A u_3) ... (x^A u_{2l-3}) (x^A w),
///                 u_{2j-1} = x_{i_1} x_{i_3} ... x_{i_{2l+1}} / x_{i_{2j-1}},
///                 w = x_{i_1} x_{i_3} ... x_{i_{2l-3}}
///   n == 2t - 1   u = (x_1 x_3 ... x_{2t-1})^k / x_i for P = (x_i)
///   t == 1        u = x_1^{k-1}
/// where A is the complement of supp(P).
Monomial witness_monomial(int n, int t, int k, const VarPrime& P);

}  // namespace indpath
