#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indpath/closed_form.hpp"
#include "indpath/decomposition.hpp"
#include "indpath/path_family.hpp"

namespace indpath {

enum class Method { Decomposition, WitnessOnly };
enum class Verdict { Pass, Fail, Skipped, Zero };

std::string_view method_name(Method m);
std::string_view verdict_name(Verdict v);
/// Accepts "decomposition", "witness" and "witness-only".
Method parse_method(std::string_view text);

struct WitnessCheck {
  VarPrime prime;
  std::optional<Monomial> witness;
  bool passed = false;
  /// reason_code() of the check, or a construction error message.
  std::string reason;
};

struct VerificationReport {
  int n = 0;
  int t = 0;
  int k = 0;
  CaseTag tag = CaseTag::Zero;
  Method method = Method::Decomposition;
  Verdict verdict = Verdict::Skipped;

  std::vector<VarPrime> predicted;
  /// Set only by the decomposition method.
  std::optional<std::vector<VarPrime>> computed;
  std::vector<VarPrime> missing;  // predicted, not computed
  std::vector<VarPrime> extra;    // computed, not predicted

  /// Ass(I^{k-1}) ⊆ Ass(I^k); true for k == 1, unset when not evaluated.
  std::optional<bool> persistence;
  std::vector<WitnessCheck> witnesses;
  /// Witness-only reports cannot see primes outside the prediction.
  bool one_sided = false;
  std::string note;
  double wall_time_ms = 0.0;

  std::size_t predicted_count() const { return predicted.size(); }
  std::optional<std::size_t> computed_count() const;
  bool witnesses_pass() const;
};

struct VerifyOptions {
  std::chrono::milliseconds cell_budget{60000};
  std::size_t cache_capacity = 1 << 17;
};

VerificationReport verify_cell(int n, int t, int k, Method method, const VerifyOptions& options = {});

/// Reports for k = k_first..k_last of one (n, t) pair, sharing the power chain.
/// Ass(I^{k_first - 1}) is computed as well when persistence needs it.
std::vector<VerificationReport> verify_series(int n, int t, int k_first, int k_last, Method method,
                                              const VerifyOptions& options = {});

struct PersistenceResult {
  std::vector<VerificationReport> reports;  // k = 1..kmax
  std::vector<std::size_t> chain_sizes;     // |Ass(I^k)| for evaluated k
  std::optional<int> first_violation;       // k with Ass(I^k) ⊄ Ass(I^{k+1})
  bool complete = true;                     // false when a cell was skipped

  bool holds() const { return complete && !first_violation; }
};

PersistenceResult persistence_scan(int n, int t, int kmax, const VerifyOptions& options = {});

struct AstabResult {
  std::optional<int> value;  // empty when undetermined or incomplete
  bool undetermined = false;
  bool complete = true;
  int predicted = 0;
  std::vector<std::size_t> chain_sizes;

  bool matches_prediction() const { return value && *value == predicted; }
};

AstabResult empirical_astab(int n, int t, int kmax, const VerifyOptions& options = {});

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridConfig {
  std::pair<int, int> t_range{1, 3};
  std::pair<int, int> n_range{1, 8};
  std::pair<int, int> k_range{1, 3};
  Method method = Method::Decomposition;
  std::chrono::milliseconds cell_budget{60000};
  int parallelism = 1;
  std::size_t cache_capacity = 1 << 17;

  /// Throws ConfigError on bad ranges, unknown keys or bad values.
  void validate() const;
};

struct GridResult {
  GridConfig config;
  std::vector<VerificationReport> cells;  // sorted by (t, n, k)

  std::size_t count(Verdict v) const;
  /// 0 when every non-skipped, non-zero cell passes, 1 otherwise.
  int exit_code() const;
};

GridResult grid_scan(const GridConfig& config);

}  // namespace indpath
