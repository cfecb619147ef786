#include "indpath/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace indpath {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<VarPrime> set_difference(const std::vector<VarPrime>& a, const std::vector<VarPrime>& b) {
  std::vector<VarPrime> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_sorted_subset(const std::vector<VarPrime>& a, const std::vector<VarPrime>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<WitnessCheck> check_witnesses(int n, int t, int k, const MonomialIdeal& power_ideal,
                                          const std::vector<VarPrime>& predicted) {
  std::vector<WitnessCheck> checks;
  checks.reserve(predicted.size());
  for (const VarPrime& p : predicted) {
    WitnessCheck c{p, std::nullopt, false, {}};
    try {
      c.witness = witness_monomial(n, t, k, p);
      const WitnessResult r = verify_witness_in(power_ideal, *c.witness, p);
      c.passed = r.ok();
      c.reason = std::string(reason_code(r.reason));
    } catch (const std::exception& e) {
      c.reason = std::string("construction failed: ") + e.what();
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

void finish_verdict(VerificationReport& r) {
  const bool sets_agree = r.missing.empty() && r.extra.empty();
  r.verdict = sets_agree && r.witnesses_pass() ? Verdict::Pass : Verdict::Fail;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string_view method_name(Method m) {
  return m == Method::Decomposition ? "decomposition" : "witness-only";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
    case Verdict::Zero: return "ZERO";
  }
  return "UNKNOWN";
}

Method parse_method(std::string_view text) {
  if (text == "decomposition") return Method::Decomposition;
  if (text == "witness" || text == "witness-only") return Method::WitnessOnly;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::optional<std::size_t> VerificationReport::computed_count() const {
  if (!computed) return std::nullopt;
  return computed->size();
}

bool VerificationReport::witnesses_pass() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const WitnessCheck& c) { return c.passed; });
}

std::vector<VerificationReport> verify_series(int n, int t, int k_first, int k_last, Method method,
                                              const VerifyOptions& options) {
  if (k_first < 1 || k_last < k_first) throw std::invalid_argument("need 1 <= k_first <= k_last");
  const CaseTag tag = classify(n, t);

  std::vector<VerificationReport> reports;
  auto blank = [&](int k) {
    VerificationReport r;
    r.n = n;
    r.t = t;
    r.k = k;
    r.tag = tag;
    r.method = method;
    r.one_sided = method == Method::WitnessOnly;
    return r;
  };

  if (tag == CaseTag::Zero) {
    for (int k = k_first; k <= k_last; ++k) {
      VerificationReport r = blank(k);
      r.verdict = Verdict::Zero;
      r.note = "zero ideal (n < 2t - 1)";
      reports.push_back(std::move(r));
    }
    return reports;
  }

  const MonomialIdeal base = ind_ideal(n, t);
  DecompositionOptions dopts;
  dopts.cache = std::make_shared<DecompositionCache>(options.cache_capacity);

  std::optional<MonomialIdeal> power_ideal;
  std::optional<std::vector<VarPrime>> previous_ass;
  bool budget_broken = false;

  for (int k = 1; k <= k_last; ++k) {
    const auto start = Clock::now();
    dopts.deadline = start + options.cell_budget;
    const bool wanted = k >= k_first;
    const bool feeds_persistence = method == Method::Decomposition && k == k_first - 1;
    if (!wanted && !feeds_persistence) {
      power_ideal = power_ideal ? product(*power_ideal, base) : base;
      continue;
    }

    VerificationReport r = blank(k);
    if (budget_broken) {
      r.verdict = Verdict::Skipped;
      r.note = "an earlier power exceeded the cell budget";
      reports.push_back(std::move(r));
      continue;
    }

    try {
      power_ideal = power_ideal ? product(*power_ideal, base) : base;
      r.predicted = predicted_ass(n, t, k);
      std::vector<VarPrime> computed;
      if (method == Method::Decomposition) computed = associated_primes(*power_ideal, dopts);

      if (!wanted) {
        previous_ass = std::move(computed);
        continue;
      }

      r.witnesses = check_witnesses(n, t, k, *power_ideal, r.predicted);
      if (method == Method::Decomposition) {
        r.missing = set_difference(r.predicted, computed);
        r.extra = set_difference(computed, r.predicted);
        if (k == 1)
          r.persistence = true;
        else if (previous_ass)
          r.persistence = is_sorted_subset(*previous_ass, computed);
        previous_ass = computed;
        r.computed = std::move(computed);
      } else {
        r.note = "one-sided: witness checks cannot detect primes outside the prediction";
      }
      finish_verdict(r);
    } catch (const BudgetExceeded& e) {
      budget_broken = true;
      previous_ass.reset();
      if (!wanted) continue;
      r.verdict = Verdict::Skipped;
      r.note = e.what();
    }
    r.wall_time_ms = elapsed_ms(start);
    reports.push_back(std::move(r));
  }
  return reports;
}

VerificationReport verify_cell(int n, int t, int k, Method method, const VerifyOptions& options) {
  return verify_series(n, t, k, k, method, options).front();
}

PersistenceResult persistence_scan(int n, int t, int kmax, const VerifyOptions& options) {
  if (kmax < 2) throw std::invalid_argument("persistence scan needs kmax >= 2");
  if (classify(n, t) == CaseTag::Zero) throw ZeroIdealParams("Ind_t(P_n) is the zero ideal");
  PersistenceResult out;
  out.reports = verify_series(n, t, 1, kmax, Method::Decomposition, options);
  const std::vector<VarPrime>* previous = nullptr;
  for (const auto& r : out.reports) {
    if (!r.computed) {
      out.complete = false;
      break;
    }
    out.chain_sizes.push_back(r.computed->size());
    if (previous && !out.first_violation && !is_sorted_subset(*previous, *r.computed))
      out.first_violation = r.k - 1;
    previous = &*r.computed;
  }
  return out;
}

AstabResult empirical_astab(int n, int t, int kmax, const VerifyOptions& options) {
  if (kmax < 1) throw std::invalid_argument("astab scan needs kmax >= 1");
  AstabResult out;
  out.predicted = predicted_astab(n, t);
  const auto reports = verify_series(n, t, 1, kmax, Method::Decomposition, options);
  for (const auto& r : reports) {
    if (!r.computed) {
      out.complete = false;
      return out;
    }
    out.chain_sizes.push_back(r.computed->size());
  }
  // smallest k0 with Ass(I^k) == Ass(I^{k0}) for every k0 <= k <= kmax
  int k0 = kmax;
  while (k0 > 1 && *reports[static_cast<std::size_t>(k0 - 2)].computed == *reports.back().computed) --k0;
  if (k0 == kmax) {
    out.undetermined = true;
  } else {
    out.value = k0;
  }
  return out;
}

// -------------------------------------------------------------------- grid

void GridConfig::validate() const {
  auto check_range = [](const char* name, std::pair<int, int> r, int lo, int hi) {
    if (r.first < lo || r.second < r.first || r.second > hi)
      throw ConfigError(std::string(name) + " range must satisfy " + std::to_string(lo) +
                        " <= min <= max <= " + std::to_string(hi));
  };
  check_range("t", t_range, 1, kMaxPathVertices);
  check_range("n", n_range, 1, kMaxPathVertices);
  check_range("k", k_range, 1, 64);
  if (cell_budget.count() <= 0) throw ConfigError("cell budget must be positive");
  if (parallelism < 1 || parallelism > 256) throw ConfigError("parallelism must lie in [1, 256]");
  if (cache_capacity == 0) throw ConfigError("cache capacity must be positive");
}

std::size_t GridResult::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [v](const VerificationReport& r) { return r.verdict == v; }));
}

int GridResult::exit_code() const { return count(Verdict::Fail) == 0 ? 0 : 1; }

GridResult grid_scan(const GridConfig& config) {
  config.validate();
  std::vector<std::pair<int, int>> series;  // (t, n)
  for (int t = config.t_range.first; t <= config.t_range.second; ++t)
    for (int n = config.n_range.first; n <= config.n_range.second; ++n) series.emplace_back(t, n);

  VerifyOptions options;
  options.cell_budget = config.cell_budget;
  options.cache_capacity = config.cache_capacity;

  std::vector<std::vector<VerificationReport>> results(series.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < series.size(); i = next++) {
      const auto [t, n] = series[i];
      try {
        results[i] = verify_series(n, t, config.k_range.first, config.k_range.second, config.method, options);
      } catch (const std::exception& e) {
        for (int k = config.k_range.first; k <= config.k_range.second; ++k) {
          VerificationReport r;
          r.n = n;
          r.t = t;
          r.k = k;
          r.tag = classify(n, t);
          r.method = config.method;
          r.verdict = Verdict::Fail;
          r.note = std::string("error: ") + e.what();
          results[i].push_back(std::move(r));
        }
      }
    }
  };

  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(config.parallelism), series.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  GridResult out{config, {}};
  for (auto& rs : results)
    for (auto& r : rs) out.cells.push_back(std::move(r));
  std::stable_sort(out.cells.begin(), out.cells.end(), [](const auto& a, const auto& b) {
    return std::tie(a.t, a.n, a.k) < std::tie(b.t, b.n, b.k);
  });
  return out;
}

}  // namespace indpath
