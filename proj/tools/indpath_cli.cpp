// indpath: associated primes of powers of Ind_t(P_n), computed and predicted.
//
// Exit codes: 0 everything checked passed, 1 a check failed, 2 usage,
// configuration or I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "indpath/closed_form.hpp"
#include "indpath/decomposition.hpp"
#include "indpath/path_family.hpp"
#include "indpath/report.hpp"
#include "indpath/verify.hpp"

namespace {

using namespace indpath;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

enum class Format { Text, Structured };

struct Common {
  int n = 0;
  int t = 0;
  int k = 1;
  int kmax = 2;
  std::string method = "decomposition";
  long long budget_ms = 60000;
  std::string config_path;
  std::string out_path;
  int parallelism = 0;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string ideal_name(int n, int t) {
  return "Ind_" + std::to_string(t) + "(P_" + std::to_string(n) + ")";
}

Json primes_json(const std::vector<VarPrime>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(to_json(p));
  return arr;
}

VerifyOptions verify_options(const Common& c) {
  VerifyOptions o;
  o.cell_budget = std::chrono::milliseconds(c.budget_ms);
  return o;
}

int cmd_gen(const Common& c, Format f) {
  const MonomialIdeal I = ind_ideal(c.n, c.t);
  if (f == Format::Structured) {
    Json j;
    j["n"] = c.n;
    j["t"] = c.t;
    j["case"] = case_name(classify(c.n, c.t));
    j["ideal"] = to_json(I);
    emit(j);
  } else {
    std::cout << ideal_name(c.n, c.t) << " = " << I.to_string() << '\n'
              << I.size() << " minimal generators\n";
  }
  return kExitPass;
}

int cmd_predict(const Common& c, Format f) {
  const auto ass = predicted_ass(c.n, c.t, c.k);
  const int astab = predicted_astab(c.n, c.t);
  const auto stable = predicted_stable_set(c.n, c.t);
  if (f == Format::Structured) {
    Json j;
    j["n"] = c.n;
    j["t"] = c.t;
    j["k"] = c.k;
    j["case"] = case_name(classify(c.n, c.t));
    j["ass"] = primes_json(ass);
    j["astab"] = astab;
    j["normally_torsion_free"] = predicted_ntf(c.n, c.t);
    j["stable_set"] = primes_json(stable);
    emit(j);
  } else {
    std::cout << "predicted Ass(" << ideal_name(c.n, c.t) << "^" << c.k << "), " << ass.size() << " primes:\n";
    for (const auto& p : ass) std::cout << "  " << p.to_string() << '\n';
    std::cout << "astab = " << astab << (predicted_ntf(c.n, c.t) ? " (normally torsion-free)" : "") << '\n'
              << "stable set: " << stable.size() << " primes\n";
  }
  return kExitPass;
}

int cmd_decompose(const Common& c, Format f) {
  const MonomialIdeal Ik = power(ind_ideal(c.n, c.t), c.k);
  if (Ik.is_zero()) throw std::invalid_argument(ideal_name(c.n, c.t) + " is the zero ideal");
  DecompositionOptions opts;
  opts.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(c.budget_ms);
  const Components cs = irreducible_decomposition(Ik, opts);
  const auto primes = radicals_of(cs);
  if (f == Format::Structured) {
    Json j;
    j["n"] = c.n;
    j["t"] = c.t;
    j["k"] = c.k;
    j["generators"] = Ik.size();
    Json arr = Json::array();
    for (const auto& q : cs) arr.push_back(to_json(q));
    j["components"] = std::move(arr);
    j["associated_primes"] = primes_json(primes);
    emit(j);
  } else {
    std::cout << ideal_name(c.n, c.t) << "^" << c.k << ": " << Ik.size() << " generators, " << cs.size()
              << " irreducible components\n";
    for (const auto& q : cs) std::cout << "  " << q.to_string() << '\n';
    std::cout << "associated primes (" << primes.size() << "):\n";
    for (const auto& p : primes) std::cout << "  " << p.to_string() << '\n';
  }
  return kExitPass;
}

int cmd_ass(const Common& c, Format f) {
  const VerificationReport r = verify_cell(c.n, c.t, c.k, parse_method(c.method), verify_options(c));
  if (f == Format::Structured) {
    Json j = to_json(r);
    j["predicted"] = primes_json(r.predicted);
    j["computed"] = r.computed ? primes_json(*r.computed) : Json(nullptr);
    j["wall_time_ms"] = r.wall_time_ms;
    emit(j);
  } else {
    std::cout << render_report(r);
  }
  return r.verdict == Verdict::Fail ? kExitFail : kExitPass;
}

int cmd_persistence(const Common& c, Format f) {
  const PersistenceResult p = persistence_scan(c.n, c.t, c.kmax, verify_options(c));
  if (f == Format::Structured) {
    Json j;
    j["n"] = c.n;
    j["t"] = c.t;
    j["kmax"] = c.kmax;
    j["chain_sizes"] = p.chain_sizes;
    j["complete"] = p.complete;
    j["first_violation"] = p.first_violation ? Json(*p.first_violation) : Json(nullptr);
    j["holds"] = p.holds();
    Json cells = Json::array();
    for (const auto& r : p.reports) cells.push_back(to_json(r));
    j["cells"] = std::move(cells);
    emit(j);
  } else {
    std::cout << "persistence scan " << ideal_name(c.n, c.t) << ", k = 1.." << c.kmax << '\n';
    std::cout << "chain sizes:";
    for (auto s : p.chain_sizes) std::cout << ' ' << s;
    std::cout << '\n';
    if (p.first_violation)
      std::cout << "VIOLATION: Ass(I^" << *p.first_violation << ") is not contained in Ass(I^"
                << *p.first_violation + 1 << ")\n";
    else if (!p.complete)
      std::cout << "incomplete: a cell exceeded its budget (SKIPPED); no violation among evaluated powers\n";
    else
      std::cout << "all inclusions hold\n";
  }
  return p.first_violation ? kExitFail : kExitPass;
}

int cmd_astab(const Common& c, Format f) {
  const AstabResult a = empirical_astab(c.n, c.t, c.kmax, verify_options(c));
  const bool mismatch = a.value && *a.value != a.predicted;
  if (f == Format::Structured) {
    Json j;
    j["n"] = c.n;
    j["t"] = c.t;
    j["kmax"] = c.kmax;
    j["chain_sizes"] = a.chain_sizes;
    j["empirical"] = a.value ? Json(*a.value) : Json(a.undetermined ? "UNDETERMINED" : "SKIPPED");
    j["predicted"] = a.predicted;
    j["matches"] = a.matches_prediction();
    emit(j);
  } else {
    std::cout << "astab scan " << ideal_name(c.n, c.t) << ", k = 1.." << c.kmax << '\n';
    std::cout << "empirical: ";
    if (a.value)
      std::cout << *a.value;
    else
      std::cout << (a.undetermined ? "UNDETERMINED (stabilization not certified below kmax)" : "SKIPPED");
    std::cout << "\npredicted: " << a.predicted << '\n';
  }
  return mismatch ? kExitFail : kExitPass;
}

int cmd_scan(const Common& c, Format f) {
  GridConfig config;
  {
    std::ifstream in(c.config_path);
    if (!in) {
      std::cerr << "error: cannot read config " << c.config_path << '\n';
      return kExitUsage;
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: config is not valid JSON: " << e.what() << '\n';
      return kExitUsage;
    }
    config = grid_config_from_json(doc);
  }
  if (c.parallelism > 0) {
    config.parallelism = c.parallelism;
    config.validate();
  }

  std::ofstream out(c.out_path, std::ios::binary | std::ios::trunc);
  std::ofstream table(c.out_path + ".txt", std::ios::binary | std::ios::trunc);
  std::ofstream timing(c.out_path + ".timing.json", std::ios::binary | std::ios::trunc);
  if (!out || !table || !timing) {
    std::cerr << "error: cannot write report to " << c.out_path << '\n';
    return kExitUsage;
  }

  const GridResult result = grid_scan(config);
  out << scan_document(result).dump(2) << '\n';
  table << render_table(result);
  timing << timing_document(result).dump(2) << '\n';
  if (!out.flush() || !table.flush() || !timing.flush()) {
    std::cerr << "error: failed writing report files\n";
    return kExitUsage;
  }

  if (f == Format::Structured)
    emit(scan_document(result)["summary"]);
  else
    std::cout << render_table(result);
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"indpath: associated primes of powers of path independence ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  Common c;
  auto add_nt = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of path vertices")->required()->check(CLI::Range(1, kMaxPathVertices));
    sub->add_option("--t", c.t, "Independent set size")->required()->check(CLI::Range(1, kMaxPathVertices));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-ms", c.budget_ms, "Per-cell wall time budget in milliseconds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Print the minimal generators of Ind_t(P_n)");
  add_nt(gen);

  auto* ass = app.add_subcommand("ass", "Compute Ass(I^k) and compare it with the closed form");
  add_nt(ass);
  ass->add_option("--k", c.k, "Power")->required()->check(CLI::PositiveNumber);
  ass->add_option("--method", c.method, "Verification method")
      ->check(CLI::IsMember({"decomposition", "witness", "witness-only"}))
      ->capture_default_str();
  add_budget(ass);

  auto* predict = app.add_subcommand("predict", "Closed-form Ass(I^k), astab and stable set");
  add_nt(predict);
  predict->add_option("--k", c.k, "Power")->required()->check(CLI::PositiveNumber);

  auto* decompose = app.add_subcommand("decompose", "Irreducible decomposition of I^k");
  add_nt(decompose);
  decompose->add_option("--k", c.k, "Power")->required()->check(CLI::PositiveNumber);
  add_budget(decompose);

  auto* persistence = app.add_subcommand("persistence", "Check Ass(I^k) ⊆ Ass(I^{k+1}) for k < kmax");
  add_nt(persistence);
  persistence->add_option("--kmax", c.kmax, "Largest power")->required()->check(CLI::Range(2, 64));
  add_budget(persistence);

  auto* astab = app.add_subcommand("astab", "Empirical index of stability up to kmax");
  add_nt(astab);
  astab->add_option("--kmax", c.kmax, "Largest power")->required()->check(CLI::Range(1, 64));
  add_budget(astab);

  auto* scan = app.add_subcommand("scan", "Run a verification grid from a JSON config");
  scan->add_option("--config", c.config_path, "Grid config (JSON)")->required();
  scan->add_option("--out", c.out_path, "Structured report path; .txt and .timing.json siblings are written too")
      ->required();
  scan->add_option("--parallelism", c.parallelism, "Override the config's parallelism")
      ->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Format f = format == "structured" ? Format::Structured : Format::Text;
  try {
    if (*gen) return cmd_gen(c, f);
    if (*ass) return cmd_ass(c, f);
    if (*predict) return cmd_predict(c, f);
    if (*decompose) return cmd_decompose(c, f);
    if (*persistence) return cmd_persistence(c, f);
    if (*astab) return cmd_astab(c, f);
    if (*scan) return cmd_scan(c, f);
  } catch (const BudgetExceeded& e) {
    std::cerr << "skipped: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
