#include "indpath/report.hpp"

#include <sstream>

namespace indpath {
namespace {

Json primes_json(const std::vector<VarPrime>& primes) {
  Json arr = Json::array();
  for (const auto& p : primes) arr.push_back(to_json(p));
  return arr;
}

std::string primes_text(const std::vector<VarPrime>& primes) {
  if (primes.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ' ';
    out += primes[i].to_string();
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string optional_bool(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "yes" : "NO";
}

std::pair<int, int> read_range(const nlohmann::json& v, const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw ConfigError(std::string(key) + " must be an array [min, max] of integers");
  return {v[0].get<int>(), v[1].get<int>()};
}

}  // namespace

Json to_json(const MonomialIdeal& I) {
  Json j;
  j["nvars"] = I.nvars();
  j["gens"] = I.gen_strings();
  return j;
}

Json to_json(const VarPrime& P) { return P.vars(); }

Json to_json(const IrreducibleComponent& Q) { return Q.generator_strings(); }

Json to_json(const VerificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["t"] = r.t;
  j["k"] = r.k;
  j["case"] = case_name(r.tag);
  j["method"] = method_name(r.method);
  j["verdict"] = verdict_name(r.verdict);
  j["predicted_count"] = r.predicted_count();
  if (auto c = r.computed_count())
    j["computed_count"] = *c;
  else
    j["computed_count"] = nullptr;
  j["missing"] = primes_json(r.missing);
  j["extra"] = primes_json(r.extra);
  if (r.persistence)
    j["persistence"] = *r.persistence;
  else
    j["persistence"] = nullptr;
  j["one_sided"] = r.one_sided;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json e;
    e["prime"] = to_json(w.prime);
    if (w.witness)
      e["witness"] = w.witness->to_string();
    else
      e["witness"] = nullptr;
    e["passed"] = w.passed;
    e["reason"] = w.reason;
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  j["note"] = r.note;
  return j;
}

Json to_json(const GridConfig& c) {
  Json j;
  j["t_range"] = {c.t_range.first, c.t_range.second};
  j["n_range"] = {c.n_range.first, c.n_range.second};
  j["k_range"] = {c.k_range.first, c.k_range.second};
  j["method"] = method_name(c.method);
  j["cell_budget_ms"] = c.cell_budget.count();
  j["parallelism"] = c.parallelism;
  j["cache_capacity"] = c.cache_capacity;
  return j;
}

GridConfig grid_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  GridConfig c;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    const auto& v = it.value();
    if (key == "t_range") {
      c.t_range = read_range(v, "t_range");
    } else if (key == "n_range") {
      c.n_range = read_range(v, "n_range");
    } else if (key == "k_range") {
      c.k_range = read_range(v, "k_range");
    } else if (key == "method") {
      if (!v.is_string()) throw ConfigError("method must be a string");
      try {
        c.method = parse_method(v.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "cell_budget_ms") {
      if (!v.is_number_integer()) throw ConfigError("cell_budget_ms must be an integer");
      c.cell_budget = std::chrono::milliseconds(v.get<long long>());
    } else if (key == "parallelism") {
      if (!v.is_number_integer()) throw ConfigError("parallelism must be an integer");
      c.parallelism = v.get<int>();
    } else if (key == "cache_capacity") {
      if (!v.is_number_unsigned()) throw ConfigError("cache_capacity must be a positive integer");
      c.cache_capacity = v.get<std::size_t>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

Json scan_document(const GridResult& result) {
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  // parallelism lives in the timing sidecar so serial and parallel runs match byte for byte
  Json config = to_json(result.config);
  config.erase("parallelism");
  doc["config"] = std::move(config);
  Json cells = Json::array();
  for (const auto& r : result.cells) cells.push_back(to_json(r));
  doc["cells"] = std::move(cells);
  Json summary;
  summary["cells"] = result.cells.size();
  summary["pass"] = result.count(Verdict::Pass);
  summary["fail"] = result.count(Verdict::Fail);
  summary["skipped"] = result.count(Verdict::Skipped);
  summary["zero"] = result.count(Verdict::Zero);
  summary["exit_code"] = result.exit_code();
  doc["summary"] = std::move(summary);
  return doc;
}

Json timing_document(const GridResult& result) {
  Json doc;
  doc["tool"] = kToolName;
  doc["parallelism"] = result.config.parallelism;
  Json cells = Json::array();
  for (const auto& r : result.cells) {
    Json e;
    e["t"] = r.t;
    e["n"] = r.n;
    e["k"] = r.k;
    e["wall_time_ms"] = r.wall_time_ms;
    cells.push_back(std::move(e));
  }
  doc["cells"] = std::move(cells);
  return doc;
}

std::string render_table(const GridResult& result) {
  std::ostringstream os;
  os << kToolName << ' ' << kToolVersion << "  method=" << method_name(result.config.method) << "  t=["
     << result.config.t_range.first << ',' << result.config.t_range.second << "] n=["
     << result.config.n_range.first << ',' << result.config.n_range.second << "] k=["
     << result.config.k_range.first << ',' << result.config.k_range.second << "]\n";
  os << pad("t", 4) << pad("n", 4) << pad("k", 4) << pad("case", 17) << pad("pred", 6) << pad("comp", 6)
     << pad("miss", 6) << pad("extra", 7) << pad("persist", 9) << pad("witness", 9) << "verdict\n";
  for (const auto& r : result.cells) {
    std::size_t ok = 0;
    for (const auto& w : r.witnesses) ok += w.passed ? 1 : 0;
    const auto comp = r.computed_count();
    os << pad(std::to_string(r.t), 4) << pad(std::to_string(r.n), 4) << pad(std::to_string(r.k), 4)
       << pad(std::string(case_name(r.tag)), 17) << pad(std::to_string(r.predicted_count()), 6)
       << pad(comp ? std::to_string(*comp) : "-", 6) << pad(std::to_string(r.missing.size()), 6)
       << pad(std::to_string(r.extra.size()), 7) << pad(optional_bool(r.persistence), 9)
       << pad(std::to_string(ok) + "/" + std::to_string(r.witnesses.size()), 9) << verdict_name(r.verdict);
    if (r.one_sided) os << " (one-sided)";
    os << '\n';
  }
  os << "summary: " << result.count(Verdict::Pass) << " pass, " << result.count(Verdict::Fail) << " fail, "
     << result.count(Verdict::Skipped) << " skipped, " << result.count(Verdict::Zero) << " zero\n";
  return os.str();
}

std::string render_report(const VerificationReport& r) {
  std::ostringstream os;
  os << "Ind_" << r.t << "(P_" << r.n << ")^" << r.k << "  case " << case_name(r.tag) << "  method "
     << method_name(r.method) << '\n';
  os << "verdict: " << verdict_name(r.verdict) << '\n';
  if (r.verdict == Verdict::Zero || r.verdict == Verdict::Skipped) {
    if (!r.note.empty()) os << "note: " << r.note << '\n';
    return os.str();
  }
  os << "predicted (" << r.predicted.size() << "): " << primes_text(r.predicted) << '\n';
  if (r.computed) os << "computed (" << r.computed->size() << "): " << primes_text(*r.computed) << '\n';
  os << "missing: " << primes_text(r.missing) << '\n';
  os << "extra: " << primes_text(r.extra) << '\n';
  os << "persistence: " << optional_bool(r.persistence) << '\n';
  os << "witnesses:\n";
  for (const auto& w : r.witnesses) {
    os << "  " << pad(w.prime.to_string(), 24) << " u = " << (w.witness ? w.witness->to_string() : "-")
       << "  " << (w.passed ? "ok" : "FAILED: " + w.reason) << '\n';
  }
  if (!r.note.empty()) os << "note: " << r.note << '\n';
  os << "wall time: " << r.wall_time_ms << " ms\n";
  return os.str();
}

}  // namespace indpath
