#pragma once
// Text and structured (JSON) renderings of verification results.

#include <string>
#include <string_view>

#include "json.hpp"

#include "indpath/verify.hpp"

namespace indpath {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "indpath";
inline constexpr std::string_view kToolVersion = "1.0.0";

Json to_json(const MonomialIdeal& I);
Json to_json(const VarPrime& P);
Json to_json(const IrreducibleComponent& Q);
Json to_json(const VerificationReport& r);
Json to_json(const GridConfig& c);

/// Parses a scan config document. Missing keys keep their defaults; unknown
/// keys and malformed values raise ConfigError.
GridConfig grid_config_from_json(const nlohmann::json& doc);

/// Whole scan document: header, config echo, cells, summary. Contains no
/// timings, so it is byte-stable for a given config.
Json scan_document(const GridResult& result);
/// Wall times per cell, kept apart from the deterministic document.
Json timing_document(const GridResult& result);

std::string render_table(const GridResult& result);
std::string render_report(const VerificationReport& r);

}  // namespace indpath
