#pragma once

#include <string>

#include <json.hpp>

#include "mia/conformance.hpp"
#include "mia/family.hpp"
#include "mia/model.hpp"
#include "mia/refinement.hpp"

namespace mia {

/// Machine-readable reports, schema "report-v1". Every command builds one
/// JSON value; the human rendering is derived from that same value, so the
/// two outputs can never disagree. JSON bytes are stable across runs for
/// fixed inputs and seeds (keys are sorted, no timing data inside).
nlohmann::json report_envelope(const std::string& command);

nlohmann::json to_json(const ConformanceWitness& witness);
nlohmann::json to_json(const ConformanceVerdict& verdict);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const RefinementResult& result);
nlohmann::json to_json(const VariantCheckResult& result);
nlohmann::json to_json(const HarnessReport& report);

/// Annotates the quiescence token with its modality where it matters, e.g.
/// "delta[must]" inside a must-inclusion witness. Human rendering only;
/// JSON keeps the plain token (the clause field already carries the
/// modality).
std::string annotate_delta(const std::string& token, ConformanceClause clause);

std::string render_human(const nlohmann::json& report);

}  // namespace mia
