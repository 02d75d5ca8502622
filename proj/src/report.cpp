#include "mia/report.hpp"

#include <sstream>

namespace mia {

using nlohmann::json;

json report_envelope(const std::string& command) {
  json j;
  j["format"] = "report-v1";
  j["command"] = command;
  return j;
}

json to_json(const ConformanceWitness& witness) {
  json j;
  j["witness_trace"] = trace_to_string(witness.trace);
  j["missing_or_extra_symbol"] = witness.symbol;
  j["symbol_kind"] = witness.missing ? "missing" : "extra";
  j["clause"] = std::string(clause_name(witness.clause));
  return j;
}

json to_json(const ConformanceVerdict& verdict) {
  json j;
  j["holds"] = verdict.holds;
  if (verdict.witness) {
    json w = to_json(*verdict.witness);
    j["clause"] = w["clause"];
    j["witness_trace"] = w["witness_trace"];
    j["missing_or_extra_symbol"] = w["missing_or_extra_symbol"];
    j["symbol_kind"] = w["symbol_kind"];
  }
  j["stats"]["subset_pairs"] = verdict.stats.subset_pairs;
  j["stats"]["max_depth"] = verdict.stats.max_depth;
  return j;
}

json to_json(const ValidationReport& report) {
  json j;
  j["ok"] = report.ok;
  j["violations"] = json::array();
  for (const Violation& v : report.violations) {
    j["violations"].push_back(
        {{"rule", v.rule}, {"subject", v.subject}, {"message", v.message}});
  }
  j["warnings"] = report.warnings;
  return j;
}

json to_json(const RefinementResult& result) {
  json j;
  j["holds"] = result.holds;
  j["relation_size"] = result.relation.size();
  j["relation"] = json::array();
  for (const auto& [p, q] : result.relation)
    j["relation"].push_back({{"refined", p}, {"abstract", q}});
  j["refutation"] = json::array();
  for (const RefinementStep& step : result.refutation) {
    j["refutation"].push_back({{"refined", step.refined_state},
                               {"abstract", step.abstract_state},
                               {"clause", step.clause},
                               {"action", step.action}});
  }
  j["stats"]["pairs_total"] = result.pairs_total;
  j["stats"]["rounds"] = result.rounds;
  return j;
}

json to_json(const VariantCheckResult& result) {
  json j;
  j["holds"] = result.holds;
  if (!result.reason.empty()) j["reason"] = result.reason;
  if (result.offending_transition) {
    const Transition& t = *result.offending_transition;
    j["offending_transition"] = t.source + " " + t.action + " " + t.target;
  }
  return j;
}

json to_json(const HarnessReport& report) {
  json j;
  j["check"] = report.check;
  j["status"] = std::string(harness_status_name(report.status));
  j["variants_checked"] = report.variants_checked;
  if (!report.variant_total.empty()) j["variant_total"] = report.variant_total;
  j["sampled"] = report.sampled;
  if (!report.note.empty()) j["note"] = report.note;
  j["cap"] = report.cap;
  j["seed"] = report.seed;
  j["violations"] = json::array();
  for (const HarnessViolation& v : report.violations) {
    json vj;
    vj["variant_mask"] = v.variant_mask;
    vj["detail"] = v.detail;
    if (v.witness) vj["witness"] = to_json(*v.witness);
    j["violations"].push_back(std::move(vj));
  }
  return j;
}

std::string annotate_delta(const std::string& token,
                           ConformanceClause clause) {
  if (token != kDeltaToken) return token;
  switch (clause) {
    case ConformanceClause::kMayInclusion:
      return "delta[may]";
    case ConformanceClause::kMustInclusion:
      return "delta[must]";
    case ConformanceClause::kClassic:
      return token;
  }
  return token;
}

namespace {

ConformanceClause clause_from_name(const std::string& name) {
  if (name == "may-inclusion") return ConformanceClause::kMayInclusion;
  if (name == "must-inclusion") return ConformanceClause::kMustInclusion;
  return ConformanceClause::kClassic;
}

void render_witness(std::ostringstream& os, const json& j) {
  ConformanceClause clause =
      clause_from_name(j.value("clause", std::string("classic")));
  os << "  clause: " << j.value("clause", std::string("classic")) << "\n";
  std::istringstream tokens(j.value("witness_trace", std::string()));
  std::string tok;
  std::string annotated;
  while (tokens >> tok) {
    if (!annotated.empty()) annotated += ' ';
    annotated += annotate_delta(tok, clause);
  }
  os << "  witness trace: " << (annotated.empty() ? "<empty>" : annotated)
     << "\n";
  std::string symbol = j.value("missing_or_extra_symbol", std::string());
  os << "  " << j.value("symbol_kind", std::string("offending")) << " symbol: "
     << annotate_delta(symbol, clause) << "\n";
}

}  // namespace

std::string render_human(const json& report) {
  std::ostringstream os;
  const std::string command = report.value("command", std::string("?"));

  if (report.contains("validation")) {
    const json& v = report["validation"];
    os << command << ": " << (v["ok"].get<bool>() ? "valid" : "INVALID")
       << "\n";
    for (const json& viol : v["violations"]) {
      os << "  [" << viol["rule"].get<std::string>() << "] "
         << viol["message"].get<std::string>() << "\n";
    }
    for (const json& w : v["warnings"])
      os << "  warning: " << w.get<std::string>() << "\n";
  }

  if (report.contains("verdict")) {
    const json& v = report["verdict"];
    os << command << ": " << (v["holds"].get<bool>() ? "holds" : "FAILS")
       << "\n";
    if (v.contains("witness_trace")) render_witness(os, v);
    if (v.contains("stats")) {
      os << "  explored subset pairs: " << v["stats"]["subset_pairs"]
         << " (max depth " << v["stats"]["max_depth"] << ")\n";
    }
  }

  if (report.contains("refinement")) {
    const json& r = report["refinement"];
    os << command << ": " << (r["holds"].get<bool>() ? "holds" : "FAILS")
       << "\n";
    os << "  relation pairs: " << r["relation_size"] << "\n";
    if (!r["refutation"].empty()) {
      os << "  refutation (clause 1: unmatched mandatory transition, "
            "clause 2: disallowed output):\n";
      for (const json& step : r["refutation"]) {
        os << "    (" << step["refined"].get<std::string>() << ", "
           << step["abstract"].get<std::string>() << ") clause "
           << step["clause"] << " on '" << step["action"].get<std::string>()
           << "'\n";
      }
    }
  }

  if (report.contains("variant_check")) {
    const json& r = report["variant_check"];
    os << command << ": "
       << (r["holds"].get<bool>() ? "is a variant" : "NOT a variant") << "\n";
    if (r.contains("reason"))
      os << "  " << r["reason"].get<std::string>() << "\n";
    if (r.contains("offending_transition"))
      os << "  offending transition: "
         << r["offending_transition"].get<std::string>() << "\n";
  }

  if (report.contains("harness")) {
    const json& h = report["harness"];
    os << command << " " << h["check"].get<std::string>() << ": "
       << h["status"].get<std::string>() << "\n";
    if (h.contains("note")) os << "  " << h["note"].get<std::string>() << "\n";
    if (h.contains("variant_total"))
      os << "  variants: " << h["variants_checked"] << " checked of "
         << h["variant_total"].get<std::string>()
         << (h["sampled"].get<bool>() ? " (sampled)" : "") << "\n";
    for (const json& v : h["violations"]) {
      os << "  VIOLATION variant mask " << v["variant_mask"].get<std::string>()
         << ": " << v["detail"].get<std::string>() << "\n";
      if (v.contains("witness")) render_witness(os, v["witness"]);
    }
  }

  if (report.contains("enabledness")) {
    const json& e = report["enabledness"];
    os << "input-enabled: " << (e["enabled"].get<bool>() ? "yes" : "no")
       << "\n";
    for (const json& m : e["missing"]) {
      os << "  missing: (" << m[0].get<std::string>() << ", "
         << m[1].get<std::string>() << ")\n";
    }
  }

  if (report.contains("variants")) {
    const json& v = report["variants"];
    os << "optional transitions: " << v["optional_count"] << "\n";
    os << "variant count: " << v["variant_total"].get<std::string>() << "\n";
    if (v.contains("truncated") && v["truncated"].get<bool>())
      os << "listing truncated at cap " << v["cap"] << "\n";
    if (v.contains("list")) {
      for (const json& item : v["list"]) {
        os << "  variant " << item["mask"].get<std::string>() << ": "
           << item["transitions"] << " transitions\n";
      }
    }
  }

  if (report.contains("message"))
    os << report["message"].get<std::string>() << "\n";

  return os.str();
}

}  // namespace mia
