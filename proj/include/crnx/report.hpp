#pragma once

// JSON and text reports for verdicts, and the Petri-net JSON form.

#include <string>

#include <json.hpp>

#include "crnx/engine.hpp"

namespace crnx {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Self-contained: read_report(network, report_json(...)) restores a verdict
// that verify_verdict can audit.
Json report_json(const ReactionNetwork& net, const Verdict& verdict);
Verdict read_report(const ReactionNetwork& net, const Json& report);

// Human summary naming the transient complexes and the true reactions of
// the unbalanced forest.
std::string report_text(const ReactionNetwork& net, const Verdict& verdict);

enum class ReportFormat { kJson, kText };
std::string emit_report(const ReactionNetwork& net, const Verdict& verdict, ReportFormat format);

// {"places": [...], "transitions": [{"name", "inputs": {place: n}, "outputs": {...}}]}
Json petri_export(const ReactionNetwork& net);
// Throws InputError for malformed documents or negative multiplicities.
ReactionNetwork petri_import(const Json& doc);

}  // namespace crnx
