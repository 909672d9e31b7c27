#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "qind/evidence.hpp"
#include "qind/rubric.hpp"
#include "qind/scoring.hpp"

namespace qind {

// Assessment report schema version; bumped on breaking layout changes.
inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();

// Canonical JSON document: stable key order, exact scores as "n/d" strings,
// two-decimal display values alongside. parse_report() restores the exact
// Assessment (round-trip identity).
nlohmann::json report_to_json(const Assessment& assessment, const Rubric& rubric,
                              const WeightScheme& weights,
                              const EvidenceSet* evidence = nullptr);
std::string emit_report_json(const Assessment& assessment, const Rubric& rubric,
                             const WeightScheme& weights,
                             const EvidenceSet* evidence = nullptr);

struct ParsedReport {
  Assessment assessment;
  std::string rubric_id;
  std::map<std::string, Rational> minimums;  // per-dimension, as reported
};
ParsedReport parse_report(const std::string& json_text);

// Human-readable Markdown: one pipe table per dimension, score summary with
// minimum marks, sources and justifications, anomaly section when present.
std::string emit_report_markdown(const Assessment& assessment, const Rubric& rubric,
                                 const WeightScheme& weights);

// Level names of the underlying maturity scale, for display only.
std::vector<std::string> maturity_scale_lines(const Rubric& rubric);

}  // namespace qind
