#include "qind/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qind/errors.hpp"

#ifndef QIND_VERSION
#define QIND_VERSION "0.0.0"
#endif

namespace qind {

namespace {

using nlohmann::json;

json rational_node(const Rational& value) { return value.to_string(); }

Rational rational_from_node(const json& node, const char* what) {
  if (node.is_string()) {
    if (auto r = Rational::parse(node.get<std::string>())) return *r;
  } else if (node.is_number_integer()) {
    return Rational{node.get<std::int64_t>()};
  }
  throw InputError(std::string("report: bad rational for ") + what);
}

// Attribute-level source summary: the verdict that established the achieved
// level speaks for the attribute; a level-0 attribute reports its first
// verdict (all unknown/defaulted means "defaulted").
const Verdict& deciding_verdict(const AttributeRating& rating) {
  if (rating.achieved_level >= 1) {
    return rating.verdicts[static_cast<size_t>(rating.achieved_level - 1)];
  }
  return rating.verdicts.front();
}

std::string first_note(const AttributeRating& rating) {
  for (const auto& v : rating.verdicts) {
    if (!v.note.empty()) return v.note;
  }
  return {};
}

std::string markdown_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string tool_version() { return QIND_VERSION; }

json report_to_json(const Assessment& assessment, const Rubric& rubric,
                    const WeightScheme& weights, const EvidenceSet* evidence) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool"] = {{"name", "qind"}, {"version", tool_version()}};
  doc["rubric"] = {{"id", rubric.id}, {"title", rubric.title}, {"max_level", rubric.max_level}};
  doc["target"] = {{"identifier", assessment.target.identifier},
                   {"kind", assessment.target.kind},
                   {"label", assessment.target.label},
                   {"timestamp", assessment.target.timestamp}};

  json ratings = json::array();
  std::set<std::string> referenced_facts;
  for (const auto& rating : assessment.ratings) {
    json verdicts = json::array();
    for (const auto& v : rating.verdicts) {
      verdicts.push_back({{"level", v.level},
                          {"status", to_string(v.status)},
                          {"source", to_string(v.source)},
                          {"evidence", v.evidence_refs},
                          {"note", v.note}});
      referenced_facts.insert(v.evidence_refs.begin(), v.evidence_refs.end());
    }
    const Dimension* dim = rubric.dimension_of(rating.attribute_id);
    ratings.push_back({{"attribute", rating.attribute_id},
                       {"dimension", dim ? dim->id : ""},
                       {"achieved_level", rating.achieved_level},
                       {"max_level", rubric.max_level},
                       {"anomalies", rating.anomalies},
                       {"verdicts", std::move(verdicts)}});
  }
  doc["ratings"] = std::move(ratings);

  json scores = json::array();
  for (const auto& score : assessment.dimension_scores) {
    scores.push_back({{"dimension", score.dimension_id},
                      {"score", rational_node(score.score)},
                      {"score_display", score.score.to_decimal(2)},
                      {"minimum", rational_node(weights.minimum_for(score.dimension_id))},
                      {"meets_minimum", score.meets_minimum}});
  }
  doc["dimension_scores"] = std::move(scores);

  if (assessment.overall) {
    doc["overall"] = {{"value", rational_node(*assessment.overall)},
                      {"value_display", assessment.overall->to_decimal(2)}};
  } else {
    doc["overall"] = nullptr;
  }
  doc["passes_all_minimums"] = assessment.passes_all_minimums;

  if (evidence) {
    json facts = json::object();
    for (const auto& fact_id : referenced_facts) {
      const Fact* fact = evidence->find(fact_id);
      if (!fact) continue;
      facts[fact_id] = {{"value", fact->value},
                        {"collector", fact->provenance.collector},
                        {"source", fact->provenance.source},
                        {"retrieved_at", fact->provenance.retrieved_at}};
    }
    doc["evidence"] = std::move(facts);
    json failures = json::array();
    for (const auto& failure : evidence->failures) {
      failures.push_back({{"collector", failure.collector}, {"reason", failure.reason}});
    }
    doc["failures"] = std::move(failures);
  }
  return doc;
}

std::string emit_report_json(const Assessment& assessment, const Rubric& rubric,
                             const WeightScheme& weights, const EvidenceSet* evidence) {
  return report_to_json(assessment, rubric, weights, evidence).dump(2) + "\n";
}

ParsedReport parse_report(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rubric") || !doc.contains("ratings")) {
    throw InputError("report: not an assessment report document");
  }

  ParsedReport out;
  out.rubric_id = doc["rubric"].value("id", "");

  Assessment& a = out.assessment;
  const json& target = doc.at("target");
  a.target.identifier = target.value("identifier", "");
  a.target.kind = target.value("kind", "");
  a.target.label = target.value("label", "");
  a.target.timestamp = target.value("timestamp", "");
  a.target.rubric_id = out.rubric_id;

  for (const json& rn : doc.at("ratings")) {
    AttributeRating rating;
    rating.attribute_id = rn.value("attribute", "");
    rating.achieved_level = rn.value("achieved_level", 0);
    for (const json& an : rn.value("anomalies", json::array())) {
      rating.anomalies.push_back(an.get<int>());
    }
    for (const json& vn : rn.at("verdicts")) {
      Verdict v;
      v.level = vn.value("level", 0);
      auto status = verdict_status_from_string(vn.value("status", ""));
      auto source = verdict_source_from_string(vn.value("source", ""));
      if (!status || !source) {
        throw InputError("report: bad verdict status/source for '" + rating.attribute_id + "'");
      }
      v.status = *status;
      v.source = *source;
      for (const json& ref : vn.value("evidence", json::array())) {
        v.evidence_refs.push_back(ref.get<std::string>());
      }
      v.note = vn.value("note", "");
      rating.verdicts.push_back(std::move(v));
    }
    a.ratings.push_back(std::move(rating));
  }

  for (const json& sn : doc.at("dimension_scores")) {
    DimensionScore score;
    score.dimension_id = sn.value("dimension", "");
    score.score = rational_from_node(sn.at("score"), "dimension score");
    score.meets_minimum = sn.value("meets_minimum", true);
    if (sn.contains("minimum")) {
      out.minimums[score.dimension_id] = rational_from_node(sn["minimum"], "minimum");
    }
    a.dimension_scores.push_back(std::move(score));
  }

  if (doc.contains("overall") && !doc["overall"].is_null()) {
    a.overall = rational_from_node(doc["overall"].at("value"), "overall");
  }
  a.passes_all_minimums = doc.value("passes_all_minimums", true);
  return out;
}

std::string emit_report_markdown(const Assessment& assessment, const Rubric& rubric,
                                 const WeightScheme& weights) {
  std::ostringstream md;
  const std::string label =
      assessment.target.label.empty() ? assessment.target.identifier : assessment.target.label;
  md << "# Quality assessment: " << label << "\n\n";
  md << "- Rubric: " << rubric.title << " (`" << rubric.id << "`), levels 0-"
     << rubric.max_level << "\n";
  md << "- Target: " << assessment.target.identifier << " (" << assessment.target.kind
     << ")\n";
  if (!assessment.target.timestamp.empty()) {
    md << "- Assessed: " << assessment.target.timestamp << "\n";
  }
  md << "- Passes all dimension minimums: "
     << (assessment.passes_all_minimums ? "yes" : "no") << "\n";
  if (assessment.overall) {
    md << "- Overall indicator: " << assessment.overall->to_decimal(2) << "\n";
  }
  md << "\n";

  for (const auto& dim : rubric.dimensions) {
    const DimensionScore* score = assessment.find_score(dim.id);
    md << "## " << dim.title << "\n\n";
    if (score) {
      md << "Score: **" << score->score.to_decimal(2) << "** / " << rubric.max_level
         << " (minimum " << weights.minimum_for(dim.id).to_decimal(2) << ", "
         << (score->meets_minimum ? "✓ met" : "✗ not met") << ")\n\n";
    }
    md << "| Attribute | Level | Max | Source | Justification |\n";
    md << "|---|---:|---:|---|---|\n";
    for (const auto& attr : dim.attributes) {
      const AttributeRating* rating = assessment.find_rating(attr.id);
      if (!rating) continue;
      const Verdict& deciding = deciding_verdict(*rating);
      std::string note = deciding.note.empty() ? first_note(*rating) : deciding.note;
      md << "| " << markdown_escape(attr.title) << " | " << rating->achieved_level << " | "
         << rubric.max_level << " | " << to_string(deciding.source) << " | "
         << markdown_escape(note) << " |\n";
    }
    md << "\n";
  }

  bool any_anomaly = false;
  for (const auto& rating : assessment.ratings) {
    if (!rating.anomalies.empty()) any_anomaly = true;
  }
  if (any_anomaly) {
    md << "## Anomalies\n\n";
    md << "Statements satisfied above the first gap; they do not raise the level "
          "and deserve a human look.\n\n";
    for (const auto& rating : assessment.ratings) {
      if (rating.anomalies.empty()) continue;
      const Attribute* attr = rubric.find_attribute(rating.attribute_id);
      md << "- " << (attr ? attr->title : rating.attribute_id) << ": level"
         << (rating.anomalies.size() > 1 ? "s" : "") << " ";
      for (size_t i = 0; i < rating.anomalies.size(); ++i) {
        if (i > 0) md << ", ";
        md << rating.anomalies[i];
      }
      md << " satisfied while level " << rating.achieved_level + 1 << " is not\n";
    }
    md << "\n";
  }
  return md.str();
}

std::vector<std::string> maturity_scale_lines(const Rubric& rubric) {
  if (rubric.id == "fairst" || (rubric.max_level == 5 && !is_builtin_rubric(rubric.id))) {
    return {
        "(0) Non-existent: no information available",
        "(1) Initial: initial information available being obtained in an ad-hoc, "
        "unorganized manner",
        "(2) Repeatable: the information is complete, being produced in a repeatable, yet "
        "intuitive manner",
        "(3) Defined: a process is established guaranteeing the complete compilation of the "
        "required information",
        "(4) Managed: the process being established is managed, i.e. monitoring/measuring "
        "is included",
        "(5) Optimized: practices are put in place optimizing the way the process is "
        "operated, leading to improved quality over time",
    };
  }
  if (rubric.id == "pocme") {
    return {
        "(0) Non-existent: no information available or not applied",
        "(1) Most necessary information provided or measure taken",
        "(2) Basic information provided or measure taken (sensible level of "
        "information/measures)",
        "(3) Advanced information provided or measure taken, allowing to generally "
        "understand and (re)use the published data",
        "(4) Complete and accurate information provided or measure taken, to an extend "
        "that allows maximal understanding and usage of data",
    };
  }
  std::vector<std::string> lines;
  for (int level = 0; level <= rubric.max_level; ++level) {
    lines.push_back("(" + std::to_string(level) + ") Level " + std::to_string(level));
  }
  return lines;
}

}  // namespace qind
