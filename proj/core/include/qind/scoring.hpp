#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qind/rational.hpp"
#include "qind/rubric.hpp"

namespace qind {

enum class VerdictStatus { Satisfied, Unsatisfied, Unknown };
enum class VerdictSource { Auto, Manual, Defaulted };

std::string to_string(VerdictStatus s);
std::string to_string(VerdictSource s);
std::optional<VerdictStatus> verdict_status_from_string(std::string_view s);
std::optional<VerdictSource> verdict_source_from_string(std::string_view s);

struct Verdict {
  int level = 0;
  VerdictStatus status = VerdictStatus::Unknown;
  VerdictSource source = VerdictSource::Defaulted;
  std::vector<std::string> evidence_refs;
  std::string note;

  bool operator==(const Verdict&) const = default;
};

struct AttributeRating {
  std::string attribute_id;
  int achieved_level = 0;            // longest all-satisfied prefix
  std::vector<Verdict> verdicts;     // one per level 1..max_level, ordered
  std::vector<int> anomalies;        // satisfied levels above the first gap

  bool operator==(const AttributeRating&) const = default;
};

struct WeightScheme {
  std::map<std::string, Rational> attribute_weights;
  std::map<std::string, Rational> dimension_minimums;   // absent -> 0
  std::map<std::string, Rational> dimension_weights;    // empty -> unset
  bool strict_minimum = false;  // compare score > minimum instead of >=

  // Fills attribute_weights with rubric defaults for attributes not set yet
  // and validates ranges; throws InputError on nonpositive weights or
  // minimums outside [0, max_level].
  void fill_defaults(const Rubric& rubric);
  static WeightScheme defaults_for(const Rubric& rubric);

  Rational minimum_for(const std::string& dimension_id) const;
};

struct DimensionScore {
  std::string dimension_id;
  Rational score;             // sum(w*m) / sum(w), in [0, max_level]
  bool meets_minimum = true;

  bool operator==(const DimensionScore&) const = default;
};

struct TargetDescriptor {
  std::string identifier;   // path, URL, or PID as given
  std::string kind;         // "data" | "software"
  std::string rubric_id;
  std::string label;        // display label, defaults to identifier
  std::string timestamp;    // optional, caller-supplied; empty keeps output reproducible

  bool operator==(const TargetDescriptor&) const = default;
};

struct Assessment {
  TargetDescriptor target;
  std::vector<AttributeRating> ratings;          // one per rubric attribute, rubric order
  std::vector<DimensionScore> dimension_scores;  // one per rubric dimension, rubric order
  std::optional<Rational> overall;
  bool passes_all_minimums = true;

  const AttributeRating* find_rating(std::string_view attribute_id) const;
  const DimensionScore* find_score(std::string_view dimension_id) const;

  bool operator==(const Assessment&) const = default;
};

enum class OverallMode { None, Threshold, Weighted };

std::optional<OverallMode> overall_mode_from_string(std::string_view s);
std::string to_string(OverallMode mode);

// Maturity = longest prefix of satisfied statements; Unknown and Unsatisfied
// both end the prefix, satisfied levels beyond it are kept as anomalies.
// `verdicts` must cover levels 1..max_level exactly once, in order.
AttributeRating rate_attribute(std::string attribute_id, std::vector<Verdict> verdicts,
                               int max_level);

// Percentage from an external assessment tool -> maturity bucket.
// 0 at percent <= 20, then one level per further 20 points (half-open).
int map_external_score(const Rational& percent);

DimensionScore aggregate_dimension(const Dimension& dimension,
                                   const std::vector<AttributeRating>& ratings,
                                   const WeightScheme& weights);

std::optional<Rational> overall_indicator(const std::vector<DimensionScore>& scores,
                                          OverallMode mode, const WeightScheme& weights);

struct KpiCounts {
  int passing = 0;
  int total = 0;

  bool operator==(const KpiCounts&) const = default;
};

// Number of assessments meeting the minimum in every dimension. All
// assessments must share one rubric; minimums come from `weights`.
KpiCounts count_above_minimum(const std::vector<Assessment>& assessments,
                              const WeightScheme& weights);

// Full pipeline from verdicts to an Assessment (rate, aggregate, overall).
Assessment score_assessment(const Rubric& rubric, TargetDescriptor target,
                            const std::map<std::string, std::vector<Verdict>>& verdicts,
                            const WeightScheme& weights, OverallMode mode);

}  // namespace qind
