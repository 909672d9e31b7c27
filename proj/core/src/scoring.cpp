#include "qind/scoring.hpp"

#include <algorithm>

#include "qind/errors.hpp"

namespace qind {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Satisfied: return "satisfied";
    case VerdictStatus::Unsatisfied: return "unsatisfied";
    case VerdictStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(VerdictSource s) {
  switch (s) {
    case VerdictSource::Auto: return "auto";
    case VerdictSource::Manual: return "manual";
    case VerdictSource::Defaulted: return "defaulted";
  }
  return "defaulted";
}

std::optional<VerdictStatus> verdict_status_from_string(std::string_view s) {
  if (s == "satisfied") return VerdictStatus::Satisfied;
  if (s == "unsatisfied") return VerdictStatus::Unsatisfied;
  if (s == "unknown") return VerdictStatus::Unknown;
  return std::nullopt;
}

std::optional<VerdictSource> verdict_source_from_string(std::string_view s) {
  if (s == "auto") return VerdictSource::Auto;
  if (s == "manual") return VerdictSource::Manual;
  if (s == "defaulted") return VerdictSource::Defaulted;
  return std::nullopt;
}

std::optional<OverallMode> overall_mode_from_string(std::string_view s) {
  if (s == "none") return OverallMode::None;
  if (s == "threshold") return OverallMode::Threshold;
  if (s == "weighted") return OverallMode::Weighted;
  return std::nullopt;
}

std::string to_string(OverallMode mode) {
  switch (mode) {
    case OverallMode::None: return "none";
    case OverallMode::Threshold: return "threshold";
    case OverallMode::Weighted: return "weighted";
  }
  return "none";
}

void WeightScheme::fill_defaults(const Rubric& rubric) {
  for (const auto& dim : rubric.dimensions) {
    for (const auto& attr : dim.attributes) {
      auto [it, inserted] = attribute_weights.try_emplace(attr.id, attr.default_weight);
      (void)inserted;
      if (it->second.is_zero() || it->second.is_negative()) {
        throw InputError("weight for attribute '" + attr.id + "' must be positive, got " +
                         it->second.to_string());
      }
    }
  }
  const Rational max{rubric.max_level};
  for (const auto& [dim_id, minimum] : dimension_minimums) {
    if (minimum.is_negative() || minimum > max) {
      throw InputError("minimum for dimension '" + dim_id + "' outside [0, " +
                       max.to_string() + "]: " + minimum.to_string());
    }
  }
  for (const auto& [dim_id, weight] : dimension_weights) {
    if (weight.is_zero() || weight.is_negative()) {
      throw InputError("weight for dimension '" + dim_id + "' must be positive, got " +
                       weight.to_string());
    }
  }
}

WeightScheme WeightScheme::defaults_for(const Rubric& rubric) {
  WeightScheme scheme;
  scheme.fill_defaults(rubric);
  return scheme;
}

Rational WeightScheme::minimum_for(const std::string& dimension_id) const {
  auto it = dimension_minimums.find(dimension_id);
  return it == dimension_minimums.end() ? Rational{0} : it->second;
}

const AttributeRating* Assessment::find_rating(std::string_view attribute_id) const {
  for (const auto& r : ratings) {
    if (r.attribute_id == attribute_id) return &r;
  }
  return nullptr;
}

const DimensionScore* Assessment::find_score(std::string_view dimension_id) const {
  for (const auto& s : dimension_scores) {
    if (s.dimension_id == dimension_id) return &s;
  }
  return nullptr;
}

AttributeRating rate_attribute(std::string attribute_id, std::vector<Verdict> verdicts,
                               int max_level) {
  if (static_cast<int>(verdicts.size()) != max_level) {
    throw ContractViolation("attribute '" + attribute_id + "': expected " +
                            std::to_string(max_level) + " verdicts, got " +
                            std::to_string(verdicts.size()));
  }
  for (int level = 1; level <= max_level; ++level) {
    if (verdicts[static_cast<size_t>(level - 1)].level != level) {
      throw ContractViolation("attribute '" + attribute_id +
                              "': verdicts must cover levels 1.." +
                              std::to_string(max_level) + " in order");
    }
  }

  AttributeRating rating;
  rating.attribute_id = std::move(attribute_id);
  rating.verdicts = std::move(verdicts);

  int achieved = 0;
  while (achieved < max_level &&
         rating.verdicts[static_cast<size_t>(achieved)].status == VerdictStatus::Satisfied) {
    ++achieved;
  }
  rating.achieved_level = achieved;
  for (int level = achieved + 1; level <= max_level; ++level) {
    if (rating.verdicts[static_cast<size_t>(level - 1)].status == VerdictStatus::Satisfied) {
      rating.anomalies.push_back(level);
    }
  }
  return rating;
}

int map_external_score(const Rational& percent) {
  if (percent.is_negative() || percent > Rational{100}) {
    throw InputError("external score outside [0,100]: " + percent.to_string());
  }
  // Buckets are half-open at the top: level k for 20k < p <= 20(k+1).
  for (int level = 4; level >= 1; --level) {
    if (percent > Rational{20 * level}) return level;
  }
  return 0;
}

DimensionScore aggregate_dimension(const Dimension& dimension,
                                   const std::vector<AttributeRating>& ratings,
                                   const WeightScheme& weights) {
  DimensionScore result;
  result.dimension_id = dimension.id;

  Rational weighted_sum{0};
  Rational weight_sum{0};
  for (const auto& attr : dimension.attributes) {
    auto rating = std::find_if(ratings.begin(), ratings.end(), [&](const AttributeRating& r) {
      return r.attribute_id == attr.id;
    });
    if (rating == ratings.end()) {
      throw ContractViolation("missing rating for attribute '" + attr.id +
                              "' in dimension '" + dimension.id + "'");
    }
    auto w = weights.attribute_weights.find(attr.id);
    Rational weight = w == weights.attribute_weights.end() ? attr.default_weight : w->second;
    if (weight.is_zero() || weight.is_negative()) {
      throw ContractViolation("weight for attribute '" + attr.id + "' must be positive");
    }
    weighted_sum = weighted_sum + weight * Rational{rating->achieved_level};
    weight_sum = weight_sum + weight;
  }
  if (weight_sum.is_zero()) {
    throw ContractViolation("dimension '" + dimension.id + "' has no attributes");
  }
  result.score = weighted_sum / weight_sum;

  const Rational minimum = weights.minimum_for(dimension.id);
  result.meets_minimum =
      weights.strict_minimum ? result.score > minimum : result.score >= minimum;
  return result;
}

std::optional<Rational> overall_indicator(const std::vector<DimensionScore>& scores,
                                          OverallMode mode, const WeightScheme& weights) {
  switch (mode) {
    case OverallMode::None:
      return std::nullopt;
    case OverallMode::Threshold: {
      bool all = std::all_of(scores.begin(), scores.end(),
                             [](const DimensionScore& s) { return s.meets_minimum; });
      return Rational{all ? 1 : 0};
    }
    case OverallMode::Weighted: {
      if (weights.dimension_weights.empty()) {
        throw InputError("overall mode 'weighted' requires explicit dimension weights");
      }
      Rational weighted_sum{0};
      Rational weight_sum{0};
      for (const auto& s : scores) {
        auto it = weights.dimension_weights.find(s.dimension_id);
        if (it == weights.dimension_weights.end()) {
          throw InputError("no dimension weight for '" + s.dimension_id + "'");
        }
        weighted_sum = weighted_sum + it->second * s.score;
        weight_sum = weight_sum + it->second;
      }
      if (weight_sum.is_zero()) {
        throw InputError("dimension weights sum to zero");
      }
      return weighted_sum / weight_sum;
    }
  }
  return std::nullopt;
}

KpiCounts count_above_minimum(const std::vector<Assessment>& assessments,
                              const WeightScheme& weights) {
  KpiCounts counts;
  counts.total = static_cast<int>(assessments.size());
  if (assessments.empty()) return counts;

  const std::string& rubric_id = assessments.front().target.rubric_id;
  for (const auto& a : assessments) {
    if (a.target.rubric_id != rubric_id) {
      throw InputError("mixed rubrics in corpus: '" + rubric_id + "' vs '" +
                       a.target.rubric_id + "'");
    }
    bool all = true;
    for (const auto& s : a.dimension_scores) {
      const Rational minimum = weights.minimum_for(s.dimension_id);
      const bool meets = weights.strict_minimum ? s.score > minimum : s.score >= minimum;
      if (!meets) {
        all = false;
        break;
      }
    }
    if (all) ++counts.passing;
  }
  return counts;
}

Assessment score_assessment(const Rubric& rubric, TargetDescriptor target,
                            const std::map<std::string, std::vector<Verdict>>& verdicts,
                            const WeightScheme& weights, OverallMode mode) {
  Assessment assessment;
  assessment.target = std::move(target);

  for (const auto& dim : rubric.dimensions) {
    for (const auto& attr : dim.attributes) {
      auto it = verdicts.find(attr.id);
      if (it == verdicts.end()) {
        throw ContractViolation("no verdicts for attribute '" + attr.id + "'");
      }
      assessment.ratings.push_back(rate_attribute(attr.id, it->second, rubric.max_level));
    }
  }
  for (const auto& dim : rubric.dimensions) {
    assessment.dimension_scores.push_back(
        aggregate_dimension(dim, assessment.ratings, weights));
  }
  assessment.passes_all_minimums =
      std::all_of(assessment.dimension_scores.begin(), assessment.dimension_scores.end(),
                  [](const DimensionScore& s) { return s.meets_minimum; });
  assessment.overall = overall_indicator(assessment.dimension_scores, mode, weights);
  return assessment;
}

}  // namespace qind
