#include "qind/summary.hpp"

#include <algorithm>
#include <sstream>

#include "qind/errors.hpp"

namespace qind {

namespace {

using nlohmann::json;

Rational median_of(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / Rational{2};
}

}  // namespace

BatchSummary batch_summary(const Rubric& rubric, const std::vector<Assessment>& assessments,
                           const WeightScheme& weights) {
  BatchSummary summary;
  summary.rubric_id = rubric.id;
  summary.counts = count_above_minimum(assessments, weights);
  if (assessments.empty()) return summary;

  for (const auto& a : assessments) {
    if (a.target.rubric_id != rubric.id) {
      throw InputError("summary: assessment for rubric '" + a.target.rubric_id +
                       "' mixed into a '" + rubric.id + "' corpus");
    }
  }

  for (const auto& dim : rubric.dimensions) {
    std::vector<Rational> values;
    for (const auto& a : assessments) {
      const DimensionScore* score = a.find_score(dim.id);
      if (!score) {
        throw ContractViolation("assessment lacks a score for dimension '" + dim.id + "'");
      }
      values.push_back(score->score);
    }
    DimensionDistribution dist;
    dist.dimension_id = dim.id;
    dist.min = *std::min_element(values.begin(), values.end());
    dist.max = *std::max_element(values.begin(), values.end());
    dist.median = median_of(values);
    summary.distributions.push_back(std::move(dist));
  }

  for (const auto& a : assessments) {
    FailingTarget failing;
    failing.label = a.target.label.empty() ? a.target.identifier : a.target.label;
    for (const auto& score : a.dimension_scores) {
      const Rational minimum = weights.minimum_for(score.dimension_id);
      const bool meets = weights.strict_minimum ? score.score > minimum
                                                : score.score >= minimum;
      if (!meets) failing.failing_dimensions.push_back(score.dimension_id);
    }
    if (!failing.failing_dimensions.empty()) summary.failing.push_back(std::move(failing));
  }
  return summary;
}

json summary_to_json(const BatchSummary& summary) {
  json doc;
  doc["schema_version"] = 1;
  doc["rubric"] = summary.rubric_id;
  doc["totals"] = {{"passing", summary.counts.passing}, {"total", summary.counts.total}};
  json dists = json::array();
  for (const auto& dist : summary.distributions) {
    dists.push_back({{"dimension", dist.dimension_id},
                     {"min", dist.min.to_string()},
                     {"median", dist.median.to_string()},
                     {"max", dist.max.to_string()},
                     {"min_display", dist.min.to_decimal(2)},
                     {"median_display", dist.median.to_decimal(2)},
                     {"max_display", dist.max.to_decimal(2)}});
  }
  doc["dimension_distributions"] = std::move(dists);
  json failing = json::array();
  for (const auto& f : summary.failing) {
    failing.push_back({{"target", f.label}, {"failing_dimensions", f.failing_dimensions}});
  }
  doc["failing_targets"] = std::move(failing);
  return doc;
}

std::string emit_summary_json(const BatchSummary& summary) {
  return summary_to_json(summary).dump(2) + "\n";
}

std::string emit_summary_markdown(const BatchSummary& summary) {
  std::ostringstream md;
  md << "# Corpus summary (`" << summary.rubric_id << "`)\n\n";
  md << "Targets meeting every dimension minimum: **" << summary.counts.passing << " / "
     << summary.counts.total << "**\n\n";

  if (!summary.distributions.empty()) {
    md << "| Dimension | Min | Median | Max |\n";
    md << "|---|---:|---:|---:|\n";
    for (const auto& dist : summary.distributions) {
      md << "| " << dist.dimension_id << " | " << dist.min.to_decimal(2) << " | "
         << dist.median.to_decimal(2) << " | " << dist.max.to_decimal(2) << " |\n";
    }
    md << "\n";
  }

  if (!summary.failing.empty()) {
    md << "## Failing targets\n\n";
    for (const auto& f : summary.failing) {
      md << "- " << f.label << ": ";
      for (size_t i = 0; i < f.failing_dimensions.size(); ++i) {
        if (i > 0) md << ", ";
        md << f.failing_dimensions[i];
      }
      md << "\n";
    }
    md << "\n";
  }
  return md.str();
}

}  // namespace qind
