#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qind/rubric.hpp"
#include "qind/scoring.hpp"

namespace qind {

struct DimensionDistribution {
  std::string dimension_id;
  Rational min;
  Rational median;
  Rational max;

  bool operator==(const DimensionDistribution&) const = default;
};

struct FailingTarget {
  std::string label;
  std::vector<std::string> failing_dimensions;

  bool operator==(const FailingTarget&) const = default;
};

struct BatchSummary {
  std::string rubric_id;
  KpiCounts counts;
  std::vector<DimensionDistribution> distributions;  // rubric dimension order
  std::vector<FailingTarget> failing;                // input order
};

// KPI view over a corpus sharing one rubric: how many targets meet every
// dimension minimum, score spread per dimension, and who fails where.
BatchSummary batch_summary(const Rubric& rubric, const std::vector<Assessment>& assessments,
                           const WeightScheme& weights);

nlohmann::json summary_to_json(const BatchSummary& summary);
std::string emit_summary_json(const BatchSummary& summary);
std::string emit_summary_markdown(const BatchSummary& summary);

}  // namespace qind
