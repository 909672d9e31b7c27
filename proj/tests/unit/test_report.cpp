#include <doctest.h>

#include "fixtures.hpp"
#include "qind/report.hpp"
#include "qind/rubric.hpp"
#include "qind/scoring.hpp"
#include "qind/summary.hpp"

using namespace qind;

namespace {

// Small but fully featured assessment: auto and manual sources, an anomaly,
// fractional scores.
Assessment sample_assessment(const Rubric& rubric) {
  std::map<std::string, std::vector<Verdict>> verdicts;
  for (const auto& dim : rubric.dimensions) {
    for (const auto& attr : dim.attributes) {
      std::vector<Verdict> column;
      for (int level = 1; level <= rubric.max_level; ++level) {
        Verdict v;
        v.level = level;
        v.status = level <= 2 ? VerdictStatus::Satisfied : VerdictStatus::Unknown;
        v.source = VerdictSource::Auto;
        if (level <= 2) v.evidence_refs = {"readme_present"};
        column.push_back(v);
      }
      verdicts[attr.id] = std::move(column);
    }
  }
  // One manual override with justification.
  for (auto& v : verdicts["team-expertise"]) {
    v.source = VerdictSource::Manual;
    v.status = v.level <= 3 ? VerdictStatus::Satisfied : VerdictStatus::Unsatisfied;
    v.note = "Panel review 2026-02";
    v.evidence_refs.clear();
  }
  // One anomaly column: satisfied above a gap.
  auto& gappy = verdicts["versioning"];
  gappy[2].status = VerdictStatus::Unsatisfied;
  gappy[3].status = VerdictStatus::Satisfied;
  gappy[4].status = VerdictStatus::Satisfied;

  TargetDescriptor target;
  target.identifier = "./fixtures/demo";
  target.kind = "software";
  target.rubric_id = rubric.id;
  target.label = "demo";

  WeightScheme weights = WeightScheme::defaults_for(rubric);
  return score_assessment(rubric, target, verdicts, weights, OverallMode::None);
}

}  // namespace

TEST_CASE("JSON report round-trips the assessment exactly") {
  const Rubric& rubric = builtin_rubric("fairst");
  const Assessment original = sample_assessment(rubric);
  const WeightScheme weights = WeightScheme::defaults_for(rubric);

  const std::string text = emit_report_json(original, rubric, weights);
  const ParsedReport parsed = parse_report(text);

  CHECK(parsed.rubric_id == "fairst");
  CHECK(parsed.assessment == original);
}

TEST_CASE("JSON report is deterministic and schema-tagged") {
  const Rubric& rubric = builtin_rubric("fairst");
  const Assessment a = sample_assessment(rubric);
  const WeightScheme weights = WeightScheme::defaults_for(rubric);
  const std::string one = emit_report_json(a, rubric, weights);
  const std::string two = emit_report_json(a, rubric, weights);
  CHECK(one == two);
  CHECK(one.find("\"schema_version\": 1") != std::string::npos);
  CHECK(one.find("\"version\": \"" + tool_version() + "\"") != std::string::npos);
}

TEST_CASE("every attribute appears exactly once in both report formats") {
  const Rubric& rubric = builtin_rubric("fairst");
  const Assessment a = sample_assessment(rubric);
  const WeightScheme weights = WeightScheme::defaults_for(rubric);

  const std::string json_text = emit_report_json(a, rubric, weights);
  const std::string md = emit_report_markdown(a, rubric, weights);
  for (const auto& dim : rubric.dimensions) {
    for (const auto& attr : dim.attributes) {
      CAPTURE(attr.id);
      CHECK(qind_test::count_occurrences(json_text, "\"attribute\": \"" + attr.id + "\"") == 1);
      CHECK(qind_test::count_occurrences(md, "| " + attr.title + " |") == 1);
    }
  }
}

TEST_CASE("markdown shows manual sources with their justification") {
  const Rubric& rubric = builtin_rubric("fairst");
  const Assessment a = sample_assessment(rubric);
  const std::string md =
      emit_report_markdown(a, rubric, WeightScheme::defaults_for(rubric));
  CHECK(md.find("| Team Expertise | 3 | 5 | manual | Panel review 2026-02 |") !=
        std::string::npos);
}

TEST_CASE("anomalies get their own report section") {
  const Rubric& rubric = builtin_rubric("fairst");
  const Assessment a = sample_assessment(rubric);
  const AttributeRating* versioning = a.find_rating("versioning");
  REQUIRE(versioning);
  CHECK(versioning->achieved_level == 2);
  CHECK(versioning->anomalies == std::vector<int>{4, 5});

  const std::string md =
      emit_report_markdown(a, rubric, WeightScheme::defaults_for(rubric));
  CHECK(md.find("## Anomalies") != std::string::npos);
  CHECK(md.find("Versioning: levels 4, 5 satisfied") != std::string::npos);

  const std::string json_text =
      emit_report_json(a, rubric, WeightScheme::defaults_for(rubric));
  CHECK(json_text.find("\"anomalies\": [\n        4,\n        5\n      ]") !=
        std::string::npos);
}

TEST_CASE("maturity scale lines include the top level name") {
  const auto lines = maturity_scale_lines(builtin_rubric("fairst"));
  REQUIRE(lines.size() == 6);
  CHECK(lines.back().find("Optimized") != std::string::npos);
  CHECK(maturity_scale_lines(builtin_rubric("pocme")).size() == 5);
}

TEST_CASE("batch summary wraps counts, spreads, and failing targets") {
  const Rubric& rubric = builtin_rubric("fairst");
  WeightScheme weights = WeightScheme::defaults_for(rubric);
  weights.dimension_minimums["scientific-basis"] = Rational{2};

  Assessment pass = sample_assessment(rubric);
  Assessment fail = sample_assessment(rubric);
  fail.target.label = "weak";
  // Rebuild 'fail' scores with scientific-basis below the minimum.
  for (auto& score : fail.dimension_scores) {
    if (score.dimension_id == "scientific-basis") {
      score.score = Rational{1};
      score.meets_minimum = false;
    }
  }
  fail.passes_all_minimums = false;

  BatchSummary summary = batch_summary(rubric, {pass, fail}, weights);
  CHECK(summary.counts == KpiCounts{1, 2});
  REQUIRE(summary.failing.size() == 1);
  CHECK(summary.failing[0].label == "weak");
  CHECK(summary.failing[0].failing_dimensions ==
        std::vector<std::string>{"scientific-basis"});
  REQUIRE(summary.distributions.size() == 6);

  const std::string md = emit_summary_markdown(summary);
  CHECK(md.find("**1 / 2**") != std::string::npos);
  CHECK(md.find("weak: scientific-basis") != std::string::npos);
}

TEST_CASE("empty corpus summarizes to zero totals and no distributions") {
  const Rubric& rubric = builtin_rubric("fairst");
  BatchSummary summary =
      batch_summary(rubric, {}, WeightScheme::defaults_for(rubric));
  CHECK(summary.counts == KpiCounts{0, 0});
  CHECK(summary.distributions.empty());
  CHECK(summary.failing.empty());
}

TEST_CASE("median is exact for even-sized corpora") {
  const Rubric& rubric = builtin_rubric("fairst");
  WeightScheme weights = WeightScheme::defaults_for(rubric);
  Assessment a = sample_assessment(rubric);
  Assessment b = sample_assessment(rubric);
  for (auto& score : b.dimension_scores) score.score = Rational{3};
  BatchSummary summary = batch_summary(rubric, {a, b}, weights);
  // Every dimension of `a` scores 2, of `b` scores 3 -> median 5/2.
  for (const auto& dist : summary.distributions) {
    if (dist.dimension_id == "scientific-basis") continue;  // 7/3 from the manual column
    CAPTURE(dist.dimension_id);
    CHECK(dist.median == (dist.min + dist.max) / Rational{2});
  }
}
