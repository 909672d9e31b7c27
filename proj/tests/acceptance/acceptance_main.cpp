// Acceptance suite: one criterion per run_criterion() call, one PASS/FAIL
// line each, nonzero exit if anything fails. Everything runs offline.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "qind/commands.hpp"
#include "qind/pipeline.hpp"
#include "qind/radar.hpp"
#include "qind/report.hpp"
#include "qind/rubric.hpp"
#include "qind/rubric_io.hpp"
#include "qind/scoring.hpp"

using namespace qind;
using nlohmann::json;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& name, double time_limit_s,
                   const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (error.empty() && elapsed > time_limit_s) {
    std::ostringstream oss;
    oss << "exceeded time limit (" << elapsed << "s > " << time_limit_s << "s)";
    error = oss.str();
  }
  if (error.empty()) {
    std::printf("PASS  %d. %s (%.2fs)\n", number, name.c_str(), elapsed);
  } else {
    std::printf("FAIL  %d. %s: %s\n", number, name.c_str(), error.c_str());
    ++g_failures;
  }
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

template <typename A, typename B>
void require_eq(const A& actual, const B& expected, const std::string& what) {
  if (!(actual == expected)) {
    std::ostringstream oss;
    oss << what << ": got ";
    if constexpr (std::is_arithmetic_v<A>) {
      oss << actual << ", want " << expected;
    } else {
      oss << "a mismatch";
    }
    throw std::runtime_error(oss.str());
  }
}

// ---------------------------------------------------------------- criterion 1

void check_text(const Rubric& rubric, const std::string& attribute_id, int level,
                const std::string& expected) {
  const Attribute* attr = rubric.find_attribute(attribute_id);
  require(attr != nullptr, "missing attribute " + attribute_id);
  const std::string& actual = attr->levels[static_cast<size_t>(level - 1)].text;
  if (actual != expected) {
    throw std::runtime_error("level text mismatch for " + attribute_id + " level " +
                             std::to_string(level) + ":\n  got  '" + actual +
                             "'\n  want '" + expected + "'");
  }
}

void criterion_rubric_fidelity() {
  const Rubric& pocme = builtin_rubric("pocme");
  require_eq(static_cast<int>(pocme.dimensions.size()), 5, "pocme dimension count");
  require_eq(pocme.attribute_count(), 9, "pocme attribute count");
  require_eq(pocme.max_level, 4, "pocme max level");

  const Rubric& fairst = builtin_rubric("fairst");
  require_eq(static_cast<int>(fairst.dimensions.size()), 6, "fairst dimension count");
  require_eq(fairst.attribute_count(), 19, "fairst attribute count");
  require_eq(fairst.max_level, 5, "fairst max level");

  // Ten verbatim level statements, exact string match.
  check_text(pocme, "published-with-identifier", 4,
             "Dataset is identifiable via globally unique, formalized, standardized, "
             "persistent identifier supported by general metadata (e.g. DOI).");
  check_text(pocme, "external-assessment-score", 1, "21-40% Score reached");
  check_text(pocme, "external-assessment-score", 4, "81-100% Score reached");
  check_text(pocme, "level-of-curation", 2,
             "Data is published in cleaned form with some curation (e.g. brief checking, "
             "documentation according to standard)");
  check_text(pocme, "formal-metadata", 1,
             "Metadata available for/with the data publication that is not structured "
             "according to a commonly accepted scheme (i.e. no scheme applied)");
  check_text(fairst, "versioning", 2,
             "The software uses structured (e.g. semantic) versioning.");
  check_text(fairst, "access-conditions", 5,
             "There isa community, providing the opportunity of support and exchange "
             "concerning aspects of using the software.");
  check_text(fairst, "scientific-embedding", 5,
             "The software development ispart of a larger scientific initiative with "
             "dedicated processes for software development.");
  check_text(fairst, "project-management", 2, "A version control system is used.");
  check_text(fairst, "security", 5,
             "There are regular and automated security monitoring and an automated update "
             "process in place allowing merges only of security checks have been passed.");
}

// ---------------------------------------------------------------- criterion 2

void criterion_rating_oracle() {
  const VerdictStatus alphabet[] = {VerdictStatus::Satisfied, VerdictStatus::Unsatisfied,
                                    VerdictStatus::Unknown};
  int checked = 0;
  for (int max_level : {4, 5}) {
    std::vector<int> digits(static_cast<size_t>(max_level), 0);
    while (true) {
      std::vector<Verdict> verdicts;
      for (int level = 1; level <= max_level; ++level) {
        Verdict v;
        v.level = level;
        v.status = alphabet[digits[static_cast<size_t>(level - 1)]];
        verdicts.push_back(v);
      }
      // Brute-force enumerator: largest n with statements 1..n all satisfied.
      int expected = 0;
      for (int n = max_level; n >= 1; --n) {
        bool all = true;
        for (int level = 1; level <= n; ++level) {
          all = all && verdicts[static_cast<size_t>(level - 1)].status ==
                           VerdictStatus::Satisfied;
        }
        if (all) {
          expected = n;
          break;
        }
      }
      const AttributeRating rating = rate_attribute("x", verdicts, max_level);
      require_eq(rating.achieved_level, expected, "prefix length mismatch");
      for (int anomaly : rating.anomalies) {
        require(anomaly > rating.achieved_level &&
                    verdicts[static_cast<size_t>(anomaly - 1)].status ==
                        VerdictStatus::Satisfied,
                "anomaly outside the satisfied-above-gap region");
      }
      ++checked;

      int pos = max_level - 1;
      while (pos >= 0 && digits[static_cast<size_t>(pos)] == 2) {
        digits[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++digits[static_cast<size_t>(pos)];
    }
  }
  require_eq(checked, 243 + 81, "exhausted vector count");
}

// ---------------------------------------------------------------- criterion 3

void criterion_external_mapping() {
  const int percents[] = {0, 20, 21, 40, 41, 60, 61, 80, 81, 100};
  const int levels[] = {0, 0, 1, 1, 2, 2, 3, 3, 4, 4};
  for (int i = 0; i < 10; ++i) {
    require_eq(map_external_score(Rational{percents[i]}), levels[i],
               "bucket endpoint " + std::to_string(percents[i]));
  }
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> hundredths(0, 10000);
  int previous_level = 0;
  Rational previous{0};
  bool first = true;
  for (int i = 0; i < 1000; ++i) {
    Rational p(hundredths(rng), 100);
    int level = map_external_score(p);
    require(level >= 0 && level <= 4, "bucket image outside {0..4}");
    if (!first) {
      if (previous <= p) {
        require(previous_level <= level, "mapping not monotone");
      } else {
        require(previous_level >= level, "mapping not monotone");
      }
    }
    previous = p;
    previous_level = level;
    first = false;
  }
}

// ---------------------------------------------------------------- criterion 4

void criterion_aggregation_properties() {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> levels(0, 5);
  std::uniform_int_distribution<int> counts(1, 8);
  std::uniform_int_distribution<std::int64_t> weight_num(1, 60);
  std::uniform_int_distribution<std::int64_t> weight_den(1, 12);

  for (int trial = 0; trial < 1000; ++trial) {
    const int n = counts(rng);
    Dimension dim;
    dim.id = "d";
    dim.title = "d";
    std::vector<AttributeRating> ratings;
    int min_level = 5, max_level = 0, sum = 0;
    for (int i = 0; i < n; ++i) {
      Attribute attr;
      attr.id = "a" + std::to_string(i);
      attr.title = attr.id;
      attr.default_weight = Rational(weight_num(rng), weight_den(rng));
      dim.attributes.push_back(attr);
      AttributeRating rating;
      rating.attribute_id = attr.id;
      rating.achieved_level = levels(rng);
      min_level = std::min(min_level, rating.achieved_level);
      max_level = std::max(max_level, rating.achieved_level);
      sum += rating.achieved_level;
      ratings.push_back(rating);
    }
    WeightScheme weights;
    const Rational score = aggregate_dimension(dim, ratings, weights).score;
    require(Rational{min_level} <= score && score <= Rational{max_level},
            "score outside [min level, max level]");

    const Rational c(weight_num(rng), weight_den(rng));
    Dimension scaled = dim;
    for (auto& attr : scaled.attributes) attr.default_weight = attr.default_weight * c;
    require(aggregate_dimension(scaled, ratings, weights).score == score,
            "score moved under uniform weight scaling");

    Dimension equal = dim;
    for (auto& attr : equal.attributes) attr.default_weight = Rational{1};
    require(aggregate_dimension(equal, ratings, weights).score == Rational(sum, n),
            "equal-weight score is not the arithmetic mean");
  }
}

// ---------------------------------------------------------------- criterion 5

void criterion_golden_end_to_end() {
  qind_test::TempDir tmp("acceptance-golden");
  const auto repo = qind_test::materialize_golden_repo(tmp.path());

  RunConfig config;
  config.rubric_ref = "fairst";
  config.target = repo.string();
  config.answers_path = (qind_test::fixture_dir() / "golden-answers.json").string();
  config.offline = true;
  config.label = "golden";
  config.json_out = (tmp.path() / "report.json").string();
  config.svg_out = (tmp.path() / "radar.svg").string();

  std::ostringstream out, err;
  require_eq(cmd_assess(config, out, err), kExitOk, "assess exit code");
  const std::string report_one = qind_test::read_file(config.json_out);
  const std::string svg_one = qind_test::read_file(config.svg_out);

  const json expected =
      json::parse(qind_test::read_file(qind_test::fixture_dir() / "golden-expected.json"));
  const ParsedReport parsed = parse_report(report_one);
  require_eq(parsed.rubric_id, std::string("fairst"), "rubric id");
  for (const auto& [attribute_id, level] : expected.at("attribute_levels").items()) {
    const AttributeRating* rating = parsed.assessment.find_rating(attribute_id);
    require(rating != nullptr, "missing rating " + attribute_id);
    if (rating->achieved_level != level.get<int>()) {
      throw std::runtime_error("level mismatch for " + attribute_id + ": got " +
                               std::to_string(rating->achieved_level) + ", want " +
                               level.dump());
    }
  }
  for (const auto& [dimension_id, score_text] : expected.at("dimension_scores").items()) {
    const DimensionScore* score = parsed.assessment.find_score(dimension_id);
    require(score != nullptr, "missing score " + dimension_id);
    require(score->score == Rational::parse_or_throw(score_text.get<std::string>()),
            "dimension score mismatch for " + dimension_id);
  }

  std::ostringstream out2, err2;
  require_eq(cmd_assess(config, out2, err2), kExitOk, "second assess exit code");
  require(qind_test::read_file(config.json_out) == report_one,
          "JSON report not byte-identical across runs");
  require(qind_test::read_file(config.svg_out) == svg_one,
          "SVG not byte-identical across runs");
}

// ---------------------------------------------------------------- criterion 6

void criterion_kpi_counting() {
  qind_test::TempDir tmp("acceptance-kpi");
  const auto fixtures = qind_test::fixture_dir();

  json manifest = json::array();
  manifest.push_back({{"kind", "repo"},
                      {"locator", (fixtures / "corpus" / "alpha").string()},
                      {"answers", (fixtures / "corpus" / "answers-alpha.json").string()},
                      {"label", "alpha"}});
  manifest.push_back({{"kind", "repo"},
                      {"locator", (fixtures / "corpus" / "bravo").string()},
                      {"answers", (fixtures / "corpus" / "answers-bravo.json").string()},
                      {"label", "bravo"}});
  manifest.push_back({{"kind", "repo"},
                      {"locator", (fixtures / "corpus" / "charlie").string()},
                      {"label", "charlie"}});
  const auto manifest_path = tmp.path() / "manifest.json";
  qind_test::write_file(manifest_path, manifest.dump(2));

  const json expected =
      json::parse(qind_test::read_file(fixtures / "corpus-expected.json"));

  RunConfig config;
  config.rubric_ref = "fairst";
  config.weights_path = (fixtures / "corpus-weights.json").string();
  config.offline = true;
  config.out_dir = (tmp.path() / "with-minimums").string();

  std::ostringstream out, err;
  require_eq(cmd_batch(manifest_path.string(), config, out, err), kExitOk,
             "batch exit code");
  const json summary =
      json::parse(qind_test::read_file(config.out_dir + "/summary.json"));
  require_eq(summary.at("totals").at("passing").get<int>(),
             expected.at("passing").get<int>(), "passing count");
  require_eq(summary.at("totals").at("total").get<int>(), expected.at("total").get<int>(),
             "total count");
  for (const auto& failing : summary.at("failing_targets")) {
    const std::string label = failing.at("target").get<std::string>();
    require(expected.at("failing").contains(label), "unexpected failing target " + label);
    require(failing.at("failing_dimensions") == expected.at("failing").at(label),
            "failing dimensions mismatch for " + label);
  }
  require_eq(static_cast<int>(summary.at("failing_targets").size()),
             static_cast<int>(expected.at("failing").size()), "failing target count");

  // Minimums at zero: everything passes.
  RunConfig zero = config;
  zero.weights_path.clear();
  zero.out_dir = (tmp.path() / "zero-minimums").string();
  std::ostringstream out2, err2;
  require_eq(cmd_batch(manifest_path.string(), zero, out2, err2), kExitOk,
             "zero-minimum batch exit code");
  const json zero_summary =
      json::parse(qind_test::read_file(zero.out_dir + "/summary.json"));
  require_eq(zero_summary.at("totals").at("passing").get<int>(), 3,
             "passing != total under zero minimums");
  require(zero_summary.at("failing_targets").empty(), "failing targets under zero minimums");
}

// ---------------------------------------------------------------- criterion 7

void criterion_offline_determinism() {
  qind_test::TempDir tmp("acceptance-offline");
  qind_test::PanicHttpClient panic;

  // Cache-only fetching: hit and miss, no transport either way.
  Fetcher::Options options;
  options.cache_dir = (tmp.path() / "cache").string();
  options.offline = true;
  qind_test::seed_cache(tmp.path() / "cache", "http://datacite.test/dois/10.5555%2Fgolden",
                        200,
                        qind_test::read_file(qind_test::fixture_dir() / "responses" /
                                             "datacite-full.json"));
  Fetcher fetcher(options, &panic);
  require(fetcher.get("http://datacite.test/dois/10.5555%2Fgolden").ok, "cache hit failed");
  require(!fetcher.get("http://datacite.test/dois/10.5555%2Fmiss").ok,
          "cache miss did not fail cleanly");
  require_eq(panic.calls, 0, "offline fetcher touched the transport");

  // Whole pipeline on a url-kind target (the chattiest path), still offline:
  // a single transport call fails the criterion.
  TargetSpec spec;
  spec.locator = "https://data.example.org";
  spec.kind = "url";
  PipelineOptions pipeline;
  pipeline.offline = true;
  pipeline.cache_dir = (tmp.path() / "cache").string();
  pipeline.client = &panic;
  const Rubric& rubric = builtin_rubric("pocme");
  AssessOutcome outcome =
      assess_target(spec, rubric, WeightScheme::defaults_for(rubric), pipeline);
  require_eq(panic.calls, 0, "offline pipeline touched the transport");
  require(!outcome.collector_failure, "offline cache misses must not count as failures");

  // Determinism of the offline pipeline output.
  AssessOutcome again =
      assess_target(spec, rubric, WeightScheme::defaults_for(rubric), pipeline);
  WeightScheme weights = WeightScheme::defaults_for(rubric);
  require(emit_report_json(outcome.assessment, rubric, weights, &outcome.evidence) ==
              emit_report_json(again.assessment, rubric, weights, &again.evidence),
          "offline pipeline output not deterministic");
}

// ---------------------------------------------------------------- criterion 8

void criterion_radar_geometry() {
  qind_test::TempDir tmp("acceptance-radar");
  const auto repo = qind_test::materialize_golden_repo(tmp.path());

  RunConfig config;
  config.rubric_ref = "fairst";
  config.target = repo.string();
  config.answers_path = (qind_test::fixture_dir() / "golden-answers.json").string();
  config.offline = true;
  config.label = "golden";
  config.json_out = (tmp.path() / "report.json").string();
  config.svg_out = (tmp.path() / "radar.svg").string();
  std::ostringstream out, err;
  require_eq(cmd_assess(config, out, err), kExitOk, "assess exit code");

  const std::string svg = qind_test::read_file(config.svg_out);
  require_eq(qind_test::count_occurrences(svg, "class=\"axis\""), 6, "axis count");
  require_eq(qind_test::count_occurrences(svg, "class=\"ring\""), 6, "ring count");

  const auto polygons = qind_test::extract_attributes(svg, "polygon class=\"series\"",
                                                      "points");
  require_eq(static_cast<int>(polygons.size()), 1, "series polygon count");
  const auto points = qind_test::parse_points(polygons[0]);
  require_eq(static_cast<int>(points.size()), 6, "vertex count");

  const ParsedReport parsed = parse_report(qind_test::read_file(config.json_out));
  const Rubric& rubric = builtin_rubric("fairst");
  const RadarConfig radar_config;
  const double center = radar_config.size / 2.0;
  const double outer = radar_config.size / 2.0 - radar_config.margin;
  for (size_t i = 0; i < points.size(); ++i) {
    const DimensionScore* score =
        parsed.assessment.find_score(rubric.dimensions[i].id);
    require(score != nullptr, "missing dimension score");
    const double dx = points[i].x - center;
    const double dy = points[i].y - center;
    const double radius = std::sqrt(dx * dx + dy * dy);
    const double expected = score->score.to_double() / 5.0 * outer;
    if (std::abs(radius - expected) > 0.5) {
      throw std::runtime_error("vertex radius off by more than 0.5 px on axis " +
                               rubric.dimensions[i].id);
    }
  }

  // All-zero assessment: degenerate polygon at the center point.
  Assessment zero;
  zero.target.rubric_id = "fairst";
  zero.target.label = "zero";
  for (const auto& dim : rubric.dimensions) {
    zero.dimension_scores.push_back({dim.id, Rational{0}, true});
  }
  const RenderResult render =
      render_radar(rubric, {zero}, WeightScheme::defaults_for(rubric));
  const auto zero_polygons =
      qind_test::extract_attributes(render.svg, "polygon class=\"series\"", "points");
  require_eq(static_cast<int>(zero_polygons.size()), 1, "zero polygon count");
  for (const auto& point : qind_test::parse_points(zero_polygons[0])) {
    require(std::abs(point.x - center) <= 0.5 && std::abs(point.y - center) <= 0.5,
            "all-zero vertex away from the center");
  }
}

}  // namespace

int main() {
  run_criterion(1, "builtin rubric fidelity (counts and verbatim level texts)", 1.0,
                criterion_rubric_fidelity);
  run_criterion(2, "cumulative rating matches the exhaustive prefix oracle", 1.0,
                criterion_rating_oracle);
  run_criterion(3, "external score bucket endpoints and monotonicity", 1.0,
                criterion_external_mapping);
  run_criterion(4, "aggregation bounds, weight-scale invariance, equal-weight mean", 5.0,
                criterion_aggregation_properties);
  run_criterion(5, "golden fixture end to end, byte-identical artifacts", 10.0,
                criterion_golden_end_to_end);
  run_criterion(6, "corpus KPI counting with and without minimums", 10.0,
                criterion_kpi_counting);
  run_criterion(7, "offline mode never touches the network and stays deterministic", 10.0,
                criterion_offline_determinism);
  run_criterion(8, "radar geometry: axes, rings, linear vertex radii", 10.0,
                criterion_radar_geometry);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
