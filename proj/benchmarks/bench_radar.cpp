#include <benchmark/benchmark.h>

#include "qind/radar.hpp"
#include "qind/report.hpp"
#include "qind/rubric.hpp"

using namespace qind;

namespace {

Assessment scored_assessment(const Rubric& rubric, int seed) {
  Assessment a;
  a.target.rubric_id = rubric.id;
  a.target.label = "series-" + std::to_string(seed);
  int i = seed;
  for (const auto& dim : rubric.dimensions) {
    a.dimension_scores.push_back(
        {dim.id, Rational((i++ % (3 * rubric.max_level)) + 1, 3), true});
  }
  return a;
}

}  // namespace

static void BM_RenderRadar(benchmark::State& state) {
  const Rubric& rubric = builtin_rubric("fairst");
  std::vector<Assessment> assessments;
  for (int s = 0; s < static_cast<int>(state.range(0)); ++s) {
    assessments.push_back(scored_assessment(rubric, s));
  }
  const WeightScheme weights = WeightScheme::defaults_for(rubric);
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_radar(rubric, assessments, weights));
  }
}
BENCHMARK(BM_RenderRadar)->Arg(1)->Arg(2)->Arg(8);

static void BM_EmitReportJson(benchmark::State& state) {
  const Rubric& rubric = builtin_rubric("fairst");
  std::map<std::string, std::vector<Verdict>> verdicts;
  for (const auto& dim : rubric.dimensions) {
    for (const auto& attr : dim.attributes) {
      std::vector<Verdict> column;
      for (int level = 1; level <= rubric.max_level; ++level) {
        Verdict v;
        v.level = level;
        v.status = level <= 3 ? VerdictStatus::Satisfied : VerdictStatus::Unknown;
        v.source = VerdictSource::Auto;
        v.evidence_refs = {"readme_present"};
        column.push_back(v);
      }
      verdicts[attr.id] = std::move(column);
    }
  }
  const WeightScheme weights = WeightScheme::defaults_for(rubric);
  TargetDescriptor target;
  target.rubric_id = rubric.id;
  const Assessment a =
      score_assessment(rubric, target, verdicts, weights, OverallMode::None);
  for (auto _ : state) {
    benchmark::DoNotOptimize(emit_report_json(a, rubric, weights));
  }
}
BENCHMARK(BM_EmitReportJson);
