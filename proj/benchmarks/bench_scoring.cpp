#include <benchmark/benchmark.h>

#include <random>

#include "qind/rubric.hpp"
#include "qind/scoring.hpp"

using namespace qind;

namespace {

std::vector<std::vector<Verdict>> random_verdict_vectors(size_t count, int max_level) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> pick(0, 2);
  const VerdictStatus alphabet[] = {VerdictStatus::Satisfied, VerdictStatus::Unsatisfied,
                                    VerdictStatus::Unknown};
  std::vector<std::vector<Verdict>> out(count);
  for (auto& column : out) {
    for (int level = 1; level <= max_level; ++level) {
      Verdict v;
      v.level = level;
      v.status = alphabet[pick(rng)];
      column.push_back(v);
    }
  }
  return out;
}

}  // namespace

static void BM_RateAttribute(benchmark::State& state) {
  const auto vectors = random_verdict_vectors(1024, 5);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rate_attribute("a", vectors[i++ % vectors.size()], 5));
  }
}
BENCHMARK(BM_RateAttribute);

static void BM_AggregateDimension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Dimension dim;
  dim.id = "d";
  std::vector<AttributeRating> ratings;
  for (int i = 0; i < n; ++i) {
    Attribute attr;
    attr.id = "a" + std::to_string(i);
    attr.default_weight = Rational(i % 7 + 1, i % 3 + 1);
    dim.attributes.push_back(attr);
    AttributeRating rating;
    rating.attribute_id = "a" + std::to_string(i);
    rating.achieved_level = i % 6;
    ratings.push_back(rating);
  }
  WeightScheme weights;
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate_dimension(dim, ratings, weights));
  }
}
BENCHMARK(BM_AggregateDimension)->Arg(4)->Arg(19)->Arg(64);

static void BM_ScoreAssessment(benchmark::State& state) {
  const Rubric& rubric = builtin_rubric("fairst");
  std::map<std::string, std::vector<Verdict>> verdicts;
  const auto vectors = random_verdict_vectors(19, 5);
  size_t i = 0;
  for (const auto& dim : rubric.dimensions) {
    for (const auto& attr : dim.attributes) {
      verdicts[attr.id] = vectors[i++];
    }
  }
  const WeightScheme weights = WeightScheme::defaults_for(rubric);
  TargetDescriptor target;
  target.rubric_id = rubric.id;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        score_assessment(rubric, target, verdicts, weights, OverallMode::None));
  }
}
BENCHMARK(BM_ScoreAssessment);
