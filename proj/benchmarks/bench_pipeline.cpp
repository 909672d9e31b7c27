#include <benchmark/benchmark.h>

#include "qind/checks.hpp"
#include "qind/manual_answers.hpp"
#include "qind/rubric.hpp"
#include "qind/rubric_io.hpp"

using namespace qind;

namespace {

EvidenceSet rich_evidence() {
  EvidenceSet ev;
  auto add = [&](const std::string& id, nlohmann::json value) {
    ev.add(id, std::move(value), {"bench", ".", ""});
  };
  add("vcs_present", true);
  add("vcs_remote_present", true);
  add("project_platform_remote", true);
  add("tag_list", {"v1.0.0", "v1.2.3", "v2.0.0"});
  add("semver_tags_fraction", 1.0);
  add("readme_present", true);
  add("contributing_present", true);
  add("changelog_present", true);
  add("versioning_doc_present", true);
  add("citation_metadata_kind", "citation-file");
  add("ci_config_present", true);
  add("reuse_ci_job_present", true);
  add("install_script_present", true);
  add("install_instructions_present", true);
  add("package_manifest_present", true);
  add("build_config_present", true);
  add("container_recipe_present", true);
  add("lockfile_present", true);
  add("coverage_config_present", true);
  add("lint_config_present", true);
  add("test_dir_present", true);
  add("source_files_present", true);
  add("repo_has_directory_structure", true);
  add("license_file_present", true);
  add("license_files", {"Apache-2.0"});
  add("reuse_compliant", true);
  add("spdx_ids", {"Apache-2.0"});
  add("osi_approved", true);
  return ev;
}

}  // namespace

static void BM_DeriveVerdicts(benchmark::State& state) {
  const Rubric& rubric = builtin_rubric("fairst");
  const EvidenceSet evidence = rich_evidence();
  ManualAnswers answers;
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_verdicts(rubric, evidence, answers));
  }
}
BENCHMARK(BM_DeriveVerdicts);

static void BM_EvaluateRegistry(benchmark::State& state) {
  const auto& registry = CheckRegistry::builtin();
  const auto ids = registry.ids();
  const EvidenceSet evidence = rich_evidence();
  for (auto _ : state) {
    for (const auto& id : ids) {
      benchmark::DoNotOptimize(registry.evaluate(id, evidence));
    }
  }
}
BENCHMARK(BM_EvaluateRegistry);

static void BM_RubricRoundTrip(benchmark::State& state) {
  const std::string text = serialize_rubric(builtin_rubric("fairst"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(load_rubric(text));
  }
}
BENCHMARK(BM_RubricRoundTrip);
