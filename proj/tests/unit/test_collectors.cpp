#include <doctest.h>

#include "fixtures.hpp"
#include "qind/collectors.hpp"
#include "qind/errors.hpp"
#include "qind/manual_answers.hpp"
#include "qind/rubric.hpp"
#include "qind/scoring.hpp"

using namespace qind;
using qind_test::TempDir;
using qind_test::write_file;

TEST_CASE("scanning the golden fixture repository") {
  TempDir tmp("scan");
  const auto repo = qind_test::materialize_golden_repo(tmp.path());
  EvidenceSet ev = scan_local_repository(repo);

  CHECK(ev.find("vcs_present")->value == true);
  CHECK(ev.find("tag_list")->value == nlohmann::json({"v1.0.0", "v1.2.3"}));
  CHECK(ev.find("semver_tags_fraction")->value == 1.0);
  CHECK(ev.find("vcs_remote_present")->value == true);
  CHECK(ev.find("project_platform_remote")->value == true);
  CHECK(ev.find("readme_present")->value == true);
  CHECK(ev.find("contributing_present")->value == true);
  CHECK(ev.find("changelog_present")->value == true);
  CHECK(ev.find("versioning_doc_present")->value == true);
  CHECK(ev.find("citation_metadata_kind")->value == "citation-file");
  CHECK(ev.find("ci_config_present")->value == true);
  CHECK(ev.find("reuse_ci_job_present")->value == true);
  CHECK(ev.find("install_script_present")->value == true);
  CHECK(ev.find("install_instructions_present")->value == true);
  CHECK(ev.find("package_manifest_present")->value == true);
  CHECK(ev.find("build_config_present")->value == true);
  CHECK(ev.find("container_recipe_present")->value == true);
  CHECK(ev.find("lockfile_present")->value == true);
  CHECK(ev.find("coverage_config_present")->value == true);
  CHECK(ev.find("lint_config_present")->value == true);
  CHECK(ev.find("test_dir_present")->value == true);
  CHECK(ev.find("license_file_present")->value == true);
  CHECK(ev.find("license_files")->value == nlohmann::json({"Apache-2.0", "CC-BY-4.0"}));
  CHECK(ev.find("reuse_compliant")->value == true);
  CHECK(ev.find("osi_approved")->value == true);

  for (const auto& [id, fact] : ev.facts) {
    CAPTURE(id);
    CHECK_FALSE(fact.provenance.collector.empty());
  }
}

TEST_CASE("an empty directory scans to all-false presence facts") {
  TempDir tmp("empty");
  EvidenceSet ev = scan_local_repository(tmp.path());
  CHECK(ev.find("vcs_present")->value == false);
  CHECK(ev.find("tag_list")->value == nlohmann::json::array());
  CHECK(ev.find("readme_present")->value == false);
  CHECK(ev.find("license_file_present")->value == false);
  CHECK(ev.find("test_dir_present")->value == false);
  CHECK(ev.find("source_files_present")->value == false);
  CHECK(ev.find("ci_config_present")->value == false);
  CHECK(ev.failures.empty());
}

TEST_CASE("nonexistent scan path is an io error") {
  CHECK_THROWS_AS(scan_local_repository("/no/such/path/visible"), IoError);
}

TEST_CASE("license compliance over the golden fixture") {
  TempDir tmp("reuse");
  const auto repo = qind_test::materialize_golden_repo(tmp.path());
  EvidenceSet ev = check_reuse_compliance(repo);
  CHECK(ev.find("reuse_compliant")->value == true);
  CHECK(ev.find("spdx_ids")->value == nlohmann::json({"Apache-2.0", "CC-BY-4.0"}));
  CHECK(ev.find("osi_approved")->value == true);
  CHECK_FALSE(ev.has("reuse_offending_paths"));
}

TEST_CASE("a single untagged source file breaks compliance and is named") {
  TempDir tmp("reuse-bad");
  write_file(tmp.path() / "main.c", "int main(void) { return 0; }\n");
  EvidenceSet ev = check_reuse_compliance(tmp.path());
  CHECK(ev.find("reuse_compliant")->value == false);
  CHECK(ev.find("reuse_offending_paths")->value == nlohmann::json({"main.c"}));
}

TEST_CASE("tagged file without a matching LICENSES entry breaks compliance") {
  TempDir tmp("reuse-missing");
  write_file(tmp.path() / "main.c",
             "// SPDX-License-Identifier: MIT\nint main(void) { return 0; }\n");
  EvidenceSet ev = check_reuse_compliance(tmp.path());
  CHECK(ev.find("reuse_compliant")->value == false);
  CHECK(ev.find("reuse_missing_licenses")->value == nlohmann::json({"LICENSES/MIT"}));
}

TEST_CASE("empty tree is vacuously compliant with no licenses") {
  TempDir tmp("reuse-empty");
  EvidenceSet ev = check_reuse_compliance(tmp.path());
  CHECK(ev.find("reuse_compliant")->value == true);
  CHECK(ev.find("spdx_ids")->value == nlohmann::json::array());
  CHECK(ev.find("osi_approved")->value == false);
}

TEST_CASE("binary files and dep5-covered files are excused from tagging") {
  TempDir tmp("reuse-binary");
  std::string binary = "PK";
  binary.push_back('\0');
  binary += "garbage";
  write_file(tmp.path() / "blob.bin", binary);
  write_file(tmp.path() / ".reuse" / "dep5",
             "Format: https://www.debian.org/doc/packaging-manuals/copyright-format/1.0/\n"
             "\nFiles: data/*\nCopyright: none\nLicense: CC0-1.0\n");
  write_file(tmp.path() / "data" / "table.csv", "a,b\n1,2\n");
  EvidenceSet ev = check_reuse_compliance(tmp.path());
  CHECK(ev.find("reuse_compliant")->value == true);
}

TEST_CASE("evidence merge rejects colliding fact ids") {
  EvidenceSet a;
  a.add("x", 1, {"c1", ".", ""});
  EvidenceSet b;
  b.add("x", 2, {"c2", ".", ""});
  CHECK_THROWS_AS(EvidenceSet::merged({a, b}), ContractViolation);
}

TEST_CASE("no evidence and no answers puts every attribute at level zero") {
  const Rubric& rubric = builtin_rubric("fairst");
  EvidenceSet empty;
  ManualAnswers none;
  auto verdicts = derive_verdicts(rubric, empty, none);
  CHECK(verdicts.size() == 19);
  for (const auto& [attribute_id, list] : verdicts) {
    CAPTURE(attribute_id);
    REQUIRE(list.size() == 5);
    for (const auto& v : list) {
      CHECK(v.status == VerdictStatus::Unknown);
    }
    CHECK(rate_attribute(attribute_id, list, 5).achieved_level == 0);
  }
}

TEST_CASE("explicit level answers pin the whole verdict column") {
  const Rubric& rubric = builtin_rubric("fairst");
  EvidenceSet empty;
  ManualAnswers answers = ManualAnswers::parse(R"({
    "rubric": "fairst",
    "answers": {"team-expertise": {"level": 2,
                "justification": "Domain and software expertise on the team"}}
  })");
  auto verdicts = derive_verdicts(rubric, empty, answers);
  const auto& column = verdicts.at("team-expertise");
  for (int level = 1; level <= 5; ++level) {
    const Verdict& v = column[static_cast<size_t>(level - 1)];
    CHECK(v.source == VerdictSource::Manual);
    CHECK(v.status == (level <= 2 ? VerdictStatus::Satisfied : VerdictStatus::Unsatisfied));
    CHECK(v.note == "Domain and software expertise on the team");
  }
  CHECK(rate_attribute("team-expertise", column, 5).achieved_level == 2);
}

TEST_CASE("versioning evidence walks the bindings to level 3") {
  const Rubric& rubric = builtin_rubric("fairst");
  EvidenceSet ev;
  ev.add("tag_list", {"v1.0.0", "v1.2.3"}, {"test", ".", ""});
  ev.add("semver_tags_fraction", 1.0, {"test", ".", ""});
  ev.add("versioning_doc_present", true, {"test", ".", ""});
  ManualAnswers none;

  auto verdicts = derive_verdicts(rubric, ev, none);
  const auto& column = verdicts.at("versioning");
  CHECK(column[0].status == VerdictStatus::Satisfied);
  CHECK(column[1].status == VerdictStatus::Satisfied);
  CHECK(column[2].status == VerdictStatus::Satisfied);
  CHECK(column[3].status == VerdictStatus::Unknown);
  CHECK(column[4].status == VerdictStatus::Unknown);
  CHECK(rate_attribute("versioning", column, 5).achieved_level == 3);

  // Satisfied auto verdicts always point at their facts.
  for (int level = 1; level <= 3; ++level) {
    CHECK_FALSE(column[static_cast<size_t>(level - 1)].evidence_refs.empty());
  }
}

TEST_CASE("answers naming unknown attributes are rejected with the ids listed") {
  const Rubric& rubric = builtin_rubric("fairst");
  EvidenceSet empty;
  ManualAnswers answers = ManualAnswers::parse(R"({
    "answers": {
      "no-such-attribute": {"statements": {"1": true}},
      "also-missing": {"statements": {"1": false}}
    }
  })");
  CHECK_THROWS_WITH_AS(derive_verdicts(rubric, empty, answers),
                       "answers: unknown attribute ids: also-missing, no-such-attribute",
                       InputError);
}

TEST_CASE("manual statements override auto checks") {
  const Rubric& rubric = builtin_rubric("fairst");
  EvidenceSet ev;
  ev.add("tag_list", {"v1.0.0"}, {"test", ".", ""});
  ev.add("semver_tags_fraction", 1.0, {"test", ".", ""});
  ManualAnswers answers = ManualAnswers::parse(R"({
    "answers": {"versioning": {"statements": {"2": false},
                "justification": "Tags exist but do not follow any scheme"}}
  })");
  auto verdicts = derive_verdicts(rubric, ev, answers);
  const auto& column = verdicts.at("versioning");
  CHECK(column[0].status == VerdictStatus::Satisfied);   // auto
  CHECK(column[0].source == VerdictSource::Auto);
  CHECK(column[1].status == VerdictStatus::Unsatisfied);  // manual override wins
  CHECK(column[1].source == VerdictSource::Manual);
  CHECK(column[1].note == "Tags exist but do not follow any scheme");
}

TEST_CASE("explicit level answers must stay inside the scale") {
  const Rubric& rubric = builtin_rubric("pocme");
  ManualAnswers answers = ManualAnswers::parse(R"({
    "answers": {"level-of-curation": {"level": 5, "justification": "x"}}
  })");
  EvidenceSet empty;
  CHECK_THROWS_AS(derive_verdicts(rubric, empty, answers), InputError);
}
