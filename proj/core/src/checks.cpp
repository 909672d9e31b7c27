#include "qind/checks.hpp"

#include <algorithm>
#include <initializer_list>

#include "qind/errors.hpp"
#include "qind/rational.hpp"

namespace qind {

namespace {

using Condition = CheckRegistry::Condition;

CheckOutcome outcome(VerdictStatus status, std::vector<std::string> refs = {}) {
  CheckOutcome o;
  o.status = status;
  o.evidence_refs = std::move(refs);
  return o;
}

Condition fact_true(std::string fact_id) {
  return [fact_id](const EvidenceSet& ev, const CheckConfig&) {
    const Fact* fact = ev.find(fact_id);
    if (!fact || !fact->value.is_boolean()) return outcome(VerdictStatus::Unknown);
    return outcome(fact->value.get<bool>() ? VerdictStatus::Satisfied
                                           : VerdictStatus::Unsatisfied,
                   {fact_id});
  };
}

Condition fact_in(std::string fact_id, std::vector<std::string> accepted) {
  return [fact_id, accepted](const EvidenceSet& ev, const CheckConfig&) {
    const Fact* fact = ev.find(fact_id);
    if (!fact || !fact->value.is_string()) return outcome(VerdictStatus::Unknown);
    const auto value = fact->value.get<std::string>();
    const bool hit = std::find(accepted.begin(), accepted.end(), value) != accepted.end();
    return outcome(hit ? VerdictStatus::Satisfied : VerdictStatus::Unsatisfied, {fact_id});
  };
}

Condition fact_nonempty(std::string fact_id) {
  return [fact_id](const EvidenceSet& ev, const CheckConfig&) {
    const Fact* fact = ev.find(fact_id);
    if (!fact || !fact->value.is_array()) return outcome(VerdictStatus::Unknown);
    return outcome(fact->value.empty() ? VerdictStatus::Unsatisfied
                                       : VerdictStatus::Satisfied,
                   {fact_id});
  };
}

Condition count_at_least(std::string fact_id, std::function<int(const CheckConfig&)> cutoff) {
  return [fact_id, cutoff](const EvidenceSet& ev, const CheckConfig& cfg) {
    const Fact* fact = ev.find(fact_id);
    if (!fact || !fact->value.is_number_integer()) return outcome(VerdictStatus::Unknown);
    const bool enough = fact->value.get<int>() >= cutoff(cfg);
    return outcome(enough ? VerdictStatus::Satisfied : VerdictStatus::Unsatisfied, {fact_id});
  };
}

Condition fraction_at_least(std::string fact_id,
                            std::function<double(const CheckConfig&)> cutoff) {
  return [fact_id, cutoff](const EvidenceSet& ev, const CheckConfig& cfg) {
    const Fact* fact = ev.find(fact_id);
    if (!fact || !fact->value.is_number()) return outcome(VerdictStatus::Unknown);
    const bool enough = fact->value.get<double>() >= cutoff(cfg);
    return outcome(enough ? VerdictStatus::Satisfied : VerdictStatus::Unsatisfied, {fact_id});
  };
}

void merge_refs(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& ref : from) {
    if (std::find(into.begin(), into.end(), ref) == into.end()) into.push_back(ref);
  }
}

Condition all_of(std::vector<Condition> parts) {
  return [parts](const EvidenceSet& ev, const CheckConfig& cfg) {
    std::vector<std::string> refs;
    bool any_unknown = false;
    std::vector<std::string> blame;
    for (const auto& part : parts) {
      CheckOutcome o = part(ev, cfg);
      if (o.status == VerdictStatus::Unsatisfied) {
        merge_refs(blame, o.evidence_refs);
      } else if (o.status == VerdictStatus::Unknown) {
        any_unknown = true;
      } else {
        merge_refs(refs, o.evidence_refs);
      }
    }
    if (!blame.empty()) return outcome(VerdictStatus::Unsatisfied, std::move(blame));
    if (any_unknown) return outcome(VerdictStatus::Unknown);
    return outcome(VerdictStatus::Satisfied, std::move(refs));
  };
}

Condition any_of(std::vector<Condition> parts) {
  return [parts](const EvidenceSet& ev, const CheckConfig& cfg) {
    std::vector<std::string> satisfied_refs;
    std::vector<std::string> refuted_refs;
    bool any_unknown = false;
    for (const auto& part : parts) {
      CheckOutcome o = part(ev, cfg);
      if (o.status == VerdictStatus::Satisfied) {
        merge_refs(satisfied_refs, o.evidence_refs);
      } else if (o.status == VerdictStatus::Unknown) {
        any_unknown = true;
      } else {
        merge_refs(refuted_refs, o.evidence_refs);
      }
    }
    if (!satisfied_refs.empty()) return outcome(VerdictStatus::Satisfied, std::move(satisfied_refs));
    if (any_unknown) return outcome(VerdictStatus::Unknown);
    return outcome(VerdictStatus::Unsatisfied, std::move(refuted_refs));
  };
}

Condition external_score_at_least(int level) {
  return [level](const EvidenceSet& ev, const CheckConfig&) {
    const Fact* fact = ev.find("external_score_percent");
    if (!fact) return outcome(VerdictStatus::Unknown);
    std::optional<Rational> percent;
    if (fact->value.is_string()) {
      percent = Rational::parse(fact->value.get<std::string>());
    } else if (fact->value.is_number()) {
      percent = Rational::parse(fact->value.dump());
    }
    if (!percent || percent->is_negative() || *percent > Rational{100}) {
      return outcome(VerdictStatus::Unknown);
    }
    return outcome(map_external_score(*percent) >= level ? VerdictStatus::Satisfied
                                                         : VerdictStatus::Unsatisfied,
                   {"external_score_percent"});
  };
}

}  // namespace

CheckRegistry make_builtin_registry() {
  CheckRegistry reg;
  auto& c = reg.conditions_;

  // Identifier and PID facts.
  c["identifier_url_or_better"] = fact_in("identifier_kind", {"url", "handle", "doi"});
  c["identifier_handle_or_better"] = fact_in("identifier_kind", {"handle", "doi"});
  c["pid_resolves"] = all_of({fact_in("identifier_kind", {"handle", "doi"}),
                              fact_true("resolves_globally")});
  c["pid_with_metadata"] = all_of({fact_in("identifier_kind", {"handle", "doi"}),
                                   fact_true("resolves_globally"),
                                   fact_true("metadata_record_present")});
  c["identifier_with_metadata"] =
      all_of({fact_in("identifier_kind", {"url", "handle", "doi"}),
              fact_true("metadata_record_present")});
  c["pid_machine_harvestable"] =
      all_of({fact_in("identifier_kind", {"doi"}), fact_true("metadata_record_present")});

  // Metadata records.
  c["metadata_record_present"] = fact_true("metadata_record_present");
  c["datacite_mandatory_complete"] = fact_true("datacite_mandatory_complete");
  c["datacite_recommended_complete"] = all_of({fact_true("datacite_mandatory_complete"),
                                               fact_true("datacite_recommended_complete")});
  c["datacite_content_fields"] = fact_true("datacite_content_fields_present");
  c["access_info_human"] = fact_true("access_info_human_readable");
  c["access_info_human_with_license"] =
      all_of({fact_true("access_info_human_readable"), fact_true("license_in_metadata")});
  c["access_info_machine_with_license"] =
      all_of({fact_true("access_info_human_readable"),
              fact_true("access_info_machine_readable"), fact_true("license_in_metadata")});
  c["software_metadata_present"] =
      any_of({fact_in("citation_metadata_kind", {"unstructured", "citation-file", "codemeta"}),
              fact_true("metadata_record_present")});
  c["structured_citation_metadata"] =
      fact_in("citation_metadata_kind", {"citation-file", "codemeta"});
  c["structured_metadata_complete"] =
      any_of({fact_in("citation_metadata_kind", {"citation-file", "codemeta"}),
              fact_true("datacite_mandatory_complete")});
  c["machine_readable_metadata"] =
      any_of({fact_in("citation_metadata_kind", {"citation-file", "codemeta"}),
              all_of({fact_in("identifier_kind", {"doi"}),
                      fact_true("metadata_record_present")})});

  // Meta-repository listing.
  c["repository_locator_known"] =
      any_of({fact_true("repository_locator_present"), fact_true("vcs_remote_present")});
  c["registry_listed"] = fact_true("listed_in_meta_repository");
  c["registry_listed_basic"] =
      all_of({fact_true("listed_in_meta_repository"),
              count_at_least("quality_icon_count",
                             [](const CheckConfig& cfg) { return cfg.icon_cutoff_basic; })});
  c["registry_listed_medium"] =
      all_of({fact_true("listed_in_meta_repository"),
              count_at_least("quality_icon_count",
                             [](const CheckConfig& cfg) { return cfg.icon_cutoff_medium; })});
  c["registry_listed_high"] =
      all_of({fact_true("listed_in_meta_repository"),
              count_at_least("quality_icon_count",
                             [](const CheckConfig& cfg) { return cfg.icon_cutoff_high; })});
  c["online_repository"] =
      any_of({fact_true("vcs_remote_present"), fact_true("repository_locator_present")});

  // External assessment percentage.
  c["external_score_at_least_1"] = external_score_at_least(1);
  c["external_score_at_least_2"] = external_score_at_least(2);
  c["external_score_at_least_3"] = external_score_at_least(3);
  c["external_score_at_least_4"] = external_score_at_least(4);

  // Versioning.
  c["version_tags_present"] = fact_nonempty("tag_list");
  c["semver_tags"] =
      all_of({fact_nonempty("tag_list"),
              fraction_at_least("semver_tags_fraction", [](const CheckConfig& cfg) {
                return cfg.semver_min_fraction;
              })});
  c["versioning_doc_present"] = fact_true("versioning_doc_present");

  // Documentation and repository layout.
  c["readme_present"] = fact_true("readme_present");
  c["usage_doc_present"] =
      any_of({fact_true("readme_present"), fact_true("install_instructions_present")});
  c["contributing_doc_present"] = fact_true("contributing_present");
  c["source_files_present"] = fact_true("source_files_present");
  c["directory_structure"] = fact_true("repo_has_directory_structure");

  // Licensing.
  c["license_present"] =
      any_of({fact_true("license_file_present"), fact_true("license_in_metadata")});
  c["osi_license"] = fact_true("osi_approved");
  c["reuse_compliant"] = fact_true("reuse_compliant");
  c["reuse_ci_job"] = fact_true("reuse_ci_job_present");
  c["contact_info_available"] =
      any_of({fact_true("license_file_present"),
              fact_in("citation_metadata_kind", {"citation-file", "codemeta"}),
              fact_true("contributing_present")});

  // Build, install, test.
  c["install_instructions"] = fact_true("install_instructions_present");
  c["install_script"] = fact_true("install_script_present");
  c["build_tooling"] =
      any_of({fact_true("build_config_present"), fact_true("package_manifest_present")});
  c["package_manifest"] = fact_true("package_manifest_present");
  c["container_package"] = fact_true("container_recipe_present");
  c["test_dir_present"] = fact_true("test_dir_present");
  c["automated_checks"] = all_of({fact_true("ci_config_present"), fact_true("test_dir_present")});

  // Process signals.
  c["vcs_used"] = fact_true("vcs_present");
  c["project_platform"] = fact_true("project_platform_remote");
  c["style_config_or_guide"] =
      any_of({fact_true("lint_config_present"), fact_true("contributing_present")});
  c["lint_config"] = fact_true("lint_config_present");
  c["style_in_ci"] = all_of({fact_true("lint_config_present"), fact_true("ci_config_present")});
  c["dependency_manifest"] = fact_true("package_manifest_present");
  c["pinned_deps_tested"] = all_of({fact_true("lockfile_present"), fact_true("test_dir_present")});
  c["coverage_measured"] = fact_true("coverage_config_present");
  c["multi_env_testing"] = all_of({fact_true("ci_config_present"),
                                   fact_true("coverage_config_present"),
                                   fact_true("container_recipe_present")});

  return reg;
}

const CheckRegistry& CheckRegistry::builtin() {
  static const CheckRegistry registry = make_builtin_registry();
  return registry;
}

bool CheckRegistry::contains(const std::string& check_id) const {
  return conditions_.find(check_id) != conditions_.end();
}

std::vector<std::string> CheckRegistry::ids() const {
  std::vector<std::string> out;
  out.reserve(conditions_.size());
  for (const auto& [id, _] : conditions_) out.push_back(id);
  return out;
}

CheckOutcome CheckRegistry::evaluate(const std::string& check_id, const EvidenceSet& evidence,
                                     const CheckConfig& config) const {
  auto it = conditions_.find(check_id);
  if (it == conditions_.end()) {
    throw ContractViolation("unknown check id '" + check_id + "'");
  }
  CheckOutcome o = it->second(evidence, config);
  o.check_id = check_id;
  return o;
}

}  // namespace qind
