#include "builtin_detail.hpp"

namespace qind {

namespace {

constexpr const char* M = "MANUAL";

Attribute attr(std::string id, std::string title, std::vector<std::string> texts,
               std::vector<std::string> bindings) {
  Attribute a;
  a.id = std::move(id);
  a.title = std::move(title);
  a.default_weight = Rational{1};
  for (size_t i = 0; i < texts.size(); ++i) {
    a.levels.push_back({static_cast<int>(i + 1), std::move(texts[i])});
  }
  a.check_bindings = std::move(bindings);
  return a;
}

Rubric make_fairst() {
  Rubric r;
  r.id = "fairst";
  r.title = "Quality indicator for research software publications (FAIR-ST)";
  r.max_level = 5;

  Dimension findable;
  findable.id = "findable";
  findable.title = "Findable";
  findable.description =
      "Researchers need to be able to find the software using typical search strategies. "
      "Having found a given software product, they have to be able to identify a given "
      "version/release and be provided with enough information to value the software for "
      "their specific research.";
  findable.attributes.push_back(attr(
      "open-publication-repository", "Open Publication Repository",
      {"The software is contained in an online repository.",
       "Some kind of description is available giving further information on the software in "
       "this repository (e.g. readme file).",
       "A structured meta data description (e.g. following DataCite) given for software is "
       "in this repository.",
       "The repository is listed in some overarching meta-repository (e.g. Helmholtz "
       "Research Software Directory (RSD)).",
       "The meta-repository is performing quality checks (e.g. re3data) for the used "
       "publication repository."},
      {"online_repository", "readme_present", "structured_citation_metadata",
       "registry_listed", M}));
  findable.attributes.push_back(attr(
      "versioning", "Versioning",
      {"There is some kind of versioning for the software.",
       "The software uses structured (e.g. semantic) versioning.",
       "A description of the versioning scheme is available.",
       "There is a documentation on release cycles for the software.",
       "The versioning scheme allows for automatic tagging by CI/CD processes."},
      {"version_tags_present", "semver_tags", "versioning_doc_present", M, M}));
  findable.attributes.push_back(attr(
      "persistent-identifier", "Persistent Identifier (PID)",
      {"A handle/URL is provided to identify the software.",
       "The handle/URL is provided with a defined metadata scheme.",
       "A persistent identifier is provided.",
       "A PID allowing for automated harvesting of metadata information is provided.",
       "The PID is part of an established community standard."},
      {"identifier_url_or_better", "identifier_with_metadata", "pid_resolves",
       "pid_machine_harvestable", M}));
  findable.attributes.push_back(attr(
      "rich-metadata", "Rich Metadata",
      {"Some metadata information is provided with the software.",
       "The metadata information is following a given metadata scheme complete.",
       "A metadata curation process reflects changes/updates.",
       "All metadata information following the given metadata scheme can be automatically "
       "harvested.",
       "An external quality assessment of the metadata exists."},
      {"software_metadata_present", "structured_metadata_complete", M,
       "machine_readable_metadata", M}));
  r.dimensions.push_back(std::move(findable));

  Dimension accessible;
  accessible.id = "accessible";
  accessible.title = "Accessible";
  accessible.description =
      "Software needs to be accessible in order to unfold its potential. Hereby, "
      "accessibility has both a legal side as well as an operational side.";
  accessible.attributes.push_back(attr(
      "access-conditions", "Access Conditions (organizational)",
      {"A contact is given which to inquire about the right to use the software.",
       "The software has a license describing rights of use.",
       "The license allows for open use of the software (e.g. OSI licenses).",
       "There is a way to also obtain some kind of support in using the software.",
       "There isa community, providing the opportunity of support and exchange concerning "
       "aspects of using the software."},
      {"contact_info_available", "license_present", "osi_license", M, M}));
  accessible.attributes.push_back(attr(
      "access-options", "Access Options (process)",
      {"The software (source code or executable) is provided.",
       "The sources or executables being provided include some documentation on how to "
       "install/use the software.",
       "Provided test cases allow to determine whether installation/execution worked as "
       "being expected.",
       "Provided checks make sure the software works correctly.",
       "A software service is provided, i.e. are reported bugs taken into the development "
       "cycle."},
      {"source_files_present", "usage_doc_present", "test_dir_present", "automated_checks",
       M}));
  accessible.attributes.push_back(attr(
      "technical-accessibility", "Technical Accessibility (run/start)",
      {"“How to install” information is provided.",
       "Installation scripts are provided.",
       "The software allows for (semi-)automated installation, e.g. a Makefile or manual "
       "package (like Python modules).",
       "Sources are provided such that a package manager or automated build tools , e.g. "
       "automake, can be used.",
       "A complete package that enables execution (e.g. container, app package) is "
       "available."},
      {"install_instructions", "install_script", "build_tooling", "package_manifest",
       "container_package"}));
  r.dimensions.push_back(std::move(accessible));

  Dimension interoperable;
  interoperable.id = "interoperable";
  interoperable.title = "Interoperable";
  interoperable.description =
      "For software to be interoperable, it must be capable of being included into larger "
      "contexts or frameworks. Towards this aim, input/output formats need to be considered "
      "as well as interfaces to use the software in automated pipelines.";
  interoperable.attributes.push_back(attr(
      "io-formats", "Input/Output Formats",
      {"Some description of input and output formats is provided.",
       "The software builds on standard formats for input and output.",
       "Additional options for varying input/output formats are provided.",
       "The software builds on accepted community standards for input/output data.",
       "The software provides in addition further tools for processing input/output data."},
      {M, M, M, M, M}));
  interoperable.attributes.push_back(attr(
      "adaptability", "Adaptability/Flexibility of Use",
      {"There is a way to use the software with one defined set of input data.",
       "There are parameters to adjust the way the software is working.",
       "There is some way of logging what is done during execution.",
       "Documented API(s) are provided to integrate the software into one’s own "
       "framework.",
       "There is documented way to integrate the software into open workflows, e.g. via "
       "containers, web-services etc."},
      {M, M, M, M, M}));
  r.dimensions.push_back(std::move(interoperable));

  Dimension reusable;
  reusable.id = "reusable";
  reusable.title = "Reusable";
  reusable.description =
      "Using software for exactly the purpose it has been developed for is considered as "
      "accessibility within the quality assessment. In contrast, reusability considered the "
      "aspect of being able/allowed to use the code for one’s own purposes, to adapt and "
      "extend the software.";
  reusable.attributes.push_back(attr(
      "reusability-conditions", "Reusability Conditions",
      {"The software uses a custom license allowing reuse.",
       "The software uses a FOSS/OSI approved license including that license dependencies "
       "are at least being checked manually.",
       "The software uses an appropriate license for different file types (code, text, "
       "images etc.) following e.g. the REUSE specification.",
       "There is a process available for automatically checking e.g. the REUSE "
       "specification.",
       "There is a process available such that all license dependencies are automatically "
       "controlled."},
      {"license_present", "osi_license", "reuse_compliant", "reuse_ci_job", M}));
  r.dimensions.push_back(std::move(reusable));

  Dimension scientific;
  scientific.id = "scientific-basis";
  scientific.title = "Scientific basis";
  scientific.description =
      "Research software is an integral part of the research process. It therefore has to "
      "also follow community/organization specified common standards in performing research. "
      "While the contribution of software to a certain scientific achievement must be "
      "evaluated by dedicated experts in the field, some aspects of scientific quality can "
      "also be considered in wider generality.";
  scientific.attributes.push_back(attr(
      "community-standards", "Community Standards",
      {"The connection to known (scientific) standards is drawn.",
       "The software follows standards of the relevant scientific community.",
       "The software complies with relevant scientific standards of the field.",
       "There is an indication on how further evolution of community standards will be "
       "addressed.",
       "A closed feedback-loop is established, making sure that further evolutions of "
       "community standards are being adopted."},
      {M, M, M, M, M}));
  scientific.attributes.push_back(attr(
      "team-expertise", "Team Expertise",
      {"Clear expertise from a single, relevant domain is part of the software development "
       "team.",
       "The software development team has access to expertise in several relevant domains.",
       "The software development team has access to expertise in all relevant domains.",
       "A fixed, established, interdisciplinary team works on the software.",
       "An established and coordinated community of software developers works on the "
       "software."},
      {M, M, M, M, M}));
  scientific.attributes.push_back(attr(
      "scientific-embedding", "Scientific Embedding",
      {"At least one scientific use case is documented.",
       "A broader scientific context is documented including several examples.",
       "The software development is at least loosely connected to some scientific "
       "initiative.",
       "The software development is part of a larger scientific initiative.",
       "The software development ispart of a larger scientific initiative with dedicated "
       "processes for software development."},
      {M, M, M, M, M}));
  r.dimensions.push_back(std::move(scientific));

  Dimension technical;
  technical.id = "technical-basis";
  technical.title = "Technical basis";
  technical.description =
      "Quality of software also reflects general aspects of software engineering. At the "
      "end, software has to guarantee to actually produce what it has been aimed to do. "
      "Professional software development aims at producing software following "
      "state-of-the-art software engineering concepts. Thus, aspects of professional "
      "software engineering must also be considered as part of a quality assessment of "
      "research software development.";
  technical.attributes.push_back(attr(
      "project-management", "Project Management",
      {"Some kind of version control is used.",
       "A version control system is used.",
       "A version control system being part of a code project management platform (e.g. "
       "GitHub, GitLab) and an associated ticket system is in place.",
       "A transparent process for ticket resolving, code review by other developer, and "
       "merge requests is established.",
       "A release process with guaranteed changelog generation, testing, and product "
       "provisioning is established."},
      {"vcs_used", "vcs_used", "project_platform", M, M}));
  technical.attributes.push_back(attr(
      "repository-structure", "Repository Structure",
      {"All files are provided in some structured/unstructured way inside the repository.",
       "The repository is structured albeit maybe in a manner such that every contributor is "
       "free to follow own way of organizing files.",
       "A contribution mechanism is documented, e.g. CONTRIBUTORS.md file, as well as a "
       "defined structure for the repository and a documented onboarding process.",
       "A common template for the repository structure is available, as well as some kind of "
       "identification of deviation.",
       "A repository structure is enforced following community standards."},
      {"source_files_present", "directory_structure", "contributing_doc_present", M, M}));
  technical.attributes.push_back(attr(
      "code-structure", "Code Structure",
      {"Every developer is free to use his/her own style of coding.",
       "There are general recommendations for coding, albeit every developer being able to "
       "follow his/her own style.",
       "There is some harmonization of code style being enforced following common standards "
       "including meaningful naming of functions/variables etc.",
       "The code style is checked when accepting changes into the repository.",
       "The code style is enforced via a review process (e.g. failed pipelines or "
       "auto-formatting)."},
      {"source_files_present", "style_config_or_guide", "lint_config", "style_in_ci", M}));
  technical.attributes.push_back(attr(
      "reproducibility", "Reproducibility (Code)",
      {"The code follows a modular structure allowing for component reusability.",
       "Clear system requirements are documented with min/max versions, albeit version "
       "pinning, modularity etc. being enforced manually.",
       "A package manager is used for dependency pinning and testing enforced.",
       "Test coverage is measured, albeit tests may be written on a voluntary basis.",
       "Automated testing for different system environments, requirements for minimal test "
       "coverage, and provisioning of containerized packages is done."},
      {"directory_structure", "dependency_manifest", "pinned_deps_tested",
       "coverage_measured", "multi_env_testing"}));
  technical.attributes.push_back(attr(
      "code-change-process", "Code change process",
      {"Internal 4-eye principle for accepting changes",
       "Code changes via transparent processes, e.g. merge/pull request",
       "Approval of code changes via transparent processes and with a 4-eye principle",
       "Integration of code changes into main development branch/releases only allowed for "
       "specifically named/trained persons.",
       "Software releases involve an external review (by someone outside of the core "
       "developer team)"},
      {M, M, M, M, M}));
  technical.attributes.push_back(attr(
      "security", "Security",
      {"There are at least sporadic updates and dependency checks.",
       "There is a systematic assessment of dependencies and documentation of the software "
       "stack.",
       "Deployment is provided within a CI/CD framework for different environments including "
       "tools for check for security leaks.",
       "There is some process for monitoring dependency updates including reporting.",
       "There are regular and automated security monitoring and an automated update process "
       "in place allowing merges only of security checks have been passed."},
      {M, M, M, M, M}));
  r.dimensions.push_back(std::move(technical));

  return r;
}

}  // namespace

const Rubric& builtin_fairst() {
  static const Rubric rubric = make_fairst();
  return rubric;
}

}  // namespace qind
