#include "builtin_detail.hpp"

namespace qind {

namespace {

constexpr const char* M = "MANUAL";

Attribute attr(std::string id, std::string title, Rational weight,
               std::vector<std::string> texts, std::vector<std::string> bindings) {
  Attribute a;
  a.id = std::move(id);
  a.title = std::move(title);
  a.default_weight = weight;
  for (size_t i = 0; i < texts.size(); ++i) {
    a.levels.push_back({static_cast<int>(i + 1), std::move(texts[i])});
  }
  a.check_bindings = std::move(bindings);
  return a;
}

Rubric make_pocme() {
  Rubric r;
  r.id = "pocme";
  r.title = "Quality indicator for research data publications (POCME)";
  r.max_level = 4;

  Dimension publishing;
  publishing.id = "publishing";
  publishing.title = "Publishing";
  publishing.description =
      "This dimension covers especially the areas of Findability and Accessibility. It "
      "addresses the use of identifiers to enable unambiguous identification as well as the "
      "level of storage and hence the possibilities and information on the general "
      "accessibility to published data.";
  publishing.attributes.push_back(attr(
      "published-with-identifier", "Published with Identifier", Rational{1},
      {"Basic Uniform Resource Identifier",
       "Dataset is identifiable via internal handle (does not resolve globally, generally no "
       "metadata)",
       "Dataset is basically identifiable via formalized, standardized, persistent identifier "
       "(resolves globally, general metadata provided)",
       "Dataset is identifiable via globally unique, formalized, standardized, persistent "
       "identifier supported by general metadata (e.g. DOI)."},
      {"identifier_url_or_better", "identifier_handle_or_better", "pid_resolves",
       "pid_with_metadata"}));
  publishing.attributes.push_back(attr(
      "meta-repository-listing",
      "Published via a Repository or Collection, that is indexed in a Meta-Repository (e.g. "
      "re3data)",
      Rational{1},
      {"The data is published in a repository/ collection which is not listed in an eligible "
       "meta-repository",
       "The repository/collection is listed in an eligible meta-repository, basic no. of "
       "quality indicators assigned by the meta-repository are achieved",
       "The repository/collection is listed in an eligible meta-repository, medium no. of "
       "quality indicators assigned by the meta-repository are achieved",
       "The repository/collection is listed in an eligible meta-repository, high no. of "
       "quality indicators assigned by the meta-repository are achieved"},
      {"repository_locator_known", "registry_listed_basic", "registry_listed_medium",
       "registry_listed_high"}));
  publishing.attributes.push_back(attr(
      "access-information", "Published with Information on Access to the Data", Rational{1},
      {"Metadata available, but no data access-information available in the metadata",
       "Metadata available, data access-information available only in human-readable form",
       "Metadata available, data access-information available only in human readable form, "
       "including general license information",
       "Metadata available, data access-information available in human-readable and "
       "machine-readable form*, including license information"},
      {"metadata_record_present", "access_info_human", "access_info_human_with_license",
       "access_info_machine_with_license"}));
  r.dimensions.push_back(std::move(publishing));

  Dimension openness;
  openness.id = "openness";
  openness.title = "Openness";
  openness.description =
      "As publishing a dataset does not necessarily mean to make it openly available "
      "(Intelligent Openness), this dimension takes this circumstance into account and covers "
      "aspects of Accessibility, Interoperability and Reusability.";
  openness.attributes.push_back(attr(
      "degree-of-openness", "General Degree of Openness", Rational{1},
      {"Information available: no open accessibility/availability of the data. No "
       "justification, no information on possible contact or restrictions",
       "Like (1) + information on possible contact, restrictions or potential use cases on "
       "request available",
       "Like (2) + with justification AND/OR date of moratorium",
       "Open accessibility with corresponding license (no login or contact needed or "
       "otherwise with justification)"},
      {M, M, M, M}));
  openness.attributes.push_back(attr(
      "primary-data-formats", "Primary Data Formats", Rational{1},
      {"Primary data generally available",
       "Primary data stored in common proprietary data formats",
       "Primary data stored in open formats",
       "Primary data makes use of common, domain specific terminologies (e.g., codelists)"},
      {M, M, M, M}));
  r.dimensions.push_back(std::move(openness));

  Dimension curation;
  curation.id = "curation";
  curation.title = "Curation";
  curation.description =
      "Curation can be crucial for the quality of published data itself as well as for the "
      "provided formal and content related information. Hence, it can significantly improve "
      "the value of a published dataset for Reusability as well as for Findability, "
      "Accessibility, and Interoperability.";
  curation.attributes.push_back(attr(
      "level-of-curation", "Level of Curation", Rational{1},
      {"Data is published in raw form without curation but according to standard with basic "
       "documentation like readme (e.g. automatic generated sensor data, long-tail data "
       "following a basic scheme)",
       "Data is published in cleaned form with some curation (e.g. brief checking, "
       "documentation according to standard)",
       "Data is published in cleaned form with enhanced curation and/ or reprocessing (e.g. "
       "conversion to new formats, enhancement of documentation)",
       "Data is published after undergoing extensive curation and/or reprocessing according "
       "to discipline specific standards in order to enhance to max. quality (like (3) + "
       "additional editing of deposited data for accuracy)"},
      {M, M, M, M}));
  r.dimensions.push_back(std::move(curation));

  Dimension metadata;
  metadata.id = "metadata";
  metadata.title = "Metadata";
  metadata.description =
      "Qualitative metadata can help in many aspects of Findability, Accessibility, "
      "Interoperability, and Reusability of published data. By providing content related "
      "aspects, helpful information to retrieve a dataset as well as context around a "
      "dataset.";
  metadata.attributes.push_back(attr(
      "formal-metadata", "Metadata to find/retrieve a Resource / Formal Metadata", Rational{1},
      {"Metadata available for/with the data publication that is not structured according to "
       "a commonly accepted scheme (i.e. no scheme applied)",
       "Metadata provided with the data publication that is structured in a basic way "
       "according to a commonly accepted scheme (e.g. completed DataCite "
       "mandatory-properties/discovery ; Dublin Core, etc.)",
       "Metadata provided with the data publication that is structured in an advanced way, "
       "according to a commonly accepted scheme (e.g., completed Datacite mandatory- and "
       "recommended-properties for discovery + discovery-supporting basic content metadata "
       "according to DataCite scheme)",
       "Full Metadata provided with the data publication (complete DataCite mandatory- and "
       "recommended- and optional-properties for discovery + comprehensive "
       "discovery-supporting content metadata according to DataCite scheme)"},
      {"metadata_record_present", "datacite_mandatory_complete",
       "datacite_recommended_complete", M}));
  metadata.attributes.push_back(attr(
      "content-metadata", "Content related Metadata", Rational{1},
      {"Some content related metadata available, following a (generic) scheme (e.g. DataCite)",
       "Complete content related metadata available following a (generic) scheme (e.g. "
       "DataCite)",
       "Some content related metadata available following standardized form or domain "
       "specific scheme",
       "Complete and curated content related metadata available following a standardized "
       "form and domain specific scheme (see 3)"},
      {"datacite_content_fields", M, M, M}));
  r.dimensions.push_back(std::move(metadata));

  Dimension external;
  external.id = "external-view";
  external.title = "External View";
  external.description =
      "This dimension is meant as a handle to compensate inadequacies between different "
      "disciplines which is a sensible approach when applying a general framework like the "
      "proposed.";
  // Weighted low by default; overridable through a weights file.
  external.attributes.push_back(attr(
      "external-assessment-score", "Score from Domain Specific Fair Assessment Tool",
      Rational{1, 2},
      {"21-40% Score reached", "41-60% Score reached", "61-80% Score reached",
       "81-100% Score reached"},
      {"external_score_at_least_1", "external_score_at_least_2", "external_score_at_least_3",
       "external_score_at_least_4"}));
  r.dimensions.push_back(std::move(external));

  return r;
}

}  // namespace

const Rubric& builtin_pocme() {
  static const Rubric rubric = make_pocme();
  return rubric;
}

}  // namespace qind
