#include <cctype>
#include <nlohmann/json.hpp>
#include <regex>

#include "qind/collectors.hpp"

namespace qind {

namespace {

constexpr const char* kCollector = "datacite";
using nlohmann::json;

std::string percent_encode(const std::string& text) {
  static constexpr char hex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xf]);
    }
  }
  return out;
}

bool nonempty(const json& attrs, const char* key) {
  auto it = attrs.find(key);
  if (it == attrs.end() || it->is_null()) return false;
  if (it->is_string()) return !it->get<std::string>().empty();
  if (it->is_array() || it->is_object()) return !it->empty();
  return true;  // numbers and booleans count as present
}

struct RecordFacts {
  bool mandatory_complete = false;
  bool recommended_complete = false;
  int optional_count = 0;
  bool content_fields = false;
  bool access_human = false;
  bool access_machine = false;
  bool license = false;
};

RecordFacts judge_record(const json& attrs) {
  RecordFacts f;

  // DataCite mandatory: Identifier, Creator, Title, Publisher,
  // PublicationYear, ResourceType.
  const bool has_type = attrs.contains("types") && attrs["types"].is_object() &&
                        nonempty(attrs["types"], "resourceTypeGeneral");
  f.mandatory_complete = nonempty(attrs, "doi") && nonempty(attrs, "creators") &&
                         nonempty(attrs, "titles") && nonempty(attrs, "publisher") &&
                         nonempty(attrs, "publicationYear") && has_type;

  // Recommended: Subject, Contributor, Date, RelatedIdentifier, Description,
  // GeoLocation.
  f.recommended_complete = nonempty(attrs, "subjects") && nonempty(attrs, "contributors") &&
                           nonempty(attrs, "dates") && nonempty(attrs, "relatedIdentifiers") &&
                           nonempty(attrs, "descriptions") && nonempty(attrs, "geoLocations");

  for (const char* key : {"language", "alternateIdentifiers", "sizes", "formats", "version",
                          "rightsList", "fundingReferences"}) {
    if (nonempty(attrs, key)) ++f.optional_count;
  }

  f.content_fields = nonempty(attrs, "descriptions") || nonempty(attrs, "subjects");
  f.access_human = nonempty(attrs, "url") || nonempty(attrs, "descriptions");
  f.license = nonempty(attrs, "rightsList");

  bool structured_rights = false;
  if (attrs.contains("rightsList") && attrs["rightsList"].is_array()) {
    for (const auto& entry : attrs["rightsList"]) {
      if (entry.is_object() &&
          (nonempty(entry, "rightsUri") || nonempty(entry, "rightsIdentifier"))) {
        structured_rights = true;
        break;
      }
    }
  }
  f.access_machine = nonempty(attrs, "contentUrl") || structured_rights;
  return f;
}

}  // namespace

IdentifierKind classify_identifier(const std::string& identifier) {
  const std::string bare = normalize_identifier(identifier);
  static const std::regex doi_re(R"(^10\.\d{4,9}/\S+$)");
  static const std::regex handle_re(R"(^\d[\d.]*/\S+$)");
  if (std::regex_match(bare, doi_re)) return IdentifierKind::Doi;
  if (std::regex_match(bare, handle_re)) return IdentifierKind::Handle;
  if (identifier.rfind("http://", 0) == 0 || identifier.rfind("https://", 0) == 0) {
    return IdentifierKind::Url;
  }
  return IdentifierKind::None;
}

std::string to_string(IdentifierKind kind) {
  switch (kind) {
    case IdentifierKind::None: return "none";
    case IdentifierKind::Url: return "url";
    case IdentifierKind::Handle: return "handle";
    case IdentifierKind::Doi: return "doi";
  }
  return "none";
}

std::string normalize_identifier(const std::string& identifier) {
  std::string bare = identifier;
  for (const char* prefix :
       {"doi:", "DOI:", "hdl:", "https://doi.org/", "http://doi.org/",
        "https://dx.doi.org/", "http://dx.doi.org/", "https://hdl.handle.net/",
        "http://hdl.handle.net/"}) {
    if (bare.rfind(prefix, 0) == 0) {
      bare = bare.substr(std::string(prefix).size());
      break;
    }
  }
  return bare;
}

EvidenceSet fetch_pid_metadata(const std::string& identifier, Fetcher& fetcher,
                               const PidConfig& config) {
  EvidenceSet evidence;
  evidence.target = identifier;

  const IdentifierKind kind = classify_identifier(identifier);
  evidence.add("identifier_kind", to_string(kind), {kCollector, identifier, ""});

  if (kind != IdentifierKind::Doi) {
    // Only DOIs have a metadata source wired up; everything else stays unknown.
    return evidence;
  }

  const std::string doi = normalize_identifier(identifier);
  const std::string url = config.datacite_base + "/dois/" + percent_encode(doi);
  FetchResult res = fetcher.get(url);
  if (!res.ok) {
    evidence.note_failure(kCollector, res.error.empty() ? "lookup failed" : res.error);
    return evidence;
  }

  auto add = [&](const std::string& id, nlohmann::json value) {
    evidence.add(id, std::move(value), {kCollector, url, res.retrieved_at});
  };

  if (res.status == 404 || res.status == 410) {
    add("resolves_globally", false);
    add("metadata_record_present", false);
    add("datacite_mandatory_complete", false);
    add("datacite_recommended_complete", false);
    add("datacite_optional_count", 0);
    add("datacite_content_fields_present", false);
    add("access_info_human_readable", false);
    add("access_info_machine_readable", false);
    add("license_in_metadata", false);
    return evidence;
  }
  if (res.status != 200) {
    evidence.note_failure(kCollector, "unexpected status " + std::to_string(res.status) +
                                          " from " + url);
    return evidence;
  }

  json doc;
  try {
    doc = json::parse(res.body);
  } catch (const json::parse_error& e) {
    evidence.note_failure(kCollector, std::string("bad metadata response: ") + e.what());
    return evidence;
  }

  const json* attrs = nullptr;
  if (doc.contains("data") && doc["data"].is_object() &&
      doc["data"].contains("attributes") && doc["data"]["attributes"].is_object()) {
    attrs = &doc["data"]["attributes"];
  }
  add("resolves_globally", true);
  add("metadata_record_present", attrs != nullptr);
  if (!attrs) {
    add("datacite_mandatory_complete", false);
    add("datacite_recommended_complete", false);
    add("datacite_optional_count", 0);
    add("datacite_content_fields_present", false);
    add("access_info_human_readable", false);
    add("access_info_machine_readable", false);
    add("license_in_metadata", false);
    return evidence;
  }

  const RecordFacts f = judge_record(*attrs);
  add("datacite_mandatory_complete", f.mandatory_complete);
  add("datacite_recommended_complete", f.recommended_complete);
  add("datacite_optional_count", f.optional_count);
  add("datacite_content_fields_present", f.content_fields);
  add("access_info_human_readable", f.access_human);
  add("access_info_machine_readable", f.access_machine);
  add("license_in_metadata", f.license);
  return evidence;
}

}  // namespace qind
