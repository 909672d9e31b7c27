#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qind/evidence.hpp"
#include "qind/fetcher.hpp"

namespace qind {

// Static facts about a source tree: version control, tags, docs, licensing,
// packaging, CI. Includes the REUSE facts from check_reuse_compliance().
// Throws IoError when the path does not exist or is not a directory; a
// directory that is not a repository is fine (vcs_present=false).
EvidenceSet scan_local_repository(const std::filesystem::path& path);

// Simplified REUSE check: every non-binary file carries an SPDX tag or is
// covered by a .reuse/dep5 Files stanza, and every referenced license id
// has a matching file under LICENSES/.
EvidenceSet check_reuse_compliance(const std::filesystem::path& path);

struct PidConfig {
  // DataCite-style JSON API root; override for test doubles
  // (environment: QIND_DATACITE_BASE).
  std::string datacite_base = "https://api.datacite.org";
};

// Classifies the identifier (doi / handle / url) and, for DOIs, pulls the
// metadata record to judge completeness. Network problems degrade to
// missing facts plus a failure entry, never to an exception.
EvidenceSet fetch_pid_metadata(const std::string& identifier, Fetcher& fetcher,
                               const PidConfig& config = {});

struct RegistryConfig {
  // Meta-repository lookup endpoint root (environment: QIND_REGISTRY_BASE).
  std::string registry_base = "https://registry.example.org";
  // Which meta-repositories count as eligible for the listing levels.
  std::vector<std::string> eligible = {"re3data"};
};

// Asks the configured meta-repository registry whether the repository
// behind `locator` is listed and how many quality indicators it carries.
EvidenceSet lookup_meta_repository(const std::string& locator, Fetcher& fetcher,
                                   const RegistryConfig& config = {});

// Identifier taxonomy used for target-kind inference as well.
enum class IdentifierKind { None, Url, Handle, Doi };
IdentifierKind classify_identifier(const std::string& identifier);
std::string to_string(IdentifierKind kind);

// Strips doi:/hdl:/resolver-URL prefixes down to the bare identifier.
std::string normalize_identifier(const std::string& identifier);

}  // namespace qind
