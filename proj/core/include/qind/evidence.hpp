#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace qind {

struct Provenance {
  std::string collector;     // e.g. "local-scan", "datacite", "registry"
  std::string source;        // file path, URL, or cache entry the fact came from
  std::string retrieved_at;  // ISO timestamp for remote facts; empty for local ones

  bool operator==(const Provenance&) const = default;
};

struct Fact {
  nlohmann::json value;
  Provenance provenance;

  bool operator==(const Fact&) const = default;
};

struct CollectorFailure {
  std::string collector;
  std::string reason;

  bool operator==(const CollectorFailure&) const = default;
};

// Facts harvested about one target. Fact ids are unique; a collector that
// cannot establish something simply leaves the fact out (checks then read
// it as unknown, never as satisfied).
struct EvidenceSet {
  std::string target;
  std::map<std::string, Fact> facts;
  std::vector<CollectorFailure> failures;

  bool has(const std::string& fact_id) const;
  const Fact* find(const std::string& fact_id) const;

  // Throws ContractViolation if the fact id is already present.
  void add(std::string fact_id, nlohmann::json value, Provenance provenance);
  void note_failure(std::string collector, std::string reason);

  // Deterministic merge by fact id; colliding ids are an error.
  static EvidenceSet merged(std::vector<EvidenceSet> parts);
};

}  // namespace qind
