#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qind/evidence.hpp"
#include "qind/scoring.hpp"

namespace qind {

// Knobs for checks whose thresholds the underlying scale leaves open.
struct CheckConfig {
  // Meta-repository quality indicator (icon) counts for the basic/medium/high
  // listing levels. Not fixed by the scale; override to taste.
  int icon_cutoff_basic = 1;
  int icon_cutoff_medium = 3;
  int icon_cutoff_high = 5;
  // Minimum fraction of version tags that must parse as semver.
  double semver_min_fraction = 0.5;
};

struct CheckOutcome {
  std::string check_id;
  VerdictStatus status = VerdictStatus::Unknown;
  std::vector<std::string> evidence_refs;  // fact ids consulted with effect
};

// Named, positive-condition predicates over evidence. Positive-condition
// means monotone: adding facts can turn unknown into satisfied/unsatisfied
// but never flips satisfied to unsatisfied.
class CheckRegistry {
 public:
  using Condition =
      std::function<CheckOutcome(const EvidenceSet&, const CheckConfig&)>;

  static const CheckRegistry& builtin();

  bool contains(const std::string& check_id) const;
  std::vector<std::string> ids() const;

  // Unknown check id throws ContractViolation (rubric validation catches
  // those earlier for user-supplied rubrics).
  CheckOutcome evaluate(const std::string& check_id, const EvidenceSet& evidence,
                        const CheckConfig& config = {}) const;

 private:
  std::map<std::string, Condition> conditions_;

  friend CheckRegistry make_builtin_registry();
};

}  // namespace qind
