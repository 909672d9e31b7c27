#include "qind/evidence.hpp"

#include "qind/errors.hpp"

namespace qind {

bool EvidenceSet::has(const std::string& fact_id) const {
  return facts.find(fact_id) != facts.end();
}

const Fact* EvidenceSet::find(const std::string& fact_id) const {
  auto it = facts.find(fact_id);
  return it == facts.end() ? nullptr : &it->second;
}

void EvidenceSet::add(std::string fact_id, nlohmann::json value, Provenance provenance) {
  auto [it, inserted] =
      facts.try_emplace(std::move(fact_id), Fact{std::move(value), std::move(provenance)});
  if (!inserted) {
    throw ContractViolation("duplicate fact id '" + it->first + "'");
  }
}

void EvidenceSet::note_failure(std::string collector, std::string reason) {
  failures.push_back({std::move(collector), std::move(reason)});
}

EvidenceSet EvidenceSet::merged(std::vector<EvidenceSet> parts) {
  EvidenceSet out;
  for (auto& part : parts) {
    if (out.target.empty()) out.target = part.target;
    for (auto& [id, fact] : part.facts) {
      auto [it, inserted] = out.facts.try_emplace(id, std::move(fact));
      if (!inserted) {
        throw ContractViolation("evidence merge collision on fact id '" + id + "'");
      }
    }
    for (auto& failure : part.failures) {
      out.failures.push_back(std::move(failure));
    }
  }
  return out;
}

}  // namespace qind
