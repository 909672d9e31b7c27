#pragma once

#include <map>
#include <optional>
#include <string>

#include "qind/checks.hpp"
#include "qind/rubric.hpp"
#include "qind/scoring.hpp"

namespace qind {

// One reviewer answer for an attribute: either an explicit level (prefix up
// to that level satisfied, the rest unsatisfied) or per-level yes/no
// statements. An explicit level always needs a justification.
struct ManualAnswer {
  std::optional<int> explicit_level;
  std::map<int, bool> statements;
  std::string justification;
};

// File format: {"rubric": <id>, "answers": {<attribute_id>:
//   {"level": <n>, "justification": <text>} |
//   {"statements": {"<n>": true|false}, "justification"?: <text>}}}
struct ManualAnswers {
  std::string rubric_id;
  std::map<std::string, ManualAnswer> answers;

  static ManualAnswers parse(const std::string& text);
  static ManualAnswers load_file(const std::string& path);

  // Throws InputError listing every answer keyed by an attribute the rubric
  // does not define, plus range/justification violations.
  void validate_against(const Rubric& rubric) const;
};

// Turns evidence plus manual answers into one ordered verdict list per
// rubric attribute. Resolution per level: explicit level override, then a
// manual statement, then the bound check, else unknown/defaulted.
std::map<std::string, std::vector<Verdict>> derive_verdicts(
    const Rubric& rubric, const EvidenceSet& evidence, const ManualAnswers& answers,
    const CheckRegistry& registry = CheckRegistry::builtin(),
    const CheckConfig& config = {});

}  // namespace qind
