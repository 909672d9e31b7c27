#include "qind/manual_answers.hpp"

#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qind/errors.hpp"

namespace qind {

namespace {

using nlohmann::json;

ManualAnswer parse_answer(const json& node, const std::string& attribute_id) {
  if (!node.is_object()) {
    throw InputError("answers: entry for '" + attribute_id + "' must be an object");
  }
  for (auto it = node.begin(); it != node.end(); ++it) {
    if (it.key() != "level" && it.key() != "statements" && it.key() != "justification") {
      throw InputError("answers: unknown key '" + it.key() + "' for '" + attribute_id + "'");
    }
  }

  ManualAnswer answer;
  if (auto it = node.find("justification"); it != node.end()) {
    if (!it->is_string()) {
      throw InputError("answers: justification for '" + attribute_id + "' must be a string");
    }
    answer.justification = it->get<std::string>();
  }

  const bool has_level = node.contains("level");
  const bool has_statements = node.contains("statements");
  if (has_level == has_statements) {
    throw InputError("answers: '" + attribute_id +
                     "' needs exactly one of 'level' or 'statements'");
  }

  if (has_level) {
    const json& lv = node.at("level");
    if (!lv.is_number_integer()) {
      throw InputError("answers: level for '" + attribute_id + "' must be an integer");
    }
    answer.explicit_level = lv.get<int>();
    if (answer.justification.empty()) {
      throw InputError("answers: explicit level for '" + attribute_id +
                       "' requires a justification");
    }
  } else {
    const json& stmts = node.at("statements");
    if (!stmts.is_object()) {
      throw InputError("answers: statements for '" + attribute_id + "' must be an object");
    }
    for (auto it = stmts.begin(); it != stmts.end(); ++it) {
      int level = 0;
      const std::string& key = it.key();
      auto res = std::from_chars(key.data(), key.data() + key.size(), level);
      if (res.ec != std::errc{} || res.ptr != key.data() + key.size() || level < 1) {
        throw InputError("answers: statement key '" + key + "' for '" + attribute_id +
                         "' is not a level number");
      }
      if (!it->is_boolean()) {
        throw InputError("answers: statement " + key + " for '" + attribute_id +
                         "' must be true or false");
      }
      answer.statements[level] = it->get<bool>();
    }
  }
  return answer;
}

}  // namespace

ManualAnswers ManualAnswers::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("answers: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("answers: document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "rubric" && it.key() != "answers") {
      throw InputError("answers: unknown top-level key '" + it.key() + "'");
    }
  }

  ManualAnswers out;
  if (auto it = doc.find("rubric"); it != doc.end()) {
    if (!it->is_string()) throw InputError("answers: 'rubric' must be a string");
    out.rubric_id = it->get<std::string>();
  }
  if (auto it = doc.find("answers"); it != doc.end()) {
    if (!it->is_object()) throw InputError("answers: 'answers' must be an object");
    for (auto a = it->begin(); a != it->end(); ++a) {
      out.answers.emplace(a.key(), parse_answer(a.value(), a.key()));
    }
  }
  return out;
}

ManualAnswers ManualAnswers::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("answers: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void ManualAnswers::validate_against(const Rubric& rubric) const {
  if (!rubric_id.empty() && rubric_id != rubric.id) {
    throw InputError("answers: written for rubric '" + rubric_id + "', assessing with '" +
                     rubric.id + "'");
  }
  std::vector<std::string> unknown;
  for (const auto& [attribute_id, answer] : answers) {
    const Attribute* attr = rubric.find_attribute(attribute_id);
    if (!attr) {
      unknown.push_back(attribute_id);
      continue;
    }
    if (answer.explicit_level &&
        (*answer.explicit_level < 0 || *answer.explicit_level > rubric.max_level)) {
      throw InputError("answers: level " + std::to_string(*answer.explicit_level) + " for '" +
                       attribute_id + "' outside [0, " + std::to_string(rubric.max_level) +
                       "]");
    }
    for (const auto& [level, _] : answer.statements) {
      if (level < 1 || level > rubric.max_level) {
        throw InputError("answers: statement level " + std::to_string(level) + " for '" +
                         attribute_id + "' outside 1.." + std::to_string(rubric.max_level));
      }
    }
  }
  if (!unknown.empty()) {
    std::string joined;
    for (const auto& id : unknown) {
      if (!joined.empty()) joined += ", ";
      joined += id;
    }
    throw InputError("answers: unknown attribute ids: " + joined);
  }
}

std::map<std::string, std::vector<Verdict>> derive_verdicts(const Rubric& rubric,
                                                            const EvidenceSet& evidence,
                                                            const ManualAnswers& answers,
                                                            const CheckRegistry& registry,
                                                            const CheckConfig& config) {
  answers.validate_against(rubric);

  std::map<std::string, std::vector<Verdict>> out;
  for (const auto& dim : rubric.dimensions) {
    for (const auto& attr : dim.attributes) {
      const ManualAnswer* answer = nullptr;
      if (auto it = answers.answers.find(attr.id); it != answers.answers.end()) {
        answer = &it->second;
      }

      std::vector<Verdict> verdicts;
      verdicts.reserve(static_cast<size_t>(rubric.max_level));
      for (int level = 1; level <= rubric.max_level; ++level) {
        Verdict v;
        v.level = level;

        if (answer && answer->explicit_level) {
          // Reviewer pinned a level: satisfied prefix, unsatisfied rest.
          v.status = level <= *answer->explicit_level ? VerdictStatus::Satisfied
                                                      : VerdictStatus::Unsatisfied;
          v.source = VerdictSource::Manual;
          v.note = answer->justification;
        } else if (answer && answer->statements.count(level)) {
          v.status = answer->statements.at(level) ? VerdictStatus::Satisfied
                                                  : VerdictStatus::Unsatisfied;
          v.source = VerdictSource::Manual;
          v.note = answer->justification;
        } else if (!attr.manual_at(level)) {
          CheckOutcome o = registry.evaluate(attr.binding_at(level), evidence, config);
          v.status = o.status;
          v.source = VerdictSource::Auto;
          v.evidence_refs = std::move(o.evidence_refs);
        } else {
          v.status = VerdictStatus::Unknown;
          v.source = VerdictSource::Defaulted;
        }
        verdicts.push_back(std::move(v));
      }
      out.emplace(attr.id, std::move(verdicts));
    }
  }
  return out;
}

}  // namespace qind
