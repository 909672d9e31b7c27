#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qind/rational.hpp"

namespace qind {

// Binding value marking a level as answerable only by a human.
inline constexpr std::string_view kManualBinding = "MANUAL";

struct LevelStatement {
  int level = 0;       // 1..max_level; level 0 is the implicit default
  std::string text;    // the rubric sentence, frozen for built-ins

  bool operator==(const LevelStatement&) const = default;
};

struct Attribute {
  std::string id;
  std::string title;
  std::vector<LevelStatement> levels;       // one statement per level 1..max_level
  Rational default_weight{1};
  std::vector<std::string> check_bindings;  // per level: check id or kManualBinding

  bool manual_at(int level) const;
  const std::string& binding_at(int level) const;

  bool operator==(const Attribute&) const = default;
};

struct Dimension {
  std::string id;
  std::string title;
  std::string description;
  std::vector<Attribute> attributes;

  bool operator==(const Dimension&) const = default;
};

struct Rubric {
  std::string id;
  std::string title;
  int max_level = 0;
  std::vector<Dimension> dimensions;

  int attribute_count() const;
  const Dimension* find_dimension(std::string_view dimension_id) const;
  const Attribute* find_attribute(std::string_view attribute_id) const;
  const Dimension* dimension_of(std::string_view attribute_id) const;

  bool operator==(const Rubric&) const = default;
};

enum class Severity { Error, Warning };

struct Finding {
  Severity severity = Severity::Error;
  std::string path;     // e.g. "dimensions[findable].attributes[versioning]"
  std::string message;

  bool operator==(const Finding&) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const;          // no findings at all
  bool has_errors() const;  // at least one Severity::Error
};

// Checks every structural invariant: unique ids, exactly max_level ordered
// nonempty statements per attribute, positive weights, one binding per level.
// `known_check` (when given) flags bindings that no registered check resolves.
ValidationReport validate_rubric(const Rubric& rubric);
ValidationReport validate_rubric(const Rubric& rubric,
                                 const std::function<bool(const std::string&)>& known_check);

// Built-in rubrics. Throws InputError("rubric-not-found: ...") on unknown id.
const Rubric& builtin_rubric(std::string_view id);
bool is_builtin_rubric(std::string_view id);
std::vector<std::string> builtin_rubric_ids();

}  // namespace qind
