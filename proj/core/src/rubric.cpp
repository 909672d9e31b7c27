#include "qind/rubric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "builtin_detail.hpp"
#include "qind/errors.hpp"

namespace qind {

bool Attribute::manual_at(int level) const { return binding_at(level) == kManualBinding; }

const std::string& Attribute::binding_at(int level) const {
  if (level < 1 || level > static_cast<int>(check_bindings.size())) {
    throw ContractViolation("no binding for level " + std::to_string(level) +
                            " of attribute '" + id + "'");
  }
  return check_bindings[static_cast<size_t>(level - 1)];
}

int Rubric::attribute_count() const {
  int n = 0;
  for (const auto& d : dimensions) n += static_cast<int>(d.attributes.size());
  return n;
}

const Dimension* Rubric::find_dimension(std::string_view dimension_id) const {
  for (const auto& d : dimensions) {
    if (d.id == dimension_id) return &d;
  }
  return nullptr;
}

const Attribute* Rubric::find_attribute(std::string_view attribute_id) const {
  for (const auto& d : dimensions) {
    for (const auto& a : d.attributes) {
      if (a.id == attribute_id) return &a;
    }
  }
  return nullptr;
}

const Dimension* Rubric::dimension_of(std::string_view attribute_id) const {
  for (const auto& d : dimensions) {
    for (const auto& a : d.attributes) {
      if (a.id == attribute_id) return &d;
    }
  }
  return nullptr;
}

bool ValidationReport::ok() const { return findings.empty(); }

bool ValidationReport::has_errors() const {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::Error; });
}

namespace {

void check_attribute(const Rubric& rubric, const Dimension& dim, const Attribute& attr,
                     const std::function<bool(const std::string&)>& known_check,
                     ValidationReport& report) {
  const std::string path = "dimensions[" + dim.id + "].attributes[" + attr.id + "]";
  auto error = [&](std::string message) {
    report.findings.push_back({Severity::Error, path, std::move(message)});
  };

  if (attr.id.empty()) error("attribute id is empty");
  if (attr.title.empty()) error("attribute title is empty");
  if (attr.default_weight.is_zero() || attr.default_weight.is_negative()) {
    error("default_weight must be strictly positive, got " + attr.default_weight.to_string());
  }

  // Exactly one statement per level 1..max_level, in order, nonempty.
  std::vector<int> missing;
  for (int level = 1; level <= rubric.max_level; ++level) {
    if (static_cast<int>(attr.levels.size()) < level ||
        attr.levels[static_cast<size_t>(level - 1)].level != level) {
      missing.push_back(level);
    }
  }
  if (!missing.empty()) {
    std::ostringstream oss;
    oss << "missing levels ";
    for (size_t i = 0; i < missing.size(); ++i) {
      if (i > 0) oss << ",";
      oss << missing[i];
    }
    error(oss.str());
  } else if (static_cast<int>(attr.levels.size()) != rubric.max_level) {
    error("expected exactly " + std::to_string(rubric.max_level) + " level statements, got " +
          std::to_string(attr.levels.size()));
  }
  for (const auto& stmt : attr.levels) {
    if (stmt.text.empty()) {
      error("level " + std::to_string(stmt.level) + " statement text is empty");
    }
  }

  if (static_cast<int>(attr.check_bindings.size()) != rubric.max_level) {
    error("expected exactly one check binding per level, got " +
          std::to_string(attr.check_bindings.size()) + " of " +
          std::to_string(rubric.max_level));
  } else if (known_check) {
    for (int level = 1; level <= rubric.max_level; ++level) {
      const std::string& binding = attr.check_bindings[static_cast<size_t>(level - 1)];
      if (binding != kManualBinding && !known_check(binding)) {
        error("level " + std::to_string(level) + " binds unknown check '" + binding + "'");
      }
    }
  }
}

}  // namespace

ValidationReport validate_rubric(const Rubric& rubric) {
  return validate_rubric(rubric, nullptr);
}

ValidationReport validate_rubric(const Rubric& rubric,
                                 const std::function<bool(const std::string&)>& known_check) {
  ValidationReport report;
  auto error = [&](std::string path, std::string message) {
    report.findings.push_back({Severity::Error, std::move(path), std::move(message)});
  };

  if (rubric.id.empty()) error("id", "rubric id is empty");
  if (rubric.max_level < 1) {
    error("max_level", "max_level must be >= 1, got " + std::to_string(rubric.max_level));
  }
  if (rubric.dimensions.empty()) error("dimensions", "rubric has no dimensions");

  std::set<std::string> dimension_ids;
  std::set<std::string> attribute_ids;
  for (const auto& dim : rubric.dimensions) {
    const std::string dim_path = "dimensions[" + dim.id + "]";
    if (dim.id.empty()) error(dim_path, "dimension id is empty");
    if (!dimension_ids.insert(dim.id).second) {
      error(dim_path, "duplicate dimension id '" + dim.id + "'");
    }
    if (dim.attributes.empty()) {
      error(dim_path, "dimension has no attributes");
    }
    for (const auto& attr : dim.attributes) {
      if (!attribute_ids.insert(attr.id).second) {
        error(dim_path + ".attributes[" + attr.id + "]",
              "duplicate attribute id '" + attr.id + "'");
      }
      check_attribute(rubric, dim, attr, known_check, report);
    }
  }
  return report;
}

const Rubric& builtin_rubric(std::string_view id) {
  if (id == "pocme") return builtin_pocme();
  if (id == "fairst") return builtin_fairst();
  throw InputError("rubric-not-found: '" + std::string(id) +
                   "' (built-ins: pocme, fairst)");
}

bool is_builtin_rubric(std::string_view id) { return id == "pocme" || id == "fairst"; }

std::vector<std::string> builtin_rubric_ids() { return {"pocme", "fairst"}; }

}  // namespace qind
