#include "qind/rubric_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qind/errors.hpp"

namespace qind {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw InputError("rubric: unknown key '" + it.key() + "' at " + path);
    }
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError("rubric: missing key '" + std::string(key) + "' at " + path);
  }
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) {
    throw InputError("rubric: '" + std::string(key) + "' must be a string at " + path);
  }
  return v.get<std::string>();
}

Rational parse_weight(const json& v, const std::string& path) {
  std::optional<Rational> w;
  if (v.is_number_integer()) {
    w = Rational{v.get<std::int64_t>()};
  } else if (v.is_number()) {
    // Round-trip through the shortest decimal text so "0.5" stays 1/2 exactly.
    w = Rational::parse(v.dump());
  } else if (v.is_string()) {
    w = Rational::parse(v.get<std::string>());
  }
  if (!w) {
    throw InputError("rubric: default_weight is not a rational at " + path);
  }
  return *w;
}

Attribute parse_attribute(const json& node, int max_level, const std::string& path) {
  if (!node.is_object()) throw InputError("rubric: attribute must be an object at " + path);
  reject_unknown_keys(node, {"id", "title", "default_weight", "levels", "checks"}, path);

  Attribute attr;
  attr.id = require_string(node, "id", path);
  attr.title = require_string(node, "title", path);
  attr.default_weight = parse_weight(require(node, "default_weight", path), path);

  const json& levels = require(node, "levels", path);
  if (!levels.is_array()) throw InputError("rubric: 'levels' must be an array at " + path);
  for (size_t i = 0; i < levels.size(); ++i) {
    const std::string lpath = path + ".levels[" + std::to_string(i) + "]";
    const json& lv = levels[i];
    if (!lv.is_object()) throw InputError("rubric: level must be an object at " + lpath);
    reject_unknown_keys(lv, {"level", "text"}, lpath);
    LevelStatement stmt;
    const json& ln = require(lv, "level", lpath);
    if (!ln.is_number_integer()) {
      throw InputError("rubric: 'level' must be an integer at " + lpath);
    }
    stmt.level = ln.get<int>();
    stmt.text = require_string(lv, "text", lpath);
    attr.levels.push_back(std::move(stmt));
  }

  attr.check_bindings.assign(static_cast<size_t>(std::max(0, max_level)),
                             std::string(kManualBinding));
  if (auto it = node.find("checks"); it != node.end()) {
    if (!it->is_array()) throw InputError("rubric: 'checks' must be an array at " + path);
    std::vector<bool> seen(attr.check_bindings.size(), false);
    for (size_t i = 0; i < it->size(); ++i) {
      const std::string cpath = path + ".checks[" + std::to_string(i) + "]";
      const json& cb = (*it)[i];
      if (!cb.is_object()) throw InputError("rubric: check must be an object at " + cpath);
      reject_unknown_keys(cb, {"level", "check"}, cpath);
      const json& ln = require(cb, "level", cpath);
      if (!ln.is_number_integer()) {
        throw InputError("rubric: 'level' must be an integer at " + cpath);
      }
      int level = ln.get<int>();
      if (level < 1 || level > max_level) {
        throw InputError("rubric: check level " + std::to_string(level) +
                         " outside 1.." + std::to_string(max_level) + " at " + cpath);
      }
      if (seen[static_cast<size_t>(level - 1)]) {
        throw InputError("rubric: duplicate check binding for level " +
                         std::to_string(level) + " at " + cpath);
      }
      seen[static_cast<size_t>(level - 1)] = true;
      attr.check_bindings[static_cast<size_t>(level - 1)] =
          require_string(cb, "check", cpath);
    }
  }
  return attr;
}

}  // namespace

Rubric rubric_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("rubric: document must be a JSON object");
  reject_unknown_keys(doc, {"id", "title", "max_level", "dimensions"}, "$");

  Rubric rubric;
  rubric.id = require_string(doc, "id", "$");
  rubric.title = require_string(doc, "title", "$");
  const json& ml = require(doc, "max_level", "$");
  if (!ml.is_number_integer()) throw InputError("rubric: 'max_level' must be an integer");
  rubric.max_level = ml.get<int>();

  const json& dims = require(doc, "dimensions", "$");
  if (!dims.is_array()) throw InputError("rubric: 'dimensions' must be an array");
  for (size_t i = 0; i < dims.size(); ++i) {
    const json& dn = dims[i];
    const std::string dpath = "dimensions[" + std::to_string(i) + "]";
    if (!dn.is_object()) throw InputError("rubric: dimension must be an object at " + dpath);
    reject_unknown_keys(dn, {"id", "title", "description", "attributes"}, dpath);
    Dimension dim;
    dim.id = require_string(dn, "id", dpath);
    dim.title = require_string(dn, "title", dpath);
    if (auto it = dn.find("description"); it != dn.end()) {
      if (!it->is_string()) {
        throw InputError("rubric: 'description' must be a string at " + dpath);
      }
      dim.description = it->get<std::string>();
    }
    const json& attrs = require(dn, "attributes", dpath);
    if (!attrs.is_array()) {
      throw InputError("rubric: 'attributes' must be an array at " + dpath);
    }
    for (size_t j = 0; j < attrs.size(); ++j) {
      dim.attributes.push_back(parse_attribute(
          attrs[j], rubric.max_level, dpath + ".attributes[" + std::to_string(j) + "]"));
    }
    rubric.dimensions.push_back(std::move(dim));
  }

  ValidationReport report = validate_rubric(rubric);
  if (report.has_errors()) {
    std::ostringstream oss;
    oss << "rubric validation failed:";
    for (const auto& f : report.findings) {
      if (f.severity == Severity::Error) oss << "\n  " << f.path << ": " << f.message;
    }
    throw InputError(oss.str());
  }
  return rubric;
}

Rubric load_rubric(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("rubric: ") + e.what());
  }
  return rubric_from_json(doc);
}

json rubric_to_json(const Rubric& rubric) {
  json doc;
  doc["id"] = rubric.id;
  doc["title"] = rubric.title;
  doc["max_level"] = rubric.max_level;
  doc["dimensions"] = json::array();
  for (const auto& dim : rubric.dimensions) {
    json dn;
    dn["id"] = dim.id;
    dn["title"] = dim.title;
    dn["description"] = dim.description;
    dn["attributes"] = json::array();
    for (const auto& attr : dim.attributes) {
      json an;
      an["id"] = attr.id;
      an["title"] = attr.title;
      an["default_weight"] = attr.default_weight.to_string();
      an["levels"] = json::array();
      for (const auto& stmt : attr.levels) {
        an["levels"].push_back({{"level", stmt.level}, {"text", stmt.text}});
      }
      an["checks"] = json::array();
      for (size_t i = 0; i < attr.check_bindings.size(); ++i) {
        an["checks"].push_back(
            {{"level", static_cast<int>(i + 1)}, {"check", attr.check_bindings[i]}});
      }
      dn["attributes"].push_back(std::move(an));
    }
    doc["dimensions"].push_back(std::move(dn));
  }
  return doc;
}

std::string serialize_rubric(const Rubric& rubric) { return rubric_to_json(rubric).dump(2) + "\n"; }

Rubric resolve_rubric(const std::string& ref) {
  if (is_builtin_rubric(ref)) return builtin_rubric(ref);
  std::filesystem::path path(ref);
  std::ifstream in(path);
  if (!in) {
    throw InputError("rubric-not-found: '" + ref +
                     "' is neither a built-in id nor a readable file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_rubric(buf.str());
}

}  // namespace qind
