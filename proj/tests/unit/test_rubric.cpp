#include <doctest.h>

#include <set>

#include "qind/checks.hpp"
#include "qind/errors.hpp"
#include "qind/rubric.hpp"
#include "qind/rubric_io.hpp"

using namespace qind;

TEST_CASE("builtin data rubric shape: 5 dimensions, 9 attributes, levels to 4") {
  const Rubric& r = builtin_rubric("pocme");
  CHECK(r.id == "pocme");
  CHECK(r.max_level == 4);
  REQUIRE(r.dimensions.size() == 5);
  CHECK(r.attribute_count() == 9);

  std::vector<std::string> titles;
  for (const auto& d : r.dimensions) titles.push_back(d.title);
  CHECK(titles == std::vector<std::string>{"Publishing", "Openness", "Curation", "Metadata",
                                           "External View"});
  for (const auto& d : r.dimensions) {
    for (const auto& a : d.attributes) {
      CHECK(a.levels.size() == 4);
      CHECK(a.check_bindings.size() == 4);
    }
  }
}

TEST_CASE("builtin software rubric shape: 6 dimensions, 19 attributes, levels to 5") {
  const Rubric& r = builtin_rubric("fairst");
  CHECK(r.id == "fairst");
  CHECK(r.max_level == 5);
  REQUIRE(r.dimensions.size() == 6);
  CHECK(r.attribute_count() == 19);

  std::vector<std::string> titles;
  for (const auto& d : r.dimensions) titles.push_back(d.title);
  CHECK(titles == std::vector<std::string>{"Findable", "Accessible", "Interoperable",
                                           "Reusable", "Scientific basis", "Technical basis"});

  const Dimension* technical = r.find_dimension("technical-basis");
  REQUIRE(technical);
  std::vector<std::string> attrs;
  for (const auto& a : technical->attributes) attrs.push_back(a.title);
  CHECK(attrs == std::vector<std::string>{"Project Management", "Repository Structure",
                                          "Code Structure", "Reproducibility (Code)",
                                          "Code change process", "Security"});
}

TEST_CASE("builtin rubrics validate cleanly and bind only known checks") {
  const auto& registry = CheckRegistry::builtin();
  for (const auto& id : builtin_rubric_ids()) {
    const Rubric& r = builtin_rubric(id);
    ValidationReport report = validate_rubric(
        r, [&](const std::string& check) { return registry.contains(check); });
    CAPTURE(id);
    for (const auto& f : report.findings) {
      CAPTURE(f.path);
      CAPTURE(f.message);
    }
    CHECK(report.ok());
  }
}

TEST_CASE("unknown builtin id reports rubric-not-found") {
  CHECK_THROWS_WITH_AS(builtin_rubric("cobit"),
                       "rubric-not-found: 'cobit' (built-ins: pocme, fairst)", InputError);
}

TEST_CASE("level text spot checks") {
  const Rubric& pocme = builtin_rubric("pocme");
  const Attribute* identifier = pocme.find_attribute("published-with-identifier");
  REQUIRE(identifier);
  CHECK(identifier->levels[3].text ==
        "Dataset is identifiable via globally unique, formalized, standardized, persistent "
        "identifier supported by general metadata (e.g. DOI).");

  const Rubric& fairst = builtin_rubric("fairst");
  const Attribute* versioning = fairst.find_attribute("versioning");
  REQUIRE(versioning);
  CHECK(versioning->levels[1].text == "The software uses structured (e.g. semantic) versioning.");
}

TEST_CASE("serialization round-trips both builtins") {
  for (const auto& id : builtin_rubric_ids()) {
    const Rubric& original = builtin_rubric(id);
    const Rubric reloaded = load_rubric(serialize_rubric(original));
    CHECK(reloaded == original);
  }
}

TEST_CASE("validation findings carry paths") {
  Rubric r = builtin_rubric("pocme");

  SUBCASE("duplicate attribute ids") {
    r.dimensions[1].attributes[0].id = r.dimensions[0].attributes[0].id;
    ValidationReport report = validate_rubric(r);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& f : report.findings) {
      if (f.message.find("duplicate attribute id") != std::string::npos) {
        found = true;
        CHECK(f.path.find(r.dimensions[0].attributes[0].id) != std::string::npos);
      }
    }
    CHECK(found);
  }
  SUBCASE("empty dimension") {
    r.dimensions[2].attributes.clear();
    ValidationReport report = validate_rubric(r);
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0].message == "dimension has no attributes");
    CHECK(report.findings[0].path == "dimensions[curation]");
  }
  SUBCASE("nonpositive weight") {
    r.dimensions[0].attributes[0].default_weight = Rational{0};
    CHECK(validate_rubric(r).has_errors());
  }
}

TEST_CASE("rubric files with missing levels are rejected with the gap listed") {
  Rubric r = builtin_rubric("fairst");
  Attribute& attr = r.dimensions[0].attributes[0];
  attr.levels.resize(3);  // drop levels 4 and 5
  const std::string text = serialize_rubric(r);
  CHECK_THROWS_WITH_AS(load_rubric(text), doctest::Contains("missing levels 4,5"),
                       InputError);
}

TEST_CASE("rubric files with zero weights are rejected") {
  Rubric r = builtin_rubric("pocme");
  r.dimensions[0].attributes[0].default_weight = Rational{1};
  std::string text = serialize_rubric(r);
  const std::string needle = "\"default_weight\": \"1\"";
  text.replace(text.find(needle), needle.size(), "\"default_weight\": \"0\"");
  CHECK_THROWS_WITH_AS(load_rubric(text), doctest::Contains("strictly positive"), InputError);
}

TEST_CASE("unknown keys in rubric files are rejected") {
  std::string text = serialize_rubric(builtin_rubric("pocme"));
  text.insert(text.find("\"id\""), "\"vendor_extension\": true, ");
  CHECK_THROWS_WITH_AS(load_rubric(text), doctest::Contains("unknown key"), InputError);
}

TEST_CASE("omitted checks default every level to manual") {
  const std::string text = R"({
    "id": "mini", "title": "Mini", "max_level": 2,
    "dimensions": [{
      "id": "d", "title": "D", "description": "",
      "attributes": [{
        "id": "a", "title": "A", "default_weight": 1,
        "levels": [{"level": 1, "text": "one"}, {"level": 2, "text": "two"}]
      }]
    }]
  })";
  const Rubric r = load_rubric(text);
  CHECK(r.find_attribute("a")->manual_at(1));
  CHECK(r.find_attribute("a")->manual_at(2));
}

TEST_CASE("attribute ids are unique across all dimensions of the builtins") {
  for (const auto& id : builtin_rubric_ids()) {
    const Rubric& r = builtin_rubric(id);
    std::set<std::string> seen;
    for (const auto& d : r.dimensions) {
      for (const auto& a : d.attributes) {
        CHECK(seen.insert(a.id).second);
      }
    }
  }
}
