#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>

#include "qind/collectors.hpp"

namespace qind {

namespace {

constexpr const char* kCollector = "registry";
using nlohmann::json;

std::string encode_query(const std::string& text) {
  static constexpr char hex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xf]);
    }
  }
  return out;
}

std::string strip_slash(std::string url) {
  while (!url.empty() && url.back() == '/') url.pop_back();
  return url;
}

}  // namespace

EvidenceSet lookup_meta_repository(const std::string& locator, Fetcher& fetcher,
                                   const RegistryConfig& config) {
  EvidenceSet evidence;
  evidence.target = locator;
  evidence.add("repository_locator_present", true, {kCollector, locator, ""});

  const std::string url =
      config.registry_base + "/repositories?query=" + encode_query(locator);
  FetchResult res = fetcher.get(url);
  if (!res.ok) {
    evidence.note_failure(kCollector, res.error.empty() ? "lookup failed" : res.error);
    return evidence;
  }
  auto add = [&](const std::string& id, nlohmann::json value) {
    evidence.add(id, std::move(value), {kCollector, url, res.retrieved_at});
  };
  if (res.status != 200) {
    if (res.status == 404) {
      add("listed_in_meta_repository", false);
      add("quality_icon_count", 0);
      return evidence;
    }
    evidence.note_failure(kCollector,
                          "unexpected status " + std::to_string(res.status) + " from " + url);
    return evidence;
  }

  json doc;
  try {
    doc = json::parse(res.body);
  } catch (const json::parse_error& e) {
    evidence.note_failure(kCollector, std::string("bad registry response: ") + e.what());
    return evidence;
  }

  const std::string wanted = strip_slash(locator);
  bool listed = false;
  int icons = 0;
  std::string registry_id = "re3data";
  if (doc.is_object() && doc.contains("repositories") && doc["repositories"].is_array()) {
    for (const auto& entry : doc["repositories"]) {
      if (!entry.is_object()) continue;
      const std::string entry_url = strip_slash(entry.value("url", ""));
      if (entry_url.empty()) continue;
      if (entry_url == wanted || wanted.rfind(entry_url + "/", 0) == 0) {
        listed = true;
        icons = entry.value("icons", 0);
        registry_id = entry.value("registry", registry_id);
        break;
      }
    }
  }

  const bool eligible = std::find(config.eligible.begin(), config.eligible.end(),
                                  registry_id) != config.eligible.end();
  add("listed_in_meta_repository", listed && eligible);
  add("quality_icon_count", listed && eligible ? icons : 0);
  return evidence;
}

}  // namespace qind
