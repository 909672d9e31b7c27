#include "qind/licenses.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace qind {

namespace {

struct LicenseInfo {
  const char* id;
  bool osi;
  const char* marker;  // distinctive phrase in the license text, lowercase
};

// A pragmatic subset; unknown ids are kept verbatim but never count as OSI.
constexpr std::array<LicenseInfo, 24> kLicenses = {{
    {"Apache-2.0", true, "apache license"},
    {"MIT", true, "mit license"},
    {"BSD-3-Clause", true, "redistribution and use in source and binary forms"},
    {"BSD-2-Clause", true, "redistribution and use in source and binary forms"},
    {"GPL-3.0-only", true, "gnu general public license"},
    {"GPL-3.0-or-later", true, "gnu general public license"},
    {"GPL-2.0-only", true, "gnu general public license"},
    {"GPL-2.0-or-later", true, "gnu general public license"},
    {"LGPL-3.0-only", true, "gnu lesser general public license"},
    {"LGPL-3.0-or-later", true, "gnu lesser general public license"},
    {"LGPL-2.1-only", true, "gnu lesser general public license"},
    {"LGPL-2.1-or-later", true, "gnu lesser general public license"},
    {"AGPL-3.0-only", true, "gnu affero general public license"},
    {"AGPL-3.0-or-later", true, "gnu affero general public license"},
    {"MPL-2.0", true, "mozilla public license"},
    {"EPL-2.0", true, "eclipse public license"},
    {"EUPL-1.2", true, "european union public licence"},
    {"ISC", true, "isc license"},
    {"Artistic-2.0", true, "artistic license"},
    {"Zlib", true, "zlib license"},
    {"BSL-1.0", true, "boost software license"},
    {"Unlicense", true, "this is free and unencumbered software"},
    {"CC0-1.0", false, "cc0 1.0"},
    {"CC-BY-4.0", false, "creative commons attribution 4.0"},
}};

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' || c == '+';
}

}  // namespace

bool is_known_spdx_id(std::string_view id) {
  return std::any_of(kLicenses.begin(), kLicenses.end(),
                     [&](const LicenseInfo& info) { return id == info.id; });
}

bool is_osi_approved(std::string_view id) {
  return std::any_of(kLicenses.begin(), kLicenses.end(),
                     [&](const LicenseInfo& info) { return info.osi && id == info.id; });
}

std::optional<std::string> detect_license_id(std::string_view text) {
  const std::string head = lowercase(text.substr(0, std::min<size_t>(text.size(), 4096)));

  // Version hints disambiguate the GPL family before marker matching.
  auto contains = [&](const char* needle) { return head.find(needle) != std::string::npos; };
  if (contains("gnu affero general public license")) return "AGPL-3.0-only";
  if (contains("gnu lesser general public license")) {
    return contains("version 3") ? "LGPL-3.0-only" : "LGPL-2.1-only";
  }
  if (contains("gnu general public license")) {
    return contains("version 3") ? "GPL-3.0-only" : "GPL-2.0-only";
  }
  if (contains("redistribution and use in source and binary forms")) {
    return contains("neither the name") ? "BSD-3-Clause" : "BSD-2-Clause";
  }
  for (const auto& info : kLicenses) {
    if (contains(info.marker)) return std::string(info.id);
  }
  return std::nullopt;
}

std::vector<std::string> spdx_expression_ids(std::string_view expression) {
  std::vector<std::string> ids;
  size_t i = 0;
  while (i < expression.size()) {
    if (!is_id_char(expression[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < expression.size() && is_id_char(expression[i])) ++i;
    std::string token(expression.substr(start, i - start));
    if (token == "AND" || token == "OR" || token == "WITH") continue;
    if (std::find(ids.begin(), ids.end(), token) == ids.end()) {
      ids.push_back(std::move(token));
    }
  }
  return ids;
}

std::optional<std::string> find_spdx_tag(std::string_view file_head) {
  constexpr std::string_view kTag = "SPDX-License-Identifier:";
  auto pos = file_head.find(kTag);
  if (pos == std::string_view::npos) return std::nullopt;
  pos += kTag.size();
  auto end = file_head.find('\n', pos);
  std::string_view rest = file_head.substr(pos, end == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : end - pos);
  // Trim whitespace and trailing comment markers.
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
    rest.remove_prefix(1);
  }
  while (!rest.empty() &&
         (std::isspace(static_cast<unsigned char>(rest.back())) || rest.back() == '*' ||
          rest.back() == '/' || rest.back() == '-' || rest.back() == '#' ||
          rest.back() == '>' || rest.back() == '\r')) {
    rest.remove_suffix(1);
  }
  if (rest.empty()) return std::nullopt;
  return std::string(rest);
}

}  // namespace qind
