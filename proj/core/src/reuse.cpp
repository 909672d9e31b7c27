#include <algorithm>
#include <fstream>
#include <regex>
#include <set>

#include "qind/collectors.hpp"
#include "qind/errors.hpp"
#include "qind/licenses.hpp"

namespace qind {

namespace {

namespace fs = std::filesystem;

constexpr const char* kCollector = "reuse";
constexpr size_t kTagScanBytes = 8 * 1024;
constexpr size_t kMaxOffenders = 20;

std::string read_head(const fs::path& path, size_t max_bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::string buf(max_bytes, '\0');
  in.read(buf.data(), static_cast<std::streamsize>(max_bytes));
  buf.resize(static_cast<size_t>(in.gcount()));
  return buf;
}

bool looks_binary(const std::string& head) {
  return head.find('\0') != std::string::npos;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Files excused from per-file tagging: license texts, VCS internals, and
// the dep5 declaration itself.
bool is_exempt(const std::string& rel_lower) {
  if (rel_lower.rfind("licenses/", 0) == 0) return true;
  if (rel_lower.rfind(".reuse/", 0) == 0) return true;
  if (rel_lower.rfind(".git", 0) == 0) return true;
  const std::string name = rel_lower.substr(rel_lower.find_last_of('/') + 1);
  return name.rfind("license", 0) == 0 || name.rfind("licence", 0) == 0 ||
         name.rfind("copying", 0) == 0;
}

// dep5 "Files:" globs; '*' spans path separators, '?' matches one char.
std::regex glob_to_regex(const std::string& glob) {
  std::string pattern;
  for (char c : glob) {
    switch (c) {
      case '*': pattern += ".*"; break;
      case '?': pattern += '.'; break;
      case '.': case '+': case '(': case ')': case '[': case ']':
      case '{': case '}': case '^': case '$': case '|': case '\\':
        pattern += '\\';
        pattern += c;
        break;
      default: pattern += c;
    }
  }
  return std::regex(pattern);
}

std::vector<std::regex> load_dep5_globs(const fs::path& root) {
  std::vector<std::regex> globs;
  std::ifstream in(root / ".reuse" / "dep5");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("Files:", 0) != 0) continue;
    std::string rest = line.substr(6);
    size_t pos = 0;
    while (pos < rest.size()) {
      while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
      size_t start = pos;
      while (pos < rest.size() && !std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
      if (pos > start) globs.push_back(glob_to_regex(rest.substr(start, pos - start)));
    }
  }
  return globs;
}

}  // namespace

EvidenceSet check_reuse_compliance(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec) || !fs::is_directory(path, ec)) {
    throw IoError("cannot run license check on '" + path.string() + "'");
  }

  EvidenceSet evidence;
  evidence.target = path.string();

  const std::vector<std::regex> dep5 = load_dep5_globs(path);
  std::set<std::string> tagged_ids;
  std::set<std::string> licensed_ids;  // ids with a file under LICENSES/
  std::vector<std::string> offenders;

  const fs::path licenses_dir = path / "LICENSES";
  if (fs::is_directory(licenses_dir, ec)) {
    for (const auto& entry : fs::directory_iterator(licenses_dir, ec)) {
      if (entry.is_regular_file(ec)) licensed_ids.insert(entry.path().stem().string());
    }
  }

  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(
           path, fs::directory_options::skip_permission_denied, ec);
       it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    const std::string name = it->path().filename().string();
    if (it->is_directory(ec) && (name == ".git" || name == ".hg" || name == ".svn")) {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file(ec)) files.push_back(it->path());
  }
  std::sort(files.begin(), files.end());

  for (const auto& file : files) {
    const std::string rel = fs::relative(file, path, ec).generic_string();
    const std::string rel_lower = lower(rel);
    const std::string head = read_head(file, kTagScanBytes);

    if (auto tag = find_spdx_tag(head)) {
      for (auto& id : spdx_expression_ids(*tag)) tagged_ids.insert(std::move(id));
      continue;
    }
    if (is_exempt(rel_lower) || looks_binary(head)) continue;
    if (std::any_of(dep5.begin(), dep5.end(),
                    [&](const std::regex& re) { return std::regex_match(rel, re); })) {
      continue;
    }
    if (offenders.size() < kMaxOffenders) offenders.push_back(rel);
  }

  // Referenced licenses must exist under LICENSES/.
  std::vector<std::string> missing_license_files;
  for (const auto& id : tagged_ids) {
    if (!licensed_ids.count(id)) missing_license_files.push_back("LICENSES/" + id);
  }

  const bool compliant = offenders.empty() && missing_license_files.empty();

  std::set<std::string> all_ids = tagged_ids;
  all_ids.insert(licensed_ids.begin(), licensed_ids.end());
  // Top-level license text without tags still identifies the project license.
  for (const char* candidate : {"LICENSE", "LICENSE.md", "LICENSE.txt", "COPYING"}) {
    const fs::path p = path / candidate;
    if (fs::is_regular_file(p, ec)) {
      if (auto id = detect_license_id(read_head(p, kTagScanBytes))) all_ids.insert(*id);
    }
  }

  const bool osi = std::any_of(all_ids.begin(), all_ids.end(),
                               [](const std::string& id) { return is_osi_approved(id); });

  auto add = [&](const std::string& id, nlohmann::json value) {
    evidence.add(id, std::move(value), {kCollector, ".", ""});
  };
  add("reuse_compliant", compliant);
  add("spdx_ids", std::vector<std::string>(all_ids.begin(), all_ids.end()));
  add("osi_approved", osi);
  if (!offenders.empty()) add("reuse_offending_paths", offenders);
  if (!missing_license_files.empty()) add("reuse_missing_licenses", missing_license_files);
  return evidence;
}

}  // namespace qind
