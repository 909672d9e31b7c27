#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>

#include "qind/collectors.hpp"
#include "qind/errors.hpp"
#include "qind/licenses.hpp"

namespace qind {

namespace {

namespace fs = std::filesystem;

constexpr const char* kCollector = "local-scan";
constexpr size_t kHeadBytes = 64 * 1024;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string read_head(const fs::path& path, size_t max_bytes = kHeadBytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::string buf(max_bytes, '\0');
  in.read(buf.data(), static_cast<std::streamsize>(max_bytes));
  buf.resize(static_cast<size_t>(in.gcount()));
  return buf;
}

bool name_starts_with(const std::string& lower_name, std::initializer_list<const char*> stems) {
  for (const char* stem : stems) {
    if (lower_name.rfind(stem, 0) == 0) return true;
  }
  return false;
}

bool name_in(const std::string& lower_name, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (lower_name == n) return true;
  }
  return false;
}

bool is_semver_tag(const std::string& tag) {
  static const std::regex re(
      R"(^v?(0|[1-9]\d*)\.(0|[1-9]\d*)\.(0|[1-9]\d*)(-[0-9A-Za-z.-]+)?(\+[0-9A-Za-z.-]+)?$)");
  return std::regex_match(tag, re);
}

std::vector<std::string> git_tags(const fs::path& git_dir) {
  std::set<std::string> tags;
  const fs::path ref_dir = git_dir / "refs" / "tags";
  std::error_code ec;
  if (fs::is_directory(ref_dir, ec)) {
    for (const auto& entry : fs::directory_iterator(ref_dir, ec)) {
      if (entry.is_regular_file()) tags.insert(entry.path().filename().string());
    }
  }
  std::ifstream packed(git_dir / "packed-refs");
  std::string line;
  constexpr std::string_view kTagRef = " refs/tags/";
  while (std::getline(packed, line)) {
    if (line.empty() || line[0] == '#' || line[0] == '^') continue;
    auto pos = line.find(kTagRef);
    if (pos == std::string::npos) continue;
    std::string name = line.substr(pos + kTagRef.size());
    if (!name.empty()) tags.insert(name);
  }
  return {tags.begin(), tags.end()};
}

std::optional<std::string> git_remote_url(const fs::path& git_dir) {
  std::ifstream config(git_dir / "config");
  if (!config) return std::nullopt;
  std::string line;
  bool in_remote = false;
  std::optional<std::string> first_url;
  std::optional<std::string> origin_url;
  bool in_origin = false;
  while (std::getline(config, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.rfind("[remote", 0) == 0) {
      in_remote = true;
      in_origin = trimmed.find("\"origin\"") != std::string::npos;
      continue;
    }
    if (!trimmed.empty() && trimmed.front() == '[') {
      in_remote = false;
      in_origin = false;
      continue;
    }
    if (in_remote && trimmed.rfind("url", 0) == 0) {
      auto eq = trimmed.find('=');
      if (eq == std::string::npos) continue;
      std::string url = trimmed.substr(eq + 1);
      url.erase(0, url.find_first_not_of(" \t"));
      url.erase(url.find_last_not_of(" \t\r") + 1);
      if (url.empty()) continue;
      if (in_origin && !origin_url) origin_url = url;
      if (!first_url) first_url = url;
    }
  }
  return origin_url ? origin_url : first_url;
}

bool is_platform_host(const std::string& url) {
  const std::string u = lower(url);
  for (const char* marker : {"github.", "gitlab.", "bitbucket.", "codeberg.", "sr.ht",
                             "sourceforge.", "gitea."}) {
    if (u.find(marker) != std::string::npos) return true;
  }
  return false;
}

struct ScanState {
  std::vector<std::string> top_files;   // lowercase names of root entries (files)
  std::vector<std::string> top_dirs;    // lowercase names of root entries (dirs)
  std::vector<fs::path> ci_files;
  bool any_file = false;
  bool any_structured_dir = false;
  fs::path readme_path;
  fs::path license_dir;                 // LICENSES/ when present
  std::vector<fs::path> license_files;  // LICENSE*, COPYING* at the root
  bool versioning_doc = false;
};

ScanState walk(const fs::path& root) {
  ScanState state;
  std::error_code ec;

  std::vector<fs::directory_entry> entries;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    entries.push_back(entry);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.path() < b.path(); });

  for (const auto& entry : entries) {
    const std::string name = entry.path().filename().string();
    const std::string lname = lower(name);
    if (name == ".git" || name == ".hg" || name == ".svn") continue;

    if (entry.is_directory(ec)) {
      state.top_dirs.push_back(lname);
      if (lname == "licenses") state.license_dir = entry.path();
      // A populated, visible subdirectory counts as structure.
      if (!name.empty() && name[0] != '.') {
        for (const auto& sub : fs::recursive_directory_iterator(entry.path(), ec)) {
          if (sub.is_regular_file(ec)) {
            state.any_structured_dir = true;
            state.any_file = true;
            break;
          }
        }
      }
      if (lname == ".github") {
        const fs::path workflows = entry.path() / "workflows";
        if (fs::is_directory(workflows, ec)) {
          std::vector<fs::path> wf;
          for (const auto& w : fs::directory_iterator(workflows, ec)) {
            const std::string ext = lower(w.path().extension().string());
            if (w.is_regular_file(ec) && (ext == ".yml" || ext == ".yaml")) {
              wf.push_back(w.path());
            }
          }
          std::sort(wf.begin(), wf.end());
          state.ci_files.insert(state.ci_files.end(), wf.begin(), wf.end());
        }
      }
      if (lname == ".circleci" && fs::is_regular_file(entry.path() / "config.yml", ec)) {
        state.ci_files.push_back(entry.path() / "config.yml");
      }
      if (lname == "docs") {
        for (const auto& doc : fs::directory_iterator(entry.path(), ec)) {
          if (doc.is_regular_file(ec) &&
              name_starts_with(lower(doc.path().filename().string()), {"versioning"})) {
            state.versioning_doc = true;
          }
        }
      }
    } else if (entry.is_regular_file(ec)) {
      state.any_file = true;
      state.top_files.push_back(lname);
      if (state.readme_path.empty() && name_starts_with(lname, {"readme"})) {
        state.readme_path = entry.path();
      }
      if (name_starts_with(lname, {"license", "licence", "copying"})) {
        state.license_files.push_back(entry.path());
      }
      if (name_starts_with(lname, {"versioning"})) state.versioning_doc = true;
      if (name_in(lname, {".gitlab-ci.yml", ".travis.yml", "azure-pipelines.yml",
                          "appveyor.yml", "jenkinsfile", ".drone.yml", ".woodpecker.yml"})) {
        state.ci_files.push_back(entry.path());
      }
    }
  }
  return state;
}

}  // namespace

EvidenceSet scan_local_repository(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    throw IoError("cannot scan '" + path.string() + "': no such path");
  }
  if (!fs::is_directory(path, ec)) {
    throw IoError("cannot scan '" + path.string() + "': not a directory");
  }

  EvidenceSet evidence;
  evidence.target = path.string();
  auto add = [&](const std::string& id, nlohmann::json value, std::string source) {
    evidence.add(id, std::move(value), {kCollector, std::move(source), ""});
  };

  const ScanState state = walk(path);

  auto has_top = [&](auto predicate) -> std::optional<std::string> {
    for (const auto& name : state.top_files) {
      if (predicate(name)) return name;
    }
    return std::nullopt;
  };

  // Version control.
  const fs::path git_dir = path / ".git";
  const bool git = fs::exists(git_dir, ec);
  const bool vcs = git || fs::exists(path / ".hg", ec) || fs::exists(path / ".svn", ec);
  add("vcs_present", vcs, vcs ? (git ? ".git" : "vcs dir") : ".");

  std::vector<std::string> tags;
  if (git && fs::is_directory(git_dir, ec)) tags = git_tags(git_dir);
  add("tag_list", tags, ".git/refs/tags");
  double semver_fraction = 0.0;
  if (!tags.empty()) {
    const auto matching = std::count_if(tags.begin(), tags.end(), is_semver_tag);
    semver_fraction = static_cast<double>(matching) / static_cast<double>(tags.size());
  }
  add("semver_tags_fraction", semver_fraction, ".git/refs/tags");

  std::optional<std::string> remote;
  if (git && fs::is_directory(git_dir, ec)) remote = git_remote_url(git_dir);
  add("vcs_remote_present", remote.has_value(), ".git/config");
  if (remote) add("vcs_remote_url", *remote, ".git/config");
  add("project_platform_remote", remote && is_platform_host(*remote), ".git/config");

  // Documentation.
  const bool readme = !state.readme_path.empty();
  add("readme_present", readme, readme ? state.readme_path.filename().string() : ".");
  auto contributing = has_top([](const std::string& n) {
    return name_starts_with(n, {"contributing", "contributors"});
  });
  add("contributing_present", contributing.has_value(), contributing.value_or("."));
  auto changelog = has_top([](const std::string& n) {
    return name_starts_with(n, {"changelog"}) || n == "news" || n == "news.md";
  });
  add("changelog_present", changelog.has_value(), changelog.value_or("."));
  add("versioning_doc_present", state.versioning_doc, state.versioning_doc ? "versioning doc" : ".");

  // Citation metadata: most structured form wins.
  std::string citation_kind = "none";
  std::string citation_src = ".";
  if (auto c = has_top([](const std::string& n) { return n == "codemeta.json"; })) {
    citation_kind = "codemeta";
    citation_src = *c;
  } else if (auto c2 = has_top([](const std::string& n) { return n == "citation.cff"; })) {
    citation_kind = "citation-file";
    citation_src = *c2;
  } else if (auto c3 = has_top([](const std::string& n) {
               return name_starts_with(n, {"citation"});
             })) {
    citation_kind = "unstructured";
    citation_src = *c3;
  }
  add("citation_metadata_kind", citation_kind, citation_src);

  // Install and build signals.
  bool install_doc = has_top([](const std::string& n) {
                       return name_starts_with(n, {"install"}) && !name_starts_with(n, {"install.sh"});
                     }).has_value();
  if (!install_doc && readme) {
    const std::string head = lower(read_head(state.readme_path));
    install_doc = head.find("install") != std::string::npos;
  }
  add("install_instructions_present", install_doc, install_doc ? "install docs" : ".");

  auto install_script = has_top([](const std::string& n) {
    return name_in(n, {"install.sh", "install", "setup.py", "configure", "bootstrap.sh"}) ||
           (name_starts_with(n, {"install"}) && n.size() > 3 &&
            n.rfind(".sh") == n.size() - 3);
  });
  add("install_script_present", install_script.has_value(), install_script.value_or("."));

  auto manifest = has_top([](const std::string& n) {
    return name_in(n, {"pyproject.toml", "setup.py", "setup.cfg", "package.json",
                       "cargo.toml", "pom.xml", "build.gradle", "build.gradle.kts",
                       "environment.yml", "environment.yaml", "go.mod", "vcpkg.json",
                       "conanfile.txt", "conanfile.py", "gemfile", "description"}) ||
           (name_starts_with(n, {"requirements"}) && n.rfind(".txt") == n.size() - 4);
  });
  add("package_manifest_present", manifest.has_value(), manifest.value_or("."));

  auto build_config = has_top([](const std::string& n) {
    return name_in(n, {"makefile", "cmakelists.txt", "configure", "meson.build",
                       "sconstruct", "justfile", "build.bazel", "workspace", "rakefile"});
  });
  add("build_config_present", build_config.has_value(), build_config.value_or("."));

  auto container = has_top([](const std::string& n) {
    return name_starts_with(n, {"dockerfile", "containerfile"});
  });
  add("container_recipe_present", container.has_value(), container.value_or("."));

  auto lockfile = has_top([](const std::string& n) {
    return name_in(n, {"poetry.lock", "uv.lock", "pipfile.lock", "package-lock.json",
                       "yarn.lock", "pnpm-lock.yaml", "cargo.lock", "go.sum",
                       "gemfile.lock", "composer.lock", "conda-lock.yml", "flake.lock"});
  });
  add("lockfile_present", lockfile.has_value(), lockfile.value_or("."));

  auto coverage = has_top([](const std::string& n) {
    return name_in(n, {"codecov.yml", ".codecov.yml", "codecov.yaml", ".codecov.yaml",
                       ".coveragerc"});
  });
  add("coverage_config_present", coverage.has_value(), coverage.value_or("."));

  auto lint = has_top([](const std::string& n) {
    return name_in(n, {".clang-format", ".clang-tidy", ".editorconfig", ".flake8",
                       ".pylintrc", "ruff.toml", ".ruff.toml", "rustfmt.toml",
                       ".rustfmt.toml", ".pre-commit-config.yaml", ".prettierrc"}) ||
           name_starts_with(n, {".eslintrc"});
  });
  add("lint_config_present", lint.has_value(), lint.value_or("."));

  // CI plus a REUSE job inside it.
  add("ci_config_present", !state.ci_files.empty(),
      state.ci_files.empty() ? "." : state.ci_files.front().filename().string());
  bool reuse_job = false;
  for (const auto& ci : state.ci_files) {
    if (lower(read_head(ci)).find("reuse") != std::string::npos) {
      reuse_job = true;
      break;
    }
  }
  add("reuse_ci_job_present", reuse_job, reuse_job ? "ci config" : ".");

  // Tests and layout.
  bool test_dir = false;
  for (const auto& dir : state.top_dirs) {
    if (name_in(dir, {"test", "tests", "spec", "testing"})) {
      test_dir = true;
      break;
    }
  }
  add("test_dir_present", test_dir, test_dir ? "tests/" : ".");
  add("source_files_present", state.any_file, ".");
  add("repo_has_directory_structure", state.any_structured_dir, ".");

  // License files at the root (ids resolved by content sniffing).
  std::vector<std::string> license_ids;
  for (const auto& file : state.license_files) {
    if (auto id = detect_license_id(read_head(file))) {
      if (std::find(license_ids.begin(), license_ids.end(), *id) == license_ids.end()) {
        license_ids.push_back(*id);
      }
    }
  }
  std::error_code dir_ec;
  if (!state.license_dir.empty()) {
    for (const auto& entry : fs::directory_iterator(state.license_dir, dir_ec)) {
      if (!entry.is_regular_file(dir_ec)) continue;
      std::string id = entry.path().stem().string();
      if (std::find(license_ids.begin(), license_ids.end(), id) == license_ids.end()) {
        license_ids.push_back(id);
      }
    }
  }
  std::sort(license_ids.begin(), license_ids.end());
  const bool any_license_file = !state.license_files.empty() || !state.license_dir.empty();
  add("license_file_present", any_license_file, any_license_file ? "license files" : ".");
  add("license_files", license_ids, "license files");

  // REUSE facts share the evidence set; ids are disjoint by construction.
  EvidenceSet reuse = check_reuse_compliance(path);
  return EvidenceSet::merged({std::move(evidence), std::move(reuse)});
}

}  // namespace qind
