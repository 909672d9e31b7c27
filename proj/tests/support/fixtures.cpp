#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace qind_test {

namespace fs = std::filesystem;

fs::path fixture_dir() { return fs::path(QIND_FIXTURE_DIR); }

TempDir::TempDir(const std::string& hint) {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("qind-test-" + hint + "-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("test: cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("test: cannot write " + path.string());
  out << content;
}

void copy_tree(const fs::path& from, const fs::path& to) {
  fs::create_directories(to);
  fs::copy(from, to, fs::copy_options::recursive | fs::copy_options::overwrite_existing);
}

fs::path materialize_golden_repo(const fs::path& into) {
  const fs::path repo = into / "golden-repo";
  copy_tree(fixture_dir() / "golden-repo", repo);
  fs::rename(repo / "_git", repo / ".git");
  return repo;
}

void seed_cache(const fs::path& cache_dir, const std::string& url, int status,
                const std::string& body) {
  nlohmann::json entry;
  entry["url"] = url;
  entry["status"] = status;
  entry["retrieved_at"] = "2026-01-01T00:00:00Z";
  entry["body"] = body;
  fs::create_directories(cache_dir);
  write_file(cache_dir / qind::Fetcher::cache_file_name(url), entry.dump(2) + "\n");
}

std::optional<qind::HttpResponse> PanicHttpClient::get(const std::string&) {
  ++calls;
  return std::nullopt;
}

void StubHttpClient::respond(const std::string& url, int status, std::string body) {
  responses_.push_back({url, {status, std::move(body)}});
}

std::optional<qind::HttpResponse> StubHttpClient::get(const std::string& url) {
  requests.push_back(url);
  for (const auto& [stub_url, response] : responses_) {
    if (stub_url == url) return response;
  }
  return std::nullopt;
}

std::vector<std::string> extract_attributes(const std::string& svg, const std::string& element,
                                            const std::string& attribute) {
  std::vector<std::string> values;
  const std::string open = "<" + element;
  size_t pos = 0;
  while ((pos = svg.find(open, pos)) != std::string::npos) {
    const size_t end = svg.find('>', pos);
    if (end == std::string::npos) break;
    const std::string tag = svg.substr(pos, end - pos);
    const std::string needle = attribute + "=\"";
    const size_t attr_pos = tag.find(needle);
    if (attr_pos != std::string::npos) {
      const size_t value_start = attr_pos + needle.size();
      const size_t value_end = tag.find('"', value_start);
      if (value_end != std::string::npos) {
        values.push_back(tag.substr(value_start, value_end - value_start));
      }
    }
    pos = end;
  }
  return values;
}

std::vector<Point> parse_points(const std::string& points_attribute) {
  std::vector<Point> points;
  std::istringstream in(points_attribute);
  std::string pair;
  while (in >> pair) {
    const size_t comma = pair.find(',');
    if (comma == std::string::npos) continue;
    points.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
  }
  return points;
}

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace qind_test
