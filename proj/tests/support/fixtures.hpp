#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qind/fetcher.hpp"

namespace qind_test {

std::filesystem::path fixture_dir();

// Unique directory under the system temp root; removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& hint);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);
void copy_tree(const std::filesystem::path& from, const std::filesystem::path& to);

// Copies the golden repository fixture into `into` and turns its bundled
// `_git` skeleton into a real `.git` directory.
std::filesystem::path materialize_golden_repo(const std::filesystem::path& into);

// Writes a cache entry exactly as the fetcher would have stored it, so
// collectors replay recorded responses without any network.
void seed_cache(const std::filesystem::path& cache_dir, const std::string& url, int status,
                const std::string& body);

// Transport stub that fails the test if anything tries to go online.
class PanicHttpClient : public qind::HttpClient {
 public:
  std::optional<qind::HttpResponse> get(const std::string& url) override;
  int calls = 0;
};

// Canned-response stub keyed by exact URL; unknown URLs are a transport
// failure.
class StubHttpClient : public qind::HttpClient {
 public:
  void respond(const std::string& url, int status, std::string body);
  std::optional<qind::HttpResponse> get(const std::string& url) override;
  std::vector<std::string> requests;

 private:
  std::vector<std::pair<std::string, qind::HttpResponse>> responses_;
};

// Minimal SVG probing for the geometry checks.
struct Point {
  double x = 0;
  double y = 0;
};
std::vector<std::string> extract_attributes(const std::string& svg, const std::string& element,
                                            const std::string& attribute);
std::vector<Point> parse_points(const std::string& points_attribute);
int count_occurrences(const std::string& haystack, const std::string& needle);

}  // namespace qind_test
