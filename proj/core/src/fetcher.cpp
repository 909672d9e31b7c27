#include "qind/fetcher.hpp"

#include <httplib.h>

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "qind/errors.hpp"

namespace qind {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string now_utc_iso() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

std::optional<std::time_t> parse_utc_iso(const std::string& text) {
  std::tm tm{};
  int y, mo, d, h, mi, s;
  if (std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%dZ", &y, &mo, &d, &h, &mi, &s) != 6) {
    return std::nullopt;
  }
  tm.tm_year = y - 1900;
  tm.tm_mon = mo - 1;
  tm.tm_mday = d;
  tm.tm_hour = h;
  tm.tm_min = mi;
  tm.tm_sec = s;
  return timegm(&tm);
}

// One shared politeness clock across all fetchers in the process.
std::mutex g_rate_mutex;
std::chrono::steady_clock::time_point g_last_request{};

void rate_limit(std::chrono::milliseconds min_interval) {
  std::lock_guard<std::mutex> lock(g_rate_mutex);
  const auto now = std::chrono::steady_clock::now();
  const auto next_allowed = g_last_request + min_interval;
  if (g_last_request.time_since_epoch().count() != 0 && now < next_allowed) {
    std::this_thread::sleep_for(next_allowed - now);
  }
  g_last_request = std::chrono::steady_clock::now();
}

struct UrlParts {
  std::string origin;  // scheme://host[:port]
  std::string path;    // /path?query
};

std::optional<UrlParts> split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return std::nullopt;
  auto path_start = url.find('/', scheme_end + 3);
  UrlParts parts;
  if (path_start == std::string::npos) {
    parts.origin = url;
    parts.path = "/";
  } else {
    parts.origin = url.substr(0, path_start);
    parts.path = url.substr(path_start);
  }
  return parts;
}

class RealHttpClient : public HttpClient {
 public:
  std::optional<HttpResponse> get(const std::string& url) override {
    auto parts = split_url(url);
    if (!parts) return std::nullopt;
#ifndef QIND_HAVE_TLS
    if (parts->origin.rfind("https://", 0) == 0) return std::nullopt;
#endif
    httplib::Client client(parts->origin);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(20);
    auto res = client.Get(parts->path);
    if (!res) return std::nullopt;
    return HttpResponse{res->status, res->body};
  }
};

}  // namespace

std::unique_ptr<HttpClient> make_real_http_client() {
  return std::make_unique<RealHttpClient>();
}

Fetcher::Fetcher(Options options, HttpClient* client)
    : options_(std::move(options)), client_(client) {}

std::string Fetcher::cache_file_name(const std::string& url) {
  return sha256_hex(url) + ".json";
}

std::optional<FetchResult> Fetcher::read_cache(const std::string& url) const {
  if (options_.cache_dir.empty()) return std::nullopt;
  const fs::path path = fs::path(options_.cache_dir) / cache_file_name(url);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error&) {
    return std::nullopt;
  }
  if (!doc.is_object() || !doc.contains("status") || !doc.contains("body")) {
    return std::nullopt;
  }
  FetchResult result;
  result.ok = true;
  result.status = doc["status"].get<int>();
  result.body = doc["body"].get<std::string>();
  result.retrieved_at = doc.value("retrieved_at", "");
  result.from_cache = true;
  return result;
}

void Fetcher::write_cache(const std::string& url, const HttpResponse& response,
                          const std::string& retrieved_at) const {
  if (options_.cache_dir.empty()) return;
  const fs::path dir(options_.cache_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  json doc;
  doc["url"] = url;
  doc["status"] = response.status;
  doc["retrieved_at"] = retrieved_at;
  doc["body"] = response.body;
  const fs::path path = dir / cache_file_name(url);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump(2) << "\n";
  }
  fs::rename(tmp, path, ec);
}

FetchResult Fetcher::get(const std::string& url) {
  auto cached = read_cache(url);

  if (options_.offline) {
    if (cached) return *cached;
    FetchResult miss;
    miss.error = "offline and no cached response for " + url;
    return miss;
  }

  if (cached) {
    auto stamp = parse_utc_iso(cached->retrieved_at);
    if (stamp) {
      const auto age = std::time(nullptr) - *stamp;
      if (age >= 0 && age <= options_.ttl.count()) return *cached;
    }
  }

  if (!client_) {
    if (cached) return *cached;
    FetchResult fail;
    fail.error = "no http client configured";
    return fail;
  }

  rate_limit(options_.min_interval);
  auto response = client_->get(url);
  if (!response) {
    // Transport failure; a stale cache entry still beats nothing.
    if (cached) return *cached;
    FetchResult fail;
    fail.error = "request failed: " + url;
    return fail;
  }

  const std::string retrieved_at = now_utc_iso();
  write_cache(url, *response, retrieved_at);
  FetchResult result;
  result.ok = true;
  result.status = response->status;
  result.body = response->body;
  result.retrieved_at = retrieved_at;
  return result;
}

}  // namespace qind
