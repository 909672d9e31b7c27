#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>

namespace qind {

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Transport abstraction so tests can substitute a stub (or a client that
// fails the test if touched at all).
class HttpClient {
 public:
  virtual ~HttpClient() = default;
  // nullopt = transport failure (connection refused, DNS, TLS, ...).
  virtual std::optional<HttpResponse> get(const std::string& url) = 0;
};

std::unique_ptr<HttpClient> make_real_http_client();

struct FetchResult {
  bool ok = false;
  int status = 0;
  std::string body;
  std::string retrieved_at;  // from the cache entry; stable across runs
  bool from_cache = false;
  std::string error;
};

// Disk-cached GET with a politeness interval between real requests.
// One cache file per URL, named by the URL's content hash, holding
// {url, status, retrieved_at, body}. Offline mode never touches the
// network: a cache hit (any age) is served, a miss is a plain failure.
class Fetcher {
 public:
  struct Options {
    std::string cache_dir;
    bool offline = false;
    std::chrono::seconds ttl{7 * 24 * 3600};
    std::chrono::milliseconds min_interval{200};
  };

  Fetcher(Options options, HttpClient* client);

  FetchResult get(const std::string& url);

  bool offline() const { return options_.offline; }

  static std::string cache_file_name(const std::string& url);

 private:
  Options options_;
  HttpClient* client_;

  std::optional<FetchResult> read_cache(const std::string& url) const;
  void write_cache(const std::string& url, const HttpResponse& response,
                   const std::string& retrieved_at) const;
};

// sha256 hex digest; used for cache file naming.
std::string sha256_hex(std::string_view data);

}  // namespace qind
