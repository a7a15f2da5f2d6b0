#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <deque>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "leakaudit/error.hpp"
#include "leakaudit/util/base64.hpp"
#include "leakaudit/util/fs.hpp"
#include "leakaudit/util/utf8.hpp"

namespace leakaudit::http {

using Headers = std::map<std::string, std::string>;

struct Request {
  std::string method = "GET";
  std::string url;
  Headers headers;
};

/// Header names are stored lowercase.
struct Response {
  int status = 0;
  Headers headers;
  std::string body;

  std::string header(const std::string& name) const {
    auto it = headers.find(name);
    return it == headers.end() ? std::string() : it->second;
  }
};

inline std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

/// Thread-safe request executor. Connection-level failures throw
/// TransportError with status 0; HTTP statuses are returned as-is.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual Response send(const Request& request) = 0;
};

struct Url {
  std::string scheme_host;  ///< "https://api.example.com:443"
  std::string path;         ///< "/search?q=..."
};

inline Url split_url(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos) throw Error(ErrorKind::validation, "URL lacks a scheme: " + url);
  const auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

class LiveTransport final : public Transport {
 public:
  explicit LiveTransport(std::chrono::seconds timeout = std::chrono::seconds(60)) : timeout_(timeout) {}

  Response send(const Request& request) override {
    const auto url = split_url(request.url);
    httplib::Client client(url.scheme_host);
    client.set_follow_location(true);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    httplib::Headers headers(request.headers.begin(), request.headers.end());
    auto result = request.method == "GET" ? client.Get(url.path, headers)
                                          : client.Post(url.path, headers, "", "application/json");
    if (!result) {
      throw TransportError(request.method + " " + request.url + ": " + httplib::to_string(result.error()),
                           0, 1, true);
    }
    Response out;
    out.status = result->status;
    out.body = result->body;
    for (const auto& [k, v] : result->headers) out.headers[lowercase(k)] = v;
    return out;
  }

 private:
  std::chrono::seconds timeout_;
};

inline nlohmann::json to_fixture(const Request& request, const Response& response) {
  nlohmann::json j{{"method", request.method}, {"url", request.url}, {"status", response.status},
                   {"headers", response.headers}};
  if (util::is_valid_utf8(response.body)) {
    auto parsed = nlohmann::json::parse(response.body, nullptr, false);
    if (!parsed.is_discarded() && (parsed.is_object() || parsed.is_array())) j["body"] = std::move(parsed);
    else j["body_text"] = response.body;
  } else {
    j["body_base64"] = util::base64_encode(response.body);
  }
  return j;
}

/// Replays responses recorded as one JSON file per response:
/// {"method", "url", "status", "headers", "body" | "body_text" | "body_base64"}.
/// Files are read in filename order; several files for the same request are
/// served in that order and the last one repeats.
class FixtureTransport final : public Transport {
 public:
  explicit FixtureTransport(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
      throw Error(ErrorKind::ingestion, "fixture directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) add(f);
  }

  FixtureTransport() = default;

  void add(const Request& request, Response response) {
    std::lock_guard lock(mu_);
    queues_[key(request.method, request.url)].push_back(std::move(response));
  }

  Response send(const Request& request) override {
    std::lock_guard lock(mu_);
    ++served_;
    auto it = queues_.find(key(request.method, request.url));
    if (it == queues_.end() || it->second.empty()) {
      throw TransportError("no recorded response for " + request.method + " " + request.url, 0, 1, false);
    }
    auto& q = it->second;
    Response r = q.front();
    if (q.size() > 1) q.pop_front();
    return r;
  }

  std::size_t requests_served() const {
    std::lock_guard lock(mu_);
    return served_;
  }

 private:
  static std::string key(const std::string& method, const std::string& url) { return method + " " + url; }

  void add(const std::filesystem::path& file) {
    auto text = util::read_file(file);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::parse, file.string() + ": " + e.what());
    }
    Request request{j.value("method", "GET"), j.at("url").get<std::string>(), {}};
    Response response;
    response.status = j.value("status", 200);
    if (j.contains("headers")) {
      for (const auto& [k, v] : j["headers"].items()) response.headers[lowercase(k)] = v.get<std::string>();
    }
    if (j.contains("body")) response.body = j["body"].dump();
    else if (j.contains("body_text")) response.body = j["body_text"].get<std::string>();
    else if (j.contains("body_base64")) response.body = util::base64_decode(j["body_base64"].get<std::string>());
    queues_[key(request.method, request.url)].push_back(std::move(response));
  }

  mutable std::mutex mu_;
  std::map<std::string, std::deque<Response>> queues_;
  std::size_t served_ = 0;
};

/// Forwards to another transport and saves every exchange as a fixture file.
class RecordingTransport final : public Transport {
 public:
  RecordingTransport(Transport& inner, std::filesystem::path dir) : inner_(inner), dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  Response send(const Request& request) override {
    auto response = inner_.send(request);
    std::lock_guard lock(mu_);
    const auto name = fmt::format("{:06d}.json", next_++);
    util::write_file_atomic(dir_ / name, to_fixture(request, response).dump(2) + "\n");
    return response;
  }

 private:
  Transport& inner_;
  std::filesystem::path dir_;
  std::mutex mu_;
  int next_ = 0;
};

// ---- time ------------------------------------------------------------------

class Clock {
 public:
  using time_point = std::chrono::steady_clock::time_point;
  using duration = std::chrono::milliseconds;
  virtual ~Clock() = default;
  virtual time_point now() = 0;
  virtual void sleep_for(duration d) = 0;
};

class SystemClock final : public Clock {
 public:
  time_point now() override { return std::chrono::steady_clock::now(); }
  void sleep_for(duration d) override { std::this_thread::sleep_for(d); }
};

/// Virtual time: sleeping advances the clock and is recorded.
class ManualClock final : public Clock {
 public:
  time_point now() override {
    std::lock_guard lock(mu_);
    return now_;
  }
  void sleep_for(duration d) override {
    std::lock_guard lock(mu_);
    sleeps_.push_back(d);
    now_ += d;
  }
  void advance(duration d) {
    std::lock_guard lock(mu_);
    now_ += d;
  }
  std::vector<duration> sleeps() const {
    std::lock_guard lock(mu_);
    return sleeps_;
  }

 private:
  mutable std::mutex mu_;
  time_point now_{};
  std::vector<duration> sleeps_;
};

/// At most `budget` acquisitions in any rolling window.
class RateLimiter {
 public:
  RateLimiter(Clock& clock, std::size_t budget, Clock::duration window = std::chrono::hours(1))
      : clock_(clock), budget_(std::max<std::size_t>(1, budget)), window_(window) {}

  void acquire() {
    std::lock_guard lock(mu_);
    auto now = clock_.now();
    prune(now);
    if (stamps_.size() >= budget_) {
      const auto wait = stamps_.front() + window_ - now;
      clock_.sleep_for(std::chrono::duration_cast<Clock::duration>(wait));
      now = clock_.now();
      prune(now);
    }
    stamps_.push_back(now);
  }

  const std::deque<Clock::time_point>& history() const { return stamps_; }

 private:
  void prune(Clock::time_point now) {
    while (!stamps_.empty() && stamps_.front() + window_ <= now) stamps_.pop_front();
  }

  Clock& clock_;
  std::size_t budget_;
  Clock::duration window_;
  std::mutex mu_;
  std::deque<Clock::time_point> stamps_;
};

}  // namespace leakaudit::http
