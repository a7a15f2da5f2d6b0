#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <semaphore>
#include <string>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "leakaudit/backend.hpp"
#include "leakaudit/error.hpp"
#include "leakaudit/util/hash.hpp"

namespace leakaudit {

struct RemoteOptions {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{200};
  double backoff_multiplier = 2.0;
  std::chrono::milliseconds max_backoff{10'000};
  std::size_t max_in_flight = 4;
  std::chrono::seconds timeout{120};
  /// Sleep hook; tests replace it to record backoff without waiting.
  std::function<void(std::chrono::milliseconds)> sleep = [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };
};

/// HTTP client for the token-id scoring protocol (/v1/info, /v1/score,
/// /v1/greedy, /v1/tokenize, /v1/detokenize).
class RemoteBackend final : public Backend {
 public:
  using json = nlohmann::json;

  explicit RemoteBackend(std::string base_url, RemoteOptions options = {})
      : base_url_(std::move(base_url)),
        options_(std::move(options)),
        in_flight_(std::make_unique<std::counting_semaphore<1024>>(
            static_cast<std::ptrdiff_t>(std::clamp<std::size_t>(options_.max_in_flight, 1, 1024)))) {
    while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
    if (base_url_.empty()) throw Error(ErrorKind::validation, "remote backend URL is empty");
    if (options_.max_attempts < 1) options_.max_attempts = 1;
    const auto info = request("GET", "/v1/info", json());
    try {
      desc_.name = info.at("name").get<std::string>();
      desc_.vocab_size = info.at("vocab_size").get<std::size_t>();
      desc_.context_window = info.at("context_window").get<std::size_t>();
      desc_.family = info.at("family").get<std::string>();
    } catch (const json::exception& e) {
      throw Error(ErrorKind::protocol, std::string("bad /v1/info response: ") + e.what());
    }
    if (desc_.context_window < 2 || desc_.vocab_size == 0) {
      throw Error(ErrorKind::protocol, "server advertised an unusable vocab/context window");
    }
  }

  const BackendDescriptor& descriptor() const override { return desc_; }

  TokenSeq tokenize(std::string_view text) const override {
    const auto res = request("POST", "/v1/tokenize", json{{"text", std::string(text)}});
    auto tokens = read_tokens(res, "tokens");
    check_protocol_tokens(tokens);
    return tokens;
  }

  std::string detokenize(const TokenSeq& tokens) const override {
    check_tokens(tokens, desc_.vocab_size);
    const auto res = request("POST", "/v1/detokenize", json{{"tokens", tokens}});
    if (!res.contains("text") || !res["text"].is_string()) {
      throw Error(ErrorKind::protocol, "detokenize response lacks 'text'");
    }
    return res["text"].get<std::string>();
  }

  ScoredSequence score(const TokenSeq& tokens) const override {
    check_score_request(tokens, desc_);
    const auto res = request("POST", "/v1/score", json{{"tokens", tokens}});
    if (!res.contains("logprobs") || !res["logprobs"].is_array()) {
      throw Error(ErrorKind::protocol, "score response lacks 'logprobs'");
    }
    const auto& lp = res["logprobs"];
    if (lp.size() != tokens.size() - 1) {
      throw Error(ErrorKind::protocol, "score response has " + std::to_string(lp.size()) +
                                           " logprobs, expected " +
                                           std::to_string(tokens.size() - 1));
    }
    ScoredSequence out{tokens, {}};
    out.logprobs.reserve(lp.size());
    for (const auto& v : lp) {
      if (!v.is_number()) throw Error(ErrorKind::protocol, "non-numeric logprob");
      const double x = v.get<double>();
      if (std::isnan(x) || x > 0.0) {
        throw Error(ErrorKind::protocol, "logprob outside (-inf, 0]: " + v.dump());
      }
      out.logprobs.push_back(x);
    }
    return out;
  }

  TokenSeq greedy_continue(const TokenSeq& context, std::size_t n) const override {
    check_greedy_request(context, n, desc_);
    const auto res = request("POST", "/v1/greedy", json{{"context", context}, {"n", n}});
    auto tokens = read_tokens(res, "tokens");
    if (tokens.size() != n) {
      throw Error(ErrorKind::protocol, "greedy response has " + std::to_string(tokens.size()) +
                                           " tokens, expected " + std::to_string(n));
    }
    check_protocol_tokens(tokens);
    return tokens;
  }

  /// Total HTTP attempts made so far, retries included.
  std::size_t attempts_made() const { return attempts_.load(); }

 private:
  static TokenSeq read_tokens(const json& res, const char* key) {
    if (!res.contains(key) || !res[key].is_array()) {
      throw Error(ErrorKind::protocol, std::string("response lacks '") + key + "'");
    }
    TokenSeq out;
    for (const auto& v : res[key]) {
      if (!v.is_number_unsigned()) throw Error(ErrorKind::protocol, "token id is not unsigned");
      out.push_back(v.get<Token>());
    }
    return out;
  }

  void check_protocol_tokens(const TokenSeq& tokens) const {
    for (auto t : tokens) {
      if (t >= desc_.vocab_size) {
        throw Error(ErrorKind::protocol, "server returned token " + std::to_string(t) +
                                             " outside vocabulary");
      }
    }
  }

  static bool is_retryable_status(int status) { return status == 429 || status >= 500; }

  json request(const std::string& method, const std::string& path, const json& body) const {
    const std::string payload = body.is_null() ? std::string() : body.dump();
    const std::string key = util::to_hex(util::hash_bytes(method + ' ' + path + '\n' + payload)) +
                            '-' + util::to_hex(sequence_.fetch_add(1));
    auto delay = options_.initial_backoff;
    int last_status = 0;
    std::string last_error;
    for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
      ++attempts_;
      std::optional<std::chrono::milliseconds> retry_after;
      bool retryable = true;
      {
        in_flight_->acquire();
        struct Release {
          std::counting_semaphore<1024>* s;
          ~Release() { s->release(); }
        } release{in_flight_.get()};
        httplib::Client client(base_url_);
        client.set_connection_timeout(options_.timeout);
        client.set_read_timeout(options_.timeout);
        client.set_write_timeout(options_.timeout);
        httplib::Headers headers{{"Idempotency-Key", key}, {"X-Request-Id", key}};
        auto res = method == "GET" ? client.Get(path, headers)
                                   : client.Post(path, headers, payload, "application/json");
        if (!res) {
          last_status = 0;
          last_error = "connection failed: " + httplib::to_string(res.error());
        } else {
          last_status = res->status;
          if (res->status >= 200 && res->status < 300) {
            if (res->has_header("X-Request-Id") && res->get_header_value("X-Request-Id") != key) {
              throw Error(ErrorKind::protocol, "response id does not match request id");
            }
            try {
              return json::parse(res->body);
            } catch (const json::parse_error& e) {
              throw Error(ErrorKind::protocol, std::string("malformed JSON response: ") + e.what());
            }
          }
          retryable = is_retryable_status(res->status);
          last_error = "HTTP " + std::to_string(res->status);
          try {
            const auto err = json::parse(res->body);
            if (err.contains("error")) last_error += ": " + err["error"].get<std::string>();
            if (err.contains("retryable") && err["retryable"].is_boolean()) {
              retryable = err["retryable"].get<bool>();
            }
          } catch (...) {
          }
          if (res->has_header("Retry-After")) {
            try {
              retry_after = std::chrono::seconds(std::stol(res->get_header_value("Retry-After")));
            } catch (...) {
            }
          }
        }
      }
      if (!retryable) {
        throw TransportError(method + ' ' + path + " failed: " + last_error, last_status, attempt,
                             false);
      }
      if (attempt == options_.max_attempts) break;
      options_.sleep(retry_after.value_or(delay));
      delay = std::min(options_.max_backoff,
                       std::chrono::milliseconds(static_cast<std::int64_t>(
                           std::llround(static_cast<double>(delay.count()) *
                                        options_.backoff_multiplier))));
    }
    throw TransportError(method + ' ' + path + " failed after " +
                             std::to_string(options_.max_attempts) + " attempts: " + last_error,
                         last_status, options_.max_attempts, true);
  }

  std::string base_url_;
  RemoteOptions options_;
  BackendDescriptor desc_;
  std::unique_ptr<std::counting_semaphore<1024>> in_flight_;
  mutable std::atomic<std::uint64_t> sequence_{0};
  mutable std::atomic<std::size_t> attempts_{0};
};

/// Serves any Backend over the scoring protocol.
class BackendServer {
 public:
  using json = nlohmann::json;

  explicit BackendServer(const Backend& backend) : backend_(backend) { install(); }
  ~BackendServer() { stop(); }

  BackendServer(const BackendServer&) = delete;
  BackendServer& operator=(const BackendServer&) = delete;

  /// Binds (port 0 picks a free port) and serves on a background thread.
  int start(const std::string& host = "127.0.0.1", int port = 0) {
    port_ = port == 0 ? server_.bind_to_any_port(host) : (server_.bind_to_port(host, port) ? port : -1);
    if (port_ < 0) throw Error(ErrorKind::transport, "cannot bind " + host + ":" + std::to_string(port));
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    return port_;
  }

  /// Serves on the calling thread until stop() is called elsewhere.
  void listen(const std::string& host, int port) {
    if (!server_.listen(host, port)) {
      throw Error(ErrorKind::transport, "cannot listen on " + host + ":" + std::to_string(port));
    }
  }

  void stop() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  int port() const { return port_; }

 private:
  template <typename Fn>
  void handle(const httplib::Request& req, httplib::Response& res, Fn&& fn) {
    if (req.has_header("X-Request-Id")) res.set_header("X-Request-Id", req.get_header_value("X-Request-Id"));
    try {
      const auto body = req.body.empty() ? json::object() : json::parse(req.body);
      res.set_content(fn(body).dump(), "application/json");
    } catch (const json::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}, {"retryable", false}}.dump(), "application/json");
    } catch (const Error& e) {
      res.status = is_transport_kind(e.kind()) ? 502 : 400;
      res.set_content(json{{"error", e.what()}, {"retryable", is_transport_kind(e.kind())}}.dump(),
                      "application/json");
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(json{{"error", e.what()}, {"retryable", true}}.dump(), "application/json");
    }
  }

  void install() {
    server_.Get("/v1/info", [this](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [this](const json&) {
        const auto& d = backend_.descriptor();
        return json{{"name", d.name},
                    {"vocab_size", d.vocab_size},
                    {"context_window", d.context_window},
                    {"family", d.family}};
      });
    });
    server_.Post("/v1/score", [this](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [this](const json& body) {
        const auto scored = backend_.score(body.at("tokens").get<TokenSeq>());
        return json{{"logprobs", scored.logprobs}};
      });
    });
    server_.Post("/v1/greedy", [this](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [this](const json& body) {
        return json{{"tokens", backend_.greedy_continue(body.at("context").get<TokenSeq>(),
                                                        body.at("n").get<std::size_t>())}};
      });
    });
    server_.Post("/v1/tokenize", [this](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [this](const json& body) {
        return json{{"tokens", backend_.tokenize(body.at("text").get<std::string>())}};
      });
    });
    server_.Post("/v1/detokenize", [this](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [this](const json& body) {
        return json{{"text", backend_.detokenize(body.at("tokens").get<TokenSeq>())}};
      });
    });
  }

  const Backend& backend_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = -1;
};

}  // namespace leakaudit
