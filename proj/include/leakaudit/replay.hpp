#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "leakaudit/backend.hpp"
#include "leakaudit/error.hpp"
#include "leakaudit/util/jsonl.hpp"

namespace leakaudit {

/// Recorded backend interactions, one JSONL line per call:
///   {"op": "info"|"score"|"greedy"|"tokenize", "request": {...}, "response": {...}}
class Cassette {
 public:
  using json = nlohmann::json;

  void put(const std::string& op, const json& request, json response) {
    std::lock_guard lock(mu_);
    entries_[key(op, request)] = Entry{op, request, std::move(response)};
  }

  const json* get(const std::string& op, const json& request) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key(op, request));
    return it == entries_.end() ? nullptr : &it->second.response;
  }

  std::size_t size() const { return entries_.size(); }

  void save(const std::filesystem::path& path) const {
    std::vector<json> records;
    std::lock_guard lock(mu_);
    for (const auto& [k, e] : entries_) {
      records.push_back({{"op", e.op}, {"request", e.request}, {"response", e.response}});
    }
    util::write_jsonl(path, std::nullopt, records);
  }

  static Cassette load(const std::filesystem::path& path) {
    Cassette c;
    for (const auto& r : util::read_jsonl(path).records) {
      c.put(r.at("op").get<std::string>(), r.at("request"), r.at("response"));
    }
    return c;
  }

  Cassette() = default;
  Cassette(Cassette&& o) noexcept : entries_(std::move(o.entries_)) {}
  Cassette& operator=(Cassette&& o) noexcept {
    entries_ = std::move(o.entries_);
    return *this;
  }

 private:
  struct Entry {
    std::string op;
    json request;
    json response;
  };

  static std::string key(const std::string& op, const json& request) {
    return op + '\n' + request.dump();
  }

  std::map<std::string, Entry> entries_;
  mutable std::mutex mu_;
};

/// Forwards to a live backend and records every exchange.
class RecordingBackend final : public Backend {
 public:
  using json = nlohmann::json;

  RecordingBackend(const Backend& inner, Cassette& cassette) : inner_(inner), cassette_(cassette) {
    const auto& d = inner_.descriptor();
    cassette_.put("info", json::object(),
                  {{"name", d.name},
                   {"vocab_size", d.vocab_size},
                   {"context_window", d.context_window},
                   {"family", d.family}});
  }

  const BackendDescriptor& descriptor() const override { return inner_.descriptor(); }

  TokenSeq tokenize(std::string_view text) const override {
    auto tokens = inner_.tokenize(text);
    cassette_.put("tokenize", {{"text", std::string(text)}}, {{"tokens", tokens}});
    return tokens;
  }

  std::string detokenize(const TokenSeq& tokens) const override {
    return inner_.detokenize(tokens);
  }

  ScoredSequence score(const TokenSeq& tokens) const override {
    auto scored = inner_.score(tokens);
    cassette_.put("score", {{"tokens", tokens}}, {{"logprobs", scored.logprobs}});
    return scored;
  }

  TokenSeq greedy_continue(const TokenSeq& context, std::size_t n) const override {
    auto out = inner_.greedy_continue(context, n);
    cassette_.put("greedy", {{"context", context}, {"n", n}}, {{"tokens", out}});
    return out;
  }

 private:
  const Backend& inner_;
  Cassette& cassette_;
};

/// Serves responses from a cassette; an unrecorded request is a protocol error.
class ReplayBackend final : public Backend {
 public:
  using json = nlohmann::json;

  explicit ReplayBackend(Cassette cassette) : cassette_(std::move(cassette)) {
    const auto* info = cassette_.get("info", json::object());
    if (!info) throw Error(ErrorKind::protocol, "cassette has no info record");
    desc_.name = info->at("name").get<std::string>();
    desc_.vocab_size = info->at("vocab_size").get<std::size_t>();
    desc_.context_window = info->at("context_window").get<std::size_t>();
    desc_.family = info->at("family").get<std::string>();
  }

  const BackendDescriptor& descriptor() const override { return desc_; }

  TokenSeq tokenize(std::string_view text) const override {
    return lookup("tokenize", {{"text", std::string(text)}}).at("tokens").get<TokenSeq>();
  }

  std::string detokenize(const TokenSeq&) const override {
    throw Error(ErrorKind::protocol, "detokenize is not recorded");
  }

  ScoredSequence score(const TokenSeq& tokens) const override {
    check_score_request(tokens, desc_);
    auto lp = lookup("score", {{"tokens", tokens}}).at("logprobs").get<std::vector<double>>();
    if (lp.size() != tokens.size() - 1) {
      throw Error(ErrorKind::protocol, "recorded logprob count does not match t-1");
    }
    return {tokens, std::move(lp)};
  }

  TokenSeq greedy_continue(const TokenSeq& context, std::size_t n) const override {
    check_greedy_request(context, n, desc_);
    auto tokens = lookup("greedy", {{"context", context}, {"n", n}}).at("tokens").get<TokenSeq>();
    if (tokens.size() != n) throw Error(ErrorKind::protocol, "recorded continuation length differs");
    return tokens;
  }

 private:
  const json& lookup(const std::string& op, const json& request) const {
    const auto* r = cassette_.get(op, request);
    if (!r) throw Error(ErrorKind::protocol, "no recorded response for " + op + " request");
    return *r;
  }

  Cassette cassette_;
  BackendDescriptor desc_;
};

}  // namespace leakaudit
