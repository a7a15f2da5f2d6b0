#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leakaudit/backend.hpp"
#include "leakaudit/corpus.hpp"
#include "leakaudit/error.hpp"

namespace leakaudit {

enum class Smoothing { add_k, interpolated };

struct ReferenceLMOptions {
  std::size_t order = 5;
  Smoothing smoothing = Smoothing::interpolated;
  double add_k = 0.01;
  /// Mixture weight per order (index 0 is the unigram). Empty means weights
  /// doubling with each order. Renormalized over orders whose context was seen.
  std::vector<double> weights;

  bool operator==(const ReferenceLMOptions&) const = default;
};

/// Count-based n-gram model over a fixed vocabulary. Every sequence is
/// conditioned on an implicit begin marker that is never predicted.
class ReferenceLM {
 public:
  struct ContextCounts {
    std::uint64_t total = 0;
    std::vector<std::pair<Token, std::uint32_t>> next;  // sorted by token

    std::uint32_t count(Token t) const {
      auto it = std::lower_bound(next.begin(), next.end(), t,
                                 [](const auto& p, Token key) { return p.first < key; });
      return it != next.end() && it->first == t ? it->second : 0;
    }
    bool operator==(const ContextCounts&) const = default;
  };

  static ReferenceLM train(const std::vector<TokenSeq>& documents, std::size_t vocab_size,
                           ReferenceLMOptions options = {}) {
    ReferenceLM lm(vocab_size, std::move(options));
    std::vector<std::unordered_map<std::uint64_t, std::unordered_map<Token, std::uint32_t>>> raw(
        lm.options_.order);
    std::size_t seen_tokens = 0;
    TokenSeq h;
    for (const auto& doc : documents) {
      check_tokens(doc, vocab_size);
      h.assign(1, lm.bos());
      h.insert(h.end(), doc.begin(), doc.end());
      for (std::size_t p = 1; p < h.size(); ++p) {
        for (std::size_t m = 1; m <= lm.options_.order; ++m) {
          const std::size_t len = m - 1;
          if (len > p) break;
          ++raw[m - 1][lm.pack(std::span<const Token>(h).subspan(p - len, len))][h[p]];
        }
      }
      seen_tokens += doc.size();
    }
    if (seen_tokens == 0) {
      throw Error(ErrorKind::validation, "cannot train a reference LM on an empty corpus");
    }
    for (std::size_t m = 0; m < raw.size(); ++m) {
      auto& table = lm.tables_[m];
      table.reserve(raw[m].size());
      for (auto& [key, nexts] : raw[m]) {
        ContextCounts cc;
        cc.next.assign(nexts.begin(), nexts.end());
        std::sort(cc.next.begin(), cc.next.end());
        for (const auto& [t, c] : cc.next) cc.total += c;
        table.emplace(key, std::move(cc));
      }
    }
    return lm;
  }

  std::size_t vocab_size() const { return vocab_size_; }
  std::size_t order() const { return options_.order; }
  const ReferenceLMOptions& options() const { return options_; }
  Token bos() const { return static_cast<Token>(vocab_size_); }

  /// Number of distinct stored contexts of the given order.
  std::size_t context_count(std::size_t order) const { return tables_.at(order - 1).size(); }

  /// ln p(next | history), history given without the begin marker.
  double logprob(std::span<const Token> history, Token next) const {
    return std::log(prob_with_bos(with_bos(history), next));
  }

  /// Full next-token distribution after `history` (without begin marker).
  std::vector<double> distribution(std::span<const Token> history) const {
    return distribution_with_bos(with_bos(history));
  }

  /// Stored contexts of a given order (for normalization checks).
  template <typename Fn>
  void for_each_context(std::size_t order, Fn&& fn) const {
    for (const auto& [key, cc] : tables_.at(order - 1)) fn(unpack(key, order - 1), cc);
  }

  /// Distribution given a history that already carries the begin marker.
  std::vector<double> distribution_with_bos(std::span<const Token> h) const {
    std::vector<double> p(vocab_size_, 0.0);
    const double v = static_cast<double>(vocab_size_);
    for (const auto& c : components(h)) {
      const double denom = static_cast<double>(c.counts ? c.counts->total : 0) + options_.add_k * v;
      for (std::size_t t = 0; t < vocab_size_; ++t) {
        const double count = c.counts ? c.counts->count(static_cast<Token>(t)) : 0.0;
        p[t] += c.weight * ((count + options_.add_k) / denom);
      }
    }
    return p;
  }

  double prob_with_bos(std::span<const Token> h, Token next) const {
    double p = 0.0;
    const double v = static_cast<double>(vocab_size_);
    for (const auto& c : components(h)) {
      const double denom = static_cast<double>(c.counts ? c.counts->total : 0) + options_.add_k * v;
      const double count = c.counts ? c.counts->count(next) : 0.0;
      p += c.weight * ((count + options_.add_k) / denom);
    }
    return p;
  }

  bool operator==(const ReferenceLM&) const = default;

 private:
  struct Component {
    double weight;
    const ContextCounts* counts;  // null: unseen context, uniform add-k
  };

  ReferenceLM(std::size_t vocab_size, ReferenceLMOptions options)
      : vocab_size_(vocab_size), options_(std::move(options)) {
    if (vocab_size_ < 1) throw Error(ErrorKind::validation, "vocabulary must be non-empty");
    if (options_.order < 1) throw Error(ErrorKind::validation, "n-gram order must be >= 1");
    if (!(options_.add_k > 0.0)) throw Error(ErrorKind::validation, "add-k constant must be > 0");
    const double bits = static_cast<double>(options_.order - 1) *
                        std::log2(static_cast<double>(vocab_size_) + 1.0);
    if (bits >= 64.0) {
      throw Error(ErrorKind::validation, "order and vocabulary too large for 64-bit context keys");
    }
    if (options_.weights.empty()) {
      for (std::size_t m = 0; m < options_.order; ++m) {
        options_.weights.push_back(std::ldexp(1.0, static_cast<int>(m)));
      }
    }
    if (options_.weights.size() != options_.order) {
      throw Error(ErrorKind::validation, "interpolation weights must have one entry per order");
    }
    for (double w : options_.weights) {
      if (!(w >= 0.0)) throw Error(ErrorKind::validation, "interpolation weights must be >= 0");
    }
    tables_.resize(options_.order);
  }

  TokenSeq with_bos(std::span<const Token> history) const {
    TokenSeq h;
    h.reserve(history.size() + 1);
    h.push_back(bos());
    h.insert(h.end(), history.begin(), history.end());
    return h;
  }

  std::uint64_t pack(std::span<const Token> ctx) const {
    std::uint64_t key = 0;
    const std::uint64_t base = vocab_size_ + 1;
    for (auto t : ctx) key = key * base + t;
    return key;
  }

  TokenSeq unpack(std::uint64_t key, std::size_t len) const {
    TokenSeq ctx(len);
    const std::uint64_t base = vocab_size_ + 1;
    for (std::size_t i = len; i > 0; --i) {
      ctx[i - 1] = static_cast<Token>(key % base);
      key /= base;
    }
    return ctx;
  }

  const ContextCounts* lookup(std::span<const Token> h, std::size_t order) const {
    const std::size_t len = order - 1;
    const auto& table = tables_[order - 1];
    auto it = table.find(pack(h.subspan(h.size() - len, len)));
    return it == table.end() ? nullptr : &it->second;
  }

  std::vector<Component> components(std::span<const Token> h) const {
    std::vector<Component> out;
    const std::size_t max_order = std::min(options_.order, h.size() + 1);
    if (options_.smoothing == Smoothing::add_k) {
      out.push_back({1.0, lookup(h, max_order)});
      return out;
    }
    double total = 0.0;
    for (std::size_t m = 1; m <= max_order; ++m) {
      const auto* cc = lookup(h, m);
      if (!cc || options_.weights[m - 1] == 0.0) continue;
      out.push_back({options_.weights[m - 1], cc});
      total += options_.weights[m - 1];
    }
    if (out.empty()) {
      out.push_back({1.0, nullptr});
      return out;
    }
    for (auto& c : out) c.weight /= total;
    return out;
  }

  std::size_t vocab_size_;
  ReferenceLMOptions options_;
  std::vector<std::unordered_map<std::uint64_t, ContextCounts>> tables_;
};

/// The reference LM behind the Backend interface with byte tokenization.
class ReferenceBackend final : public Backend {
 public:
  ReferenceBackend(std::shared_ptr<const ReferenceLM> lm, std::size_t context_window,
                   std::string name = "")
      : lm_(std::move(lm)) {
    if (lm_->vocab_size() != ByteTokenizer::kVocab) {
      throw Error(ErrorKind::validation, "reference backend expects a byte-level model");
    }
    if (context_window < 2) throw Error(ErrorKind::validation, "context window must be >= 2");
    desc_.name = name.empty() ? "reference-lm-o" + std::to_string(lm_->order()) : std::move(name);
    desc_.vocab_size = lm_->vocab_size();
    desc_.context_window = context_window;
    desc_.family = "byte";
  }

  const BackendDescriptor& descriptor() const override { return desc_; }
  const ReferenceLM& model() const { return *lm_; }

  TokenSeq tokenize(std::string_view text) const override { return ByteTokenizer::encode(text); }
  std::string detokenize(const TokenSeq& t) const override { return ByteTokenizer::decode(t); }

  ScoredSequence score(const TokenSeq& tokens) const override {
    check_score_request(tokens, desc_);
    TokenSeq h;
    h.reserve(tokens.size() + 1);
    h.push_back(lm_->bos());
    h.insert(h.end(), tokens.begin(), tokens.end());
    const std::span<const Token> all(h);
    ScoredSequence out{tokens, {}};
    out.logprobs.reserve(tokens.size() - 1);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      out.logprobs.push_back(std::log(lm_->prob_with_bos(all.first(i + 1), tokens[i])));
    }
    return out;
  }

  TokenSeq greedy_continue(const TokenSeq& context, std::size_t n) const override {
    check_greedy_request(context, n, desc_);
    TokenSeq h;
    h.reserve(context.size() + n + 1);
    h.push_back(lm_->bos());
    h.insert(h.end(), context.begin(), context.end());
    TokenSeq out;
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = lm_->distribution_with_bos(h);
      // max_element keeps the first maximum, i.e. the smallest id on ties.
      const auto best = static_cast<Token>(std::max_element(p.begin(), p.end()) - p.begin());
      out.push_back(best);
      h.push_back(best);
    }
    return out;
  }

 private:
  std::shared_ptr<const ReferenceLM> lm_;
  BackendDescriptor desc_;
};

/// Trains a byte-level reference LM over every document of a corpus.
inline ReferenceLM train_reference_lm(const Corpus& corpus, ReferenceLMOptions options = {}) {
  if (corpus.empty()) {
    throw Error(ErrorKind::validation, "cannot train a reference LM on an empty corpus");
  }
  std::vector<TokenSeq> docs;
  docs.reserve(corpus.size());
  for (const auto& d : corpus.documents) docs.push_back(ByteTokenizer::encode(d.content));
  return ReferenceLM::train(docs, ByteTokenizer::kVocab, std::move(options));
}

}  // namespace leakaudit
