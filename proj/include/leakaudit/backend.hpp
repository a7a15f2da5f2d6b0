#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leakaudit/error.hpp"

namespace leakaudit {

using Token = std::uint32_t;
using TokenSeq = std::vector<Token>;

/// logprobs[i] is ln p(tokens[i + 1] | tokens[0..i]); the first token is
/// context only and never scored.
struct ScoredSequence {
  TokenSeq tokens;
  std::vector<double> logprobs;
};

struct BackendDescriptor {
  std::string name;
  std::size_t vocab_size = 0;
  std::size_t context_window = 0;
  std::string family;
};

/// Uniform model interface: tokenize, score and greedily continue.
/// Implementations must be safe to call concurrently.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual const BackendDescriptor& descriptor() const = 0;
  virtual TokenSeq tokenize(std::string_view text) const = 0;
  virtual std::string detokenize(const TokenSeq& tokens) const = 0;
  virtual ScoredSequence score(const TokenSeq& tokens) const = 0;
  /// n argmax tokens following `context`; ties go to the smallest id.
  virtual TokenSeq greedy_continue(const TokenSeq& context, std::size_t n) const = 0;
};

inline void check_tokens(const TokenSeq& tokens, std::size_t vocab_size) {
  for (auto t : tokens) {
    if (t >= vocab_size) {
      throw Error(ErrorKind::validation, "token id " + std::to_string(t) +
                                             " outside vocabulary of " +
                                             std::to_string(vocab_size));
    }
  }
}

inline void check_score_request(const TokenSeq& tokens, const BackendDescriptor& desc) {
  if (tokens.size() < 2) {
    throw Error(ErrorKind::too_short, "scoring needs at least 2 tokens, got " +
                                          std::to_string(tokens.size()));
  }
  if (tokens.size() > desc.context_window) {
    throw Error(ErrorKind::window, "sequence of " + std::to_string(tokens.size()) +
                                       " tokens exceeds context window " +
                                       std::to_string(desc.context_window) +
                                       " of backend '" + desc.name + "'");
  }
  check_tokens(tokens, desc.vocab_size);
}

inline void check_greedy_request(const TokenSeq& context, std::size_t n,
                                 const BackendDescriptor& desc) {
  if (context.empty()) throw Error(ErrorKind::too_short, "greedy continuation needs context");
  if (n < 1) throw Error(ErrorKind::validation, "greedy continuation length must be >= 1");
  if (context.size() + n > desc.context_window) {
    throw Error(ErrorKind::window, "context of " + std::to_string(context.size()) + " plus " +
                                       std::to_string(n) + " new tokens exceeds context window " +
                                       std::to_string(desc.context_window));
  }
  check_tokens(context, desc.vocab_size);
}

/// Lossless byte-level tokenizer: token id == byte value.
struct ByteTokenizer {
  static constexpr std::size_t kVocab = 256;

  static TokenSeq encode(std::string_view text) {
    TokenSeq out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) out[i] = static_cast<unsigned char>(text[i]);
    return out;
  }

  static std::string decode(const TokenSeq& tokens) {
    check_tokens(tokens, kVocab);
    std::string out(tokens.size(), '\0');
    for (std::size_t i = 0; i < tokens.size(); ++i) out[i] = static_cast<char>(tokens[i]);
    return out;
  }
};

/// Lossless 16-symbol tokenizer: each byte becomes its high and low nibble.
struct NibbleTokenizer {
  static constexpr std::size_t kVocab = 16;

  static TokenSeq encode(std::string_view text) {
    TokenSeq out;
    out.reserve(text.size() * 2);
    for (unsigned char c : text) {
      out.push_back(c >> 4);
      out.push_back(c & 0xf);
    }
    return out;
  }

  static std::string decode(const TokenSeq& tokens) {
    check_tokens(tokens, kVocab);
    if (tokens.size() % 2) {
      throw Error(ErrorKind::validation, "nibble sequence has odd length");
    }
    std::string out(tokens.size() / 2, '\0');
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<char>((tokens[2 * i] << 4) | tokens[2 * i + 1]);
    }
    return out;
  }
};

/// Test oracles with closed-form behaviour.
namespace oracle {

/// Uniform distribution over 16 nibble tokens: every logprob is -ln 16.
class Uniform final : public Backend {
 public:
  explicit Uniform(std::size_t context_window = 1u << 20)
      : desc_{"uniform-16", NibbleTokenizer::kVocab, context_window, "nibble"} {}

  const BackendDescriptor& descriptor() const override { return desc_; }
  TokenSeq tokenize(std::string_view text) const override { return NibbleTokenizer::encode(text); }
  std::string detokenize(const TokenSeq& t) const override { return NibbleTokenizer::decode(t); }

  ScoredSequence score(const TokenSeq& tokens) const override {
    check_score_request(tokens, desc_);
    return {tokens, std::vector<double>(tokens.size() - 1, -std::log(16.0))};
  }

  TokenSeq greedy_continue(const TokenSeq& context, std::size_t n) const override {
    check_greedy_request(context, n, desc_);
    return TokenSeq(n, 0);
  }

 private:
  BackendDescriptor desc_;
};

/// Always predicts token 0 with probability 1 - (V - 1) * eps.
class ConstantAdversary final : public Backend {
 public:
  static constexpr double kEps = 1e-12;

  explicit ConstantAdversary(std::size_t context_window = 1u << 20)
      : desc_{"constant-adversary", ByteTokenizer::kVocab, context_window, "byte"} {}

  const BackendDescriptor& descriptor() const override { return desc_; }
  TokenSeq tokenize(std::string_view text) const override { return ByteTokenizer::encode(text); }
  std::string detokenize(const TokenSeq& t) const override { return ByteTokenizer::decode(t); }

  ScoredSequence score(const TokenSeq& tokens) const override {
    check_score_request(tokens, desc_);
    ScoredSequence out{tokens, {}};
    const double hit = std::log1p(-static_cast<double>(desc_.vocab_size - 1) * kEps);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      out.logprobs.push_back(tokens[i] == 0 ? hit : std::log(kEps));
    }
    return out;
  }

  TokenSeq greedy_continue(const TokenSeq& context, std::size_t n) const override {
    check_greedy_request(context, n, desc_);
    return TokenSeq(n, 0);
  }

 private:
  BackendDescriptor desc_;
};

/// Echo oracle: bound to gold documents, it predicts whatever token follows
/// the first occurrence of the context (or its longest matching suffix) in
/// the gold text with probability 1 - (V - 1) * eps.
class Echo final : public Backend {
 public:
  static constexpr double kEps = 1e-12;

  explicit Echo(std::vector<TokenSeq> gold, std::size_t context_window = 1u << 20)
      : gold_(std::move(gold)),
        desc_{"echo-oracle", ByteTokenizer::kVocab, context_window, "byte"} {}

  static Echo from_texts(const std::vector<std::string>& texts,
                         std::size_t context_window = 1u << 20) {
    std::vector<TokenSeq> gold;
    for (const auto& t : texts) gold.push_back(ByteTokenizer::encode(t));
    return Echo(std::move(gold), context_window);
  }

  const BackendDescriptor& descriptor() const override { return desc_; }
  TokenSeq tokenize(std::string_view text) const override { return ByteTokenizer::encode(text); }
  std::string detokenize(const TokenSeq& t) const override { return ByteTokenizer::decode(t); }

  ScoredSequence score(const TokenSeq& tokens) const override {
    check_score_request(tokens, desc_);
    ScoredSequence out{tokens, std::vector<double>(tokens.size() - 1, 0.0)};
    // A window copied verbatim from a gold document scores exactly zero.
    for (const auto& g : gold_) {
      if (std::search(g.begin(), g.end(), tokens.begin(), tokens.end()) != g.end()) return out;
    }
    const double hit = std::log1p(-static_cast<double>(desc_.vocab_size - 1) * kEps);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const TokenSeq ctx(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(i));
      out.logprobs[i - 1] = predict(ctx) == tokens[i] ? hit : std::log(kEps);
    }
    return out;
  }

  TokenSeq greedy_continue(const TokenSeq& context, std::size_t n) const override {
    check_greedy_request(context, n, desc_);
    TokenSeq ctx = context;
    TokenSeq out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(predict(ctx));
      ctx.push_back(out.back());
    }
    return out;
  }

 private:
  Token predict(const TokenSeq& ctx) const {
    for (std::size_t len = ctx.size(); len > 0; --len) {
      const auto first = ctx.end() - static_cast<std::ptrdiff_t>(len);
      for (const auto& g : gold_) {
        auto it = std::search(g.begin(), g.end(), first, ctx.end());
        while (it != g.end()) {
          const auto end = it + static_cast<std::ptrdiff_t>(len);
          if (end != g.end()) return *end;
          it = std::search(it + 1, g.end(), first, ctx.end());
        }
      }
    }
    return 0;
  }

  std::vector<TokenSeq> gold_;
  BackendDescriptor desc_;
};

}  // namespace oracle
}  // namespace leakaudit
