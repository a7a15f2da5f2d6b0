#pragma once

#include <cmath>
#include <random>
#include <set>

#include "leakaudit/backend.hpp"
#include "leakaudit/metrics.hpp"
#include "leakaudit/replay.hpp"

namespace testing_support {

/// Scores every position at -nll and echoes gold text for a chosen number
/// of greedy trials. Recording it yields a cassette whose replay lands on an
/// exact (nll, accuracy) cell.
class ScriptedBackend final : public leakaudit::Backend {
 public:
  ScriptedBackend(std::vector<leakaudit::TokenSeq> docs, double nll, std::set<std::pair<std::size_t, std::size_t>> hits,
                  std::size_t window)
      : docs_(std::move(docs)), nll_(nll), hits_(std::move(hits)), desc_{"scripted", 256, window, "byte"} {}

  const leakaudit::BackendDescriptor& descriptor() const override { return desc_; }
  leakaudit::TokenSeq tokenize(std::string_view text) const override { return leakaudit::ByteTokenizer::encode(text); }
  std::string detokenize(const leakaudit::TokenSeq& t) const override { return leakaudit::ByteTokenizer::decode(t); }

  leakaudit::ScoredSequence score(const leakaudit::TokenSeq& tokens) const override {
    leakaudit::check_score_request(tokens, desc_);
    return {tokens, std::vector<double>(tokens.size() - 1, -nll_)};
  }

  leakaudit::TokenSeq greedy_continue(const leakaudit::TokenSeq& ctx, std::size_t n) const override {
    leakaudit::check_greedy_request(ctx, n, desc_);
    for (std::size_t d = 0; d < docs_.size(); ++d) {
      const auto& g = docs_[d];
      auto it = std::search(g.begin(), g.end(), ctx.begin(), ctx.end());
      if (it == g.end()) continue;
      const auto s = static_cast<std::size_t>(it - g.begin()) + ctx.size();
      if (hits_.count({d, s})) return {g.begin() + static_cast<std::ptrdiff_t>(s),
                                       g.begin() + static_cast<std::ptrdiff_t>(s + n)};
    }
    return leakaudit::TokenSeq(n, 0);
  }

 private:
  std::vector<leakaudit::TokenSeq> docs_;
  double nll_;
  std::set<std::pair<std::size_t, std::size_t>> hits_;
  leakaudit::BackendDescriptor desc_;
};

/// Five documents of 160 ASCII bytes: with W=64, S=32 and five points per
/// stride each yields 20 trials, so 100 trials per cell. The leading byte is
/// unique to its document so even one-token contexts locate their position.
inline std::vector<std::string> replay_documents(std::uint64_t seed) {
  static constexpr char kBody[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sizeof(kBody) - 2);
  std::vector<std::string> out;
  for (int d = 0; d < 5; ++d) {
    std::string s(160, ' ');
    s[0] = static_cast<char>('A' + d);
    for (std::size_t i = 1; i < s.size(); ++i) s[i] = kBody[pick(rng)];
    out.push_back(s);
  }
  return out;
}

inline constexpr leakaudit::metrics::StrideConfig kReplayStride{64, 32};

/// Records a cassette for one cell: every position costs `nll` nats and
/// round(accuracy * 100) of the 100 trials match.
inline leakaudit::Cassette record_cell(const std::vector<std::string>& texts, double nll, double accuracy) {
  using namespace leakaudit;
  const metrics::NGramConfig ncfg;
  std::vector<TokenSeq> docs;
  for (const auto& t : texts) docs.push_back(ByteTokenizer::encode(t));
  const auto wanted = static_cast<std::size_t>(std::lround(accuracy * 100.0));
  std::set<std::pair<std::size_t, std::size_t>> hits;
  for (std::size_t d = 0; d < docs.size() && hits.size() < wanted; ++d) {
    for (auto s : metrics::plan_trials(docs[d].size(), kReplayStride, ncfg)) {
      if (hits.size() == wanted) break;
      hits.insert({d, s});
    }
  }
  ScriptedBackend live(docs, nll, hits, kReplayStride.window);
  Cassette cassette;
  RecordingBackend rec(live, cassette);
  for (const auto& t : texts) {
    const auto tokens = rec.tokenize(t);
    metrics::strided_nll(tokens, rec, kReplayStride);
    metrics::ngram_accuracy(tokens, rec, kReplayStride, ncfg);
  }
  return cassette;
}

}  // namespace testing_support
