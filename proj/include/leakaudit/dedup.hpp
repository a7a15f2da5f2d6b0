#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leakaudit/corpus.hpp"
#include "leakaudit/error.hpp"
#include "leakaudit/util/hash.hpp"
#include "leakaudit/util/jsonl.hpp"
#include "leakaudit/util/parallel.hpp"

namespace leakaudit::dedup {

/// Sorted, deduplicated hashes of w-token windows.
struct ShingleSet {
  std::vector<std::uint64_t> shingles;
  std::size_t w = 1;

  std::size_t size() const { return shingles.size(); }
  bool operator==(const ShingleSet&) const = default;
};

struct Signature {
  std::vector<std::uint64_t> mins;
  std::uint64_t seed = 0;

  std::size_t k() const { return mins.size(); }
  bool comparable(const Signature& other) const {
    return k() == other.k() && seed == other.seed;
  }
  bool operator==(const Signature&) const = default;
};

struct DedupConfig {
  double overlap_threshold = 0.85;
  std::size_t k = 128;
  std::size_t bands = 32;
  std::size_t rows = 4;
  std::size_t w = 8;
  std::uint64_t seed = 0x5eed;

  void validate() const {
    if (bands * rows != k) {
      throw Error(ErrorKind::validation,
                  "dedup config: bands x rows (" + std::to_string(bands) + " x " +
                      std::to_string(rows) + ") must equal k (" + std::to_string(k) + ")");
    }
    if (!(overlap_threshold > 0.0 && overlap_threshold <= 1.0)) {
      throw Error(ErrorKind::validation, "dedup config: overlap_threshold must be in (0, 1]");
    }
    if (w < 1) throw Error(ErrorKind::validation, "dedup config: w must be at least 1");
  }
};

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

inline std::uint64_t hash_window(std::span<const std::string_view> window) {
  std::uint64_t state = util::kFnvOffset;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) state = util::fnv1a64(" ", state);
    state = util::fnv1a64(window[i], state);
  }
  return util::mix64(state);
}

}  // namespace detail

/// Hashes every contiguous window of `w` whitespace-delimited tokens.
/// Documents with fewer than `w` tokens become one shingle.
inline ShingleSet shingle(std::string_view content, std::size_t w) {
  if (w < 1) throw Error(ErrorKind::validation, "shingle width must be at least 1");
  if (content.empty()) throw Error(ErrorKind::validation, "cannot shingle empty content");
  const auto tokens = detail::split_whitespace(content);
  ShingleSet set;
  set.w = w;
  if (tokens.empty()) {
    set.shingles.push_back(util::hash_bytes(content));
  } else if (tokens.size() < w) {
    set.shingles.push_back(detail::hash_window(tokens));
  } else {
    set.shingles.reserve(tokens.size() - w + 1);
    const std::span<const std::string_view> all(tokens);
    for (std::size_t i = 0; i + w <= tokens.size(); ++i) {
      set.shingles.push_back(detail::hash_window(all.subspan(i, w)));
    }
  }
  std::sort(set.shingles.begin(), set.shingles.end());
  set.shingles.erase(std::unique(set.shingles.begin(), set.shingles.end()),
                     set.shingles.end());
  return set;
}

/// Key of the j-th permutation-style hash for a given seed.
constexpr std::uint64_t permutation_key(std::uint64_t seed, std::size_t j) {
  return util::mix64(seed ^ util::mix64(0x9e3779b97f4a7c15ULL * (j + 1)));
}

constexpr std::uint64_t permutation_hash(std::uint64_t key, std::uint64_t x) {
  return util::mix64(x ^ key);
}

inline Signature signature(const ShingleSet& set, std::size_t k, std::uint64_t seed) {
  if (set.shingles.empty()) {
    throw Error(ErrorKind::validation, "cannot sign an empty shingle set");
  }
  Signature sig;
  sig.seed = seed;
  sig.mins.assign(k, UINT64_MAX);
  for (std::size_t j = 0; j < k; ++j) {
    const auto key = permutation_key(seed, j);
    auto& m = sig.mins[j];
    for (auto x : set.shingles) m = std::min(m, permutation_hash(key, x));
  }
  return sig;
}

inline double estimate_jaccard(const Signature& a, const Signature& b) {
  if (!a.comparable(b)) {
    throw Error(ErrorKind::comparability,
                "signatures differ in (k, seed): (" + std::to_string(a.k()) + ", " +
                    std::to_string(a.seed) + ") vs (" + std::to_string(b.k()) + ", " +
                    std::to_string(b.seed) + ")");
  }
  if (a.k() == 0) return 0.0;
  std::size_t equal = 0;
  for (std::size_t j = 0; j < a.k(); ++j) equal += a.mins[j] == b.mins[j];
  return static_cast<double>(equal) / static_cast<double>(a.k());
}

using SignedDoc = std::pair<std::string, Signature>;
using IdPair = std::pair<std::string, std::string>;

/// Band-bucket index over signatures.
class LshIndex {
 public:
  explicit LshIndex(const DedupConfig& cfg) : cfg_(cfg), tables_(cfg.bands) {
    cfg_.validate();
  }

  void insert(std::size_t item, const Signature& sig) {
    check(sig);
    for (std::size_t b = 0; b < cfg_.bands; ++b) tables_[b][band_key(sig, b)].push_back(item);
  }

  /// Items sharing at least one band bucket with `sig`, sorted.
  std::vector<std::size_t> candidates(const Signature& sig) const {
    check(sig);
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < cfg_.bands; ++b) {
      auto it = tables_[b].find(band_key(sig, b));
      if (it != tables_[b].end()) out.insert(out.end(), it->second.begin(), it->second.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Every colliding pair (i < j) across all bands.
  std::set<std::pair<std::size_t, std::size_t>> colliding_pairs() const {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& table : tables_) {
      for (const auto& [key, items] : table) {
        for (std::size_t x = 0; x < items.size(); ++x) {
          for (std::size_t y = x + 1; y < items.size(); ++y) {
            pairs.emplace(std::min(items[x], items[y]), std::max(items[x], items[y]));
          }
        }
      }
    }
    return pairs;
  }

 private:
  void check(const Signature& sig) const {
    if (sig.k() != cfg_.k) {
      throw Error(ErrorKind::comparability,
                  "signature has k=" + std::to_string(sig.k()) + ", index expects " +
                      std::to_string(cfg_.k));
    }
  }

  std::uint64_t band_key(const Signature& sig, std::size_t band) const {
    std::uint64_t h = util::mix64(band + 1);
    for (std::size_t r = 0; r < cfg_.rows; ++r) {
      h = util::mix64(h ^ sig.mins[band * cfg_.rows + r]);
    }
    return h;
  }

  DedupConfig cfg_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::size_t>>> tables_;
};

/// Pairs that collide in a band and whose estimated Jaccard reaches the
/// threshold. Pair members are ordered (first < second).
inline std::set<IdPair> find_near_duplicates(const std::vector<SignedDoc>& signatures,
                                             const DedupConfig& cfg) {
  cfg.validate();
  LshIndex index(cfg);
  for (std::size_t i = 0; i < signatures.size(); ++i) {
    if (!signatures[i].second.comparable(signatures.front().second)) {
      throw Error(ErrorKind::comparability, "signature of '" + signatures[i].first +
                                                "' is not comparable with the rest");
    }
    index.insert(i, signatures[i].second);
  }
  std::set<IdPair> result;
  for (auto [i, j] : index.colliding_pairs()) {
    const auto& a = signatures[i];
    const auto& b = signatures[j];
    if (estimate_jaccard(a.second, b.second) >= cfg.overlap_threshold) {
      result.emplace(std::min(a.first, b.first), std::max(a.first, b.first));
    }
  }
  return result;
}

/// Optional on-disk cache of signatures keyed by (id, content hash, k, seed, w).
class SignatureCache {
 public:
  static SignatureCache load(const std::filesystem::path& path) {
    SignatureCache cache;
    if (!std::filesystem::exists(path)) return cache;
    for (const auto& r : util::read_jsonl(path).records) {
      Entry e;
      e.content_hash = r.at("content_hash").get<std::string>();
      e.w = r.at("w").get<std::size_t>();
      e.sig.seed = r.at("seed").get<std::uint64_t>();
      const auto k = r.at("k").get<std::size_t>();
      for (const auto& m : r.at("mins")) {
        std::uint64_t v = 0;
        if (!util::parse_hex(m.get<std::string>(), v)) {
          throw Error(ErrorKind::parse, "signature cache: bad hex minimum");
        }
        e.sig.mins.push_back(v);
      }
      if (e.sig.mins.size() != k) {
        throw Error(ErrorKind::parse, "signature cache: mins length differs from k");
      }
      cache.entries_[r.at("id").get<std::string>()] = std::move(e);
    }
    return cache;
  }

  void save(const std::filesystem::path& path) const {
    std::vector<util::json> records;
    for (const auto& [id, e] : entries_) {
      util::json mins = util::json::array();
      for (auto m : e.sig.mins) mins.push_back(util::to_hex(m));
      records.push_back({{"id", id},
                         {"k", e.sig.k()},
                         {"seed", e.sig.seed},
                         {"w", e.w},
                         {"content_hash", e.content_hash},
                         {"mins", std::move(mins)}});
    }
    util::write_jsonl(path, std::nullopt, records);
  }

  std::optional<Signature> lookup(const Document& doc, const DedupConfig& cfg) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(doc.id);
    if (it == entries_.end()) return std::nullopt;
    const auto& e = it->second;
    if (e.content_hash != content_key(doc) || e.w != cfg.w || e.sig.k() != cfg.k ||
        e.sig.seed != cfg.seed) {
      return std::nullopt;
    }
    return e.sig;
  }

  void store(const Document& doc, const DedupConfig& cfg, const Signature& sig) {
    std::lock_guard lock(mu_);
    entries_[doc.id] = Entry{content_key(doc), cfg.w, sig};
  }

  std::size_t size() const { return entries_.size(); }

  SignatureCache() = default;
  SignatureCache(SignatureCache&& other) noexcept : entries_(std::move(other.entries_)) {}
  SignatureCache& operator=(SignatureCache&& other) noexcept {
    entries_ = std::move(other.entries_);
    return *this;
  }

 private:
  struct Entry {
    std::string content_hash;
    std::size_t w = 0;
    Signature sig;
  };

  static std::string content_key(const Document& doc) {
    return util::to_hex(util::hash_bytes(doc.content));
  }

  std::map<std::string, Entry> entries_;
  mutable std::mutex mu_;
};

inline std::vector<SignedDoc> compute_signatures(const Corpus& corpus, const DedupConfig& cfg,
                                                 std::size_t workers = 1,
                                                 SignatureCache* cache = nullptr) {
  std::vector<SignedDoc> out(corpus.size());
  util::parallel_for(corpus.size(), workers, [&](std::size_t i) {
    const auto& doc = corpus.documents[i];
    std::optional<Signature> sig;
    if (cache) sig = cache->lookup(doc, cfg);
    if (!sig) {
      sig = signature(shingle(doc.content, cfg.w), cfg.k, cfg.seed);
      if (cache) cache->store(doc, cfg, *sig);
    }
    out[i] = {doc.id, std::move(*sig)};
  });
  return out;
}

/// Groups ids into connected components of the pair graph; singletons omitted.
inline std::vector<std::set<std::string>> connected_components(const std::set<IdPair>& pairs) {
  std::map<std::string, std::string> parent;
  auto find = [&](const std::string& x) -> std::string {
    std::string root = x;
    while (parent.at(root) != root) root = parent.at(root);
    std::string cur = x;
    while (parent.at(cur) != root) {
      auto next = parent.at(cur);
      parent[cur] = root;
      cur = next;
    }
    return root;
  };
  for (const auto& [a, b] : pairs) {
    parent.emplace(a, a);
    parent.emplace(b, b);
    auto ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::string, std::set<std::string>> groups;
  for (const auto& [id, p] : parent) groups[find(id)].insert(id);
  std::vector<std::set<std::string>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

struct OverlapFilterResult {
  Corpus kept;
  std::vector<std::set<std::string>> components;
  std::set<IdPair> pairs;
};

/// Keeps one document (the oldest) per near-duplicate component.
inline OverlapFilterResult apply_overlap_filter_detailed(const Corpus& corpus,
                                                         const DedupConfig& cfg,
                                                         std::size_t workers = 1,
                                                         SignatureCache* cache = nullptr) {
  cfg.validate();
  if (corpus.empty()) throw Error(ErrorKind::validation, "overlap filter needs a non-empty corpus");
  OverlapFilterResult result;
  result.pairs = find_near_duplicates(compute_signatures(corpus, cfg, workers, cache), cfg);
  result.components = connected_components(result.pairs);
  result.kept = keep_oldest(corpus, result.components);
  return result;
}

inline Corpus apply_overlap_filter(const Corpus& corpus, const DedupConfig& cfg) {
  return apply_overlap_filter_detailed(corpus, cfg).kept;
}

struct CrossMatch {
  std::string id;
  std::string reference_id;
  double estimate = 0.0;
};

struct RepoOverlap {
  std::size_t files = 0;
  std::size_t removed = 0;
};

struct CrossFilterResult {
  Corpus kept;
  std::vector<CrossMatch> removed;
  /// Per-repository file counts; a repository with removed > 0 would be
  /// dropped entirely under repository-granularity filtering.
  std::map<std::string, RepoOverlap> repos;
};

/// Removes new documents whose estimated overlap with any reference document
/// reaches the threshold. The best-matching reference is reported.
inline CrossFilterResult cross_filter_detailed(const Corpus& new_corpus, const Corpus& reference,
                                               const DedupConfig& cfg, std::size_t workers = 1,
                                               SignatureCache* cache = nullptr) {
  cfg.validate();
  if (new_corpus.empty() || reference.empty()) {
    throw Error(ErrorKind::validation, "cross filter needs two non-empty corpora");
  }
  const auto ref_sigs = compute_signatures(reference, cfg, workers, cache);
  const auto new_sigs = compute_signatures(new_corpus, cfg, workers, cache);
  LshIndex index(cfg);
  for (std::size_t i = 0; i < ref_sigs.size(); ++i) index.insert(i, ref_sigs[i].second);

  CrossFilterResult result;
  result.kept.dataset = new_corpus.dataset;
  for (std::size_t i = 0; i < new_sigs.size(); ++i) {
    const auto& doc = new_corpus.documents[i];
    std::optional<CrossMatch> match;
    for (auto r : index.candidates(new_sigs[i].second)) {
      const double est = estimate_jaccard(new_sigs[i].second, ref_sigs[r].second);
      if (est >= cfg.overlap_threshold && (!match || est > match->estimate)) {
        match = CrossMatch{doc.id, ref_sigs[r].first, est};
      }
    }
    auto& repo = result.repos[doc.repo.value_or("")];
    ++repo.files;
    if (match) {
      ++repo.removed;
      result.removed.push_back(*match);
    } else {
      result.kept.documents.push_back(doc);
    }
  }
  return result;
}

inline Corpus cross_filter(const Corpus& new_corpus, const Corpus& reference,
                           const DedupConfig& cfg) {
  return cross_filter_detailed(new_corpus, reference, cfg).kept;
}

}  // namespace leakaudit::dedup
