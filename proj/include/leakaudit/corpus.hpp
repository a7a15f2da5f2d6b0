#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "leakaudit/error.hpp"
#include "leakaudit/util/date.hpp"
#include "leakaudit/util/fs.hpp"
#include "leakaudit/util/hash.hpp"
#include "leakaudit/util/jsonl.hpp"
#include "leakaudit/util/utf8.hpp"

namespace leakaudit {

/// One ground-truth or mined source file with its provenance.
struct Document {
  std::string id;
  std::string dataset;
  std::string language;
  std::string path;
  std::string content;
  std::optional<std::string> repo;
  std::optional<std::string> commit;
  std::optional<Date> created_at;

  bool operator==(const Document&) const = default;
};

/// Documents are kept sorted by id so downstream aggregation is stable.
struct Corpus {
  std::string dataset;
  std::vector<Document> documents;

  std::size_t size() const { return documents.size(); }
  bool empty() const { return documents.empty(); }

  const Document* find(std::string_view id) const {
    auto it = std::lower_bound(
        documents.begin(), documents.end(), id,
        [](const Document& d, std::string_view key) { return d.id < key; });
    return it != documents.end() && it->id == id ? &*it : nullptr;
  }
};

/// Sorts by id and rejects duplicate ids.
inline void normalize(Corpus& corpus) {
  std::sort(corpus.documents.begin(), corpus.documents.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  auto dup = std::adjacent_find(
      corpus.documents.begin(), corpus.documents.end(),
      [](const Document& a, const Document& b) { return a.id == b.id; });
  if (dup != corpus.documents.end()) {
    throw Error(ErrorKind::validation, "duplicate document id: " + dup->id);
  }
}

/// Undated documents sort as newest; equal dates fall back to the id.
inline bool older_than(const Document& a, const Document& b) {
  if (a.created_at && b.created_at) {
    if (*a.created_at != *b.created_at) return *a.created_at < *b.created_at;
  } else if (a.created_at || b.created_at) {
    return a.created_at.has_value();
  }
  return a.id < b.id;
}

namespace detail {

inline std::optional<std::string> optional_string(const nlohmann::json& j,
                                                  const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorKind::parse, std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

inline std::string required_string(const nlohmann::json& j, const char* key) {
  auto v = optional_string(j, key);
  if (!v) throw Error(ErrorKind::parse, std::string("missing field '") + key + "'");
  return *v;
}

}  // namespace detail

/// Manifest fields of a document as JSON; content is included on request.
inline nlohmann::json to_json(const Document& doc, bool with_content) {
  nlohmann::json j{{"id", doc.id},
                   {"dataset", doc.dataset},
                   {"language", doc.language},
                   {"path", doc.path},
                   {"repo", doc.repo ? nlohmann::json(*doc.repo) : nlohmann::json()},
                   {"commit", doc.commit ? nlohmann::json(*doc.commit) : nlohmann::json()},
                   {"created_at", doc.created_at ? nlohmann::json(doc.created_at->str())
                                                 : nlohmann::json()}};
  if (with_content) j["content"] = doc.content;
  return j;
}

inline Document document_from_json(const nlohmann::json& j) {
  Document doc;
  doc.id = detail::required_string(j, "id");
  doc.dataset = detail::required_string(j, "dataset");
  doc.language = detail::required_string(j, "language");
  doc.path = detail::required_string(j, "path");
  doc.repo = detail::optional_string(j, "repo");
  doc.commit = detail::optional_string(j, "commit");
  if (auto created = detail::optional_string(j, "created_at")) {
    doc.created_at = Date::parse(*created);
    if (!doc.created_at) {
      throw Error(ErrorKind::parse, "invalid created_at date: " + *created);
    }
  }
  if (auto content = detail::optional_string(j, "content")) doc.content = *content;
  return doc;
}

inline std::string corpus_label(const std::vector<Document>& docs) {
  if (docs.empty()) return "";
  const auto& first = docs.front().dataset;
  for (const auto& d : docs) {
    if (d.dataset != first) return "mixed";
  }
  return first;
}

/// Loads a JSONL manifest, reading each entry's content from `root`.
inline Corpus load_manifest(const std::filesystem::path& manifest_path,
                            const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::exists(manifest_path)) {
    throw Error(ErrorKind::ingestion, "manifest not found: " + manifest_path.string());
  }
  const auto text = util::read_file(manifest_path);
  const auto canonical_root = fs::weakly_canonical(root);
  Corpus corpus;
  std::size_t line_no = 0;
  for (auto line : util::split_lines(text)) {
    ++line_no;
    if (util::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::parse,
                  with_line("malformed manifest line: " + std::string(e.what()), line_no));
    }
    Document doc;
    try {
      if (!j.is_object()) throw Error(ErrorKind::parse, "manifest entry is not an object");
      j.erase("content");
      doc = document_from_json(j);
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, with_line(e.what(), line_no));
    }
    const auto full = fs::weakly_canonical(canonical_root / doc.path);
    auto rel = full.lexically_relative(canonical_root);
    if (rel.empty() || *rel.begin() == "..") {
      throw Error(ErrorKind::validation,
                  with_line("path escapes corpus root: " + doc.path, line_no));
    }
    if (!fs::is_regular_file(full)) {
      throw Error(ErrorKind::ingestion, with_line("missing file: " + doc.path, line_no));
    }
    doc.content = util::read_file(full);
    if (!util::is_valid_utf8(doc.content)) {
      throw Error(ErrorKind::ingestion,
                  with_line("file is not valid UTF-8: " + doc.path, line_no));
    }
    corpus.documents.push_back(std::move(doc));
  }
  corpus.dataset = corpus_label(corpus.documents);
  normalize(corpus);
  return corpus;
}

/// Self-contained corpus snapshot (manifest fields plus content).
inline void save_corpus(const std::filesystem::path& path, const Corpus& corpus,
                        const std::optional<util::ArtifactMeta>& meta = std::nullopt) {
  std::vector<nlohmann::json> records;
  records.reserve(corpus.size());
  for (const auto& d : corpus.documents) records.push_back(to_json(d, true));
  util::write_jsonl(path, meta, records);
}

inline Corpus load_corpus(const std::filesystem::path& path) {
  auto file = util::read_jsonl(path);
  Corpus corpus;
  for (const auto& r : file.records) corpus.documents.push_back(document_from_json(r));
  corpus.dataset = corpus_label(corpus.documents);
  normalize(corpus);
  return corpus;
}

/// Keeps the oldest document of every duplicate group. Documents outside all
/// groups pass through unchanged. Overlapping groups are merged.
inline Corpus keep_oldest(const Corpus& corpus,
                          const std::vector<std::set<std::string>>& groups) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    index.emplace(corpus.documents[i].id, i);
  }
  // union-find over document indices
  std::vector<std::size_t> parent(corpus.documents.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> grouped(corpus.documents.size(), false);
  for (const auto& group : groups) {
    std::optional<std::size_t> anchor;
    for (const auto& id : group) {
      auto it = index.find(id);
      if (it == index.end()) {
        throw Error(ErrorKind::validation, "duplicate group references unknown id: " + id);
      }
      grouped[it->second] = true;
      if (anchor) parent[find(it->second)] = find(*anchor);
      else anchor = it->second;
    }
  }
  std::map<std::size_t, std::size_t> best;  // root -> oldest member
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    if (!grouped[i]) continue;
    const auto root = find(i);
    auto [it, inserted] = best.emplace(root, i);
    if (!inserted && older_than(corpus.documents[i], corpus.documents[it->second])) {
      it->second = i;
    }
  }
  Corpus out{corpus.dataset, {}};
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    if (!grouped[i] || best.at(find(i)) == i) out.documents.push_back(corpus.documents[i]);
  }
  return out;
}

/// Draws min(n, available) documents per language without replacement.
inline Corpus sample(const Corpus& corpus, std::size_t n_per_language,
                     std::uint64_t seed) {
  if (n_per_language < 1) {
    throw Error(ErrorKind::validation, "n_per_language must be at least 1");
  }
  std::map<std::string, std::vector<std::size_t>> by_language;
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    by_language[corpus.documents[i].language].push_back(i);
  }
  std::vector<std::size_t> chosen;
  for (auto& [language, members] : by_language) {
    // Per-language stream so adding a language does not perturb the others.
    util::SplitMix64 rng(seed ^ util::hash_bytes(language));
    const std::size_t take = std::min(n_per_language, members.size());
    for (std::size_t i = 0; i < take; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(members.size() - i));
      std::swap(members[i], members[j]);
    }
    chosen.insert(chosen.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(take));
  }
  std::sort(chosen.begin(), chosen.end());
  Corpus out{corpus.dataset, {}};
  out.documents.reserve(chosen.size());
  for (auto i : chosen) out.documents.push_back(corpus.documents[i]);
  return out;
}

/// Concatenates corpora, failing on id collisions.
inline Corpus merge(const std::vector<Corpus>& parts) {
  Corpus out;
  for (const auto& p : parts) {
    out.documents.insert(out.documents.end(), p.documents.begin(), p.documents.end());
  }
  out.dataset = corpus_label(out.documents);
  normalize(out);
  return out;
}

}  // namespace leakaudit
