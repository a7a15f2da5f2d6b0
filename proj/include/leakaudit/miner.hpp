#pragma once

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <zlib.h>

#include "leakaudit/corpus.hpp"
#include "leakaudit/error.hpp"
#include "leakaudit/http.hpp"
#include "leakaudit/util/date.hpp"
#include "leakaudit/util/fs.hpp"
#include "leakaudit/util/hash.hpp"
#include "leakaudit/util/parallel.hpp"
#include "leakaudit/util/utf8.hpp"

namespace leakaudit::miner {

inline constexpr const char* kTokenEnv = "LEAKAUDIT_GITHUB_TOKEN";
inline constexpr const char* kReferenceDataset = "reference-2022-2023";

struct MinerConfig {
  std::vector<std::string> languages{"Java", "Python"};
  long long min_stars = 100;
  Date created_from{2024, 1, 1};
  Date created_to{2024, 12, 31};
  std::optional<std::size_t> max_repos;  ///< uncapped by default
  std::string api_base = "https://api.github.com";
  std::optional<std::string> token;
  std::size_t requests_per_hour = 1800;
  int max_retries = 5;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::milliseconds max_backoff{60'000};
  std::size_t per_page = 100;
  std::uint64_t seed = 0;  ///< backoff jitter
  std::optional<std::filesystem::path> cursor_path;
  std::size_t workers = 4;

  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    if (created_to < created_from) out.push_back("miner.created_from must not be after miner.created_to");
    if (min_stars < 0) out.push_back("miner.min_stars must be >= 0");
    if (languages.empty()) out.push_back("miner.languages must not be empty");
    if (requests_per_hour == 0) out.push_back("miner.requests_per_hour must be > 0");
    if (per_page == 0 || per_page > 100) out.push_back("miner.per_page must be in 1..100");
    if (max_repos && *max_repos == 0) out.push_back("miner.max_repos must be > 0 when set");
    return out;
  }

  void validate() const {
    const auto p = problems();
    if (!p.empty()) throw Error(ErrorKind::validation, p.front());
  }
};

inline std::optional<std::string> token_from_env() {
  if (const char* v = std::getenv(kTokenEnv); v && *v) return std::string(v);
  return std::nullopt;
}

struct RepoRecord {
  std::string full_name;
  long long stars = 0;
  Date created_at;
  std::string language;
  std::string default_branch = "main";
  std::string fetched_at;  ///< date the star count was observed

  bool operator==(const RepoRecord&) const = default;
};

inline nlohmann::json to_json(const RepoRecord& r) {
  return {{"full_name", r.full_name}, {"stars", r.stars}, {"created_at", r.created_at.str()},
          {"language", r.language}, {"default_branch", r.default_branch}, {"fetched_at", r.fetched_at}};
}

inline RepoRecord repo_from_json(const nlohmann::json& j) {
  RepoRecord r;
  r.full_name = j.at("full_name").get<std::string>();
  r.stars = j.at("stars").get<long long>();
  auto d = Date::parse(j.at("created_at").get<std::string>());
  if (!d) throw Error(ErrorKind::parse, "bad created_at for " + r.full_name);
  r.created_at = *d;
  r.language = j.value("language", "");
  r.default_branch = j.value("default_branch", "main");
  r.fetched_at = j.value("fetched_at", "");
  return r;
}

inline bool same_language(const std::string& a, const std::string& b) {
  return http::lowercase(a) == http::lowercase(b);
}

inline bool satisfies(const RepoRecord& r, const MinerConfig& cfg) {
  if (r.stars < cfg.min_stars) return false;
  if (r.created_at < cfg.created_from || cfg.created_to < r.created_at) return false;
  for (const auto& l : cfg.languages) {
    if (same_language(l, r.language)) return true;
  }
  return false;
}

inline std::string url_encode(std::string_view s) {
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') out += static_cast<char>(c);
    else out += fmt::format("%{:02X}", c);
  }
  return out;
}

inline std::string search_url(const MinerConfig& cfg, const std::string& language, std::size_t page) {
  const auto q = fmt::format("language:{} stars:>={} created:{}..{}", language, cfg.min_stars,
                             cfg.created_from.str(), cfg.created_to.str());
  return fmt::format("{}/search/repositories?q={}&sort=stars&order=desc&per_page={}&page={}", cfg.api_base,
                     url_encode(q), cfg.per_page, page);
}

inline std::string archive_url(const MinerConfig& cfg, const RepoRecord& repo) {
  return fmt::format("{}/repos/{}/tarball/{}", cfg.api_base, repo.full_name, repo.default_branch);
}

/// Rate-limited, retrying GET client shared by search and fetch.
class Client {
 public:
  Client(const MinerConfig& cfg, http::Transport& transport, http::Clock& clock)
      : cfg_(cfg), transport_(transport), clock_(clock), limiter_(clock, cfg.requests_per_hour),
        rng_(cfg.seed ^ 0x6d696e6572ULL) {}

  http::Response get(const std::string& url, const std::string& accept = "application/vnd.github+json") {
    http::Request req{"GET", url, {{"Accept", accept}, {"User-Agent", "leakaudit"}}};
    if (cfg_.token) req.headers["Authorization"] = "Bearer " + *cfg_.token;
    int status = 0;
    std::string last;
    std::optional<std::chrono::milliseconds> retry_after;
    for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
      if (attempt > 0) backoff(attempt, retry_after);
      retry_after.reset();
      limiter_.acquire();
      http::Response res;
      try {
        res = transport_.send(req);
      } catch (const TransportError& e) {
        if (!e.retryable()) throw;
        last = e.what();
        status = 0;
        continue;
      }
      status = res.status;
      if (status >= 200 && status < 300) return res;
      if (status == 401) throw Error(ErrorKind::credential, "authentication failed for " + url);
      if (status == 403 || status == 429 || status >= 500) {
        if (auto ra = res.header("retry-after"); !ra.empty()) {
          try {
            retry_after = std::chrono::seconds(std::stoll(ra));
          } catch (const std::exception&) {
          }
        }
        last = fmt::format("HTTP {}", status);
        continue;
      }
      throw TransportError(fmt::format("GET {} failed with HTTP {}", url, status), status, attempt + 1, false);
    }
    throw TransportError(fmt::format("GET {} failed after {} attempts: {}", url, cfg_.max_retries + 1, last),
                         status, cfg_.max_retries + 1, true);
  }

  http::RateLimiter& limiter() { return limiter_; }

 private:
  void backoff(int attempt, std::optional<std::chrono::milliseconds> retry_after) {
    std::chrono::milliseconds wait;
    if (retry_after) {
      wait = *retry_after;
    } else {
      const double base = static_cast<double>(cfg_.initial_backoff.count()) * std::pow(2.0, attempt - 1);
      double jitter;
      {
        std::lock_guard lock(rng_mu_);
        jitter = 0.5 + 0.5 * rng_.unit();
      }
      wait = std::chrono::milliseconds(static_cast<long long>(
          std::min(base, static_cast<double>(cfg_.max_backoff.count())) * jitter));
    }
    clock_.sleep_for(wait);
  }

  const MinerConfig& cfg_;
  http::Transport& transport_;
  http::Clock& clock_;
  http::RateLimiter limiter_;
  std::mutex rng_mu_;
  util::SplitMix64 rng_;
};

struct Cursor {
  std::size_t language_index = 0;
  std::size_t page = 1;
  bool done = false;
  std::vector<RepoRecord> records;

  nlohmann::json to_json() const {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records) recs.push_back(miner::to_json(r));
    return {{"language_index", language_index}, {"page", page}, {"done", done}, {"records", recs}};
  }

  static Cursor from_json(const nlohmann::json& j) {
    Cursor c;
    c.language_index = j.at("language_index").get<std::size_t>();
    c.page = j.at("page").get<std::size_t>();
    c.done = j.value("done", false);
    for (const auto& r : j.at("records")) c.records.push_back(repo_from_json(r));
    return c;
  }
};

inline std::optional<Cursor> load_cursor(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    return Cursor::from_json(nlohmann::json::parse(util::read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, "bad cursor file " + path.string() + ": " + e.what());
  }
}

inline std::string today() {
  return Date::from_sys_days(std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now())).str();
}

/// Pages through the search endpoint per language (host label), keeping
/// records that pass the filters client-side. With a cursor path, progress
/// is saved after every page and an interrupted run resumes from it.
inline std::vector<RepoRecord> search_repositories(const MinerConfig& cfg, Client& client,
                                                   const std::string& fetch_date = today()) {
  cfg.validate();
  Cursor cursor;
  if (cfg.cursor_path) {
    if (auto c = load_cursor(*cfg.cursor_path)) cursor = std::move(*c);
  }
  std::set<std::string> seen;
  for (const auto& r : cursor.records) seen.insert(r.full_name);
  auto capped = [&] { return cfg.max_repos && cursor.records.size() >= *cfg.max_repos; };
  auto save = [&] {
    if (cfg.cursor_path) util::write_file_atomic(*cfg.cursor_path, cursor.to_json().dump() + "\n");
  };

  while (!cursor.done && !capped() && cursor.language_index < cfg.languages.size()) {
    const auto& language = cfg.languages[cursor.language_index];
    const auto res = client.get(search_url(cfg, language, cursor.page));
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(res.body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::protocol, std::string("search response is not JSON: ") + e.what());
    }
    if (!body.contains("items") || !body["items"].is_array()) {
      throw Error(ErrorKind::protocol, "search response lacks an 'items' array");
    }
    const auto& items = body["items"];
    for (const auto& item : items) {
      if (capped()) break;
      RepoRecord r;
      try {
        r.full_name = item.at("full_name").get<std::string>();
        r.stars = item.at("stargazers_count").get<long long>();
        auto d = Date::parse(item.at("created_at").get<std::string>());
        if (!d) continue;
        r.created_at = *d;
        r.language = item.value("language", nlohmann::json()).is_string() ? item["language"].get<std::string>() : "";
        r.default_branch = item.value("default_branch", std::string("main"));
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::protocol, std::string("malformed search item: ") + e.what());
      }
      r.fetched_at = fetch_date;
      if (!satisfies(r, cfg) || !seen.insert(r.full_name).second) continue;
      cursor.records.push_back(std::move(r));
    }
    if (items.size() < cfg.per_page) {
      ++cursor.language_index;
      cursor.page = 1;
    } else {
      ++cursor.page;
    }
    if (cursor.language_index >= cfg.languages.size() || capped()) cursor.done = true;
    save();
  }
  cursor.done = true;
  save();
  return cursor.records;
}

// ---- archives --------------------------------------------------------------

inline std::string gunzip(std::string_view data) {
  z_stream zs{};
  if (inflateInit2(&zs, 15 + 32) != Z_OK) throw Error(ErrorKind::ingestion, "zlib init failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  std::string out;
  char buf[1 << 15];
  int rc;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof buf;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw Error(ErrorKind::ingestion, "archive is not valid gzip data");
    }
    out.append(buf, sizeof buf - zs.avail_out);
  } while (rc != Z_STREAM_END && (zs.avail_in > 0 || zs.avail_out == 0));
  inflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error(ErrorKind::ingestion, "truncated gzip archive");
  return out;
}

struct TarEntry {
  std::string path;
  std::string content;
};

struct TarArchive {
  std::vector<TarEntry> files;
  std::string global_comment;  ///< pax "comment" (commit id in host archives)
};

namespace detail {

inline std::string field(const char* p, std::size_t n) {
  std::size_t len = 0;
  while (len < n && p[len] != '\0') ++len;
  return std::string(p, len);
}

inline std::size_t octal(const char* p, std::size_t n) {
  std::size_t v = 0;
  for (std::size_t i = 0; i < n && p[i]; ++i) {
    if (p[i] == ' ') continue;
    if (p[i] < '0' || p[i] > '7') throw Error(ErrorKind::ingestion, "bad tar header number");
    v = v * 8 + static_cast<std::size_t>(p[i] - '0');
  }
  return v;
}

inline std::map<std::string, std::string> pax_records(std::string_view data) {
  std::map<std::string, std::string> out;
  while (!data.empty()) {
    const auto sp = data.find(' ');
    if (sp == std::string_view::npos) break;
    const auto len = std::stoul(std::string(data.substr(0, sp)));
    if (len == 0 || len > data.size()) break;
    auto rec = data.substr(sp + 1, len - sp - 2);  // drop trailing newline
    if (auto eq = rec.find('='); eq != std::string_view::npos) {
      out[std::string(rec.substr(0, eq))] = std::string(rec.substr(eq + 1));
    }
    data.remove_prefix(len);
  }
  return out;
}

}  // namespace detail

/// Regular files of a ustar/pax archive.
inline TarArchive parse_tar(std::string_view data) {
  TarArchive out;
  std::string next_path;
  std::size_t pos = 0;
  while (pos + 512 <= data.size()) {
    const char* h = data.data() + pos;
    if (std::all_of(h, h + 512, [](char c) { return c == '\0'; })) break;
    const auto size = detail::octal(h + 124, 12);
    const char type = h[156];
    std::string name = detail::field(h, 100);
    if (std::memcmp(h + 257, "ustar", 5) == 0) {
      const auto prefix = detail::field(h + 345, 155);
      if (!prefix.empty()) name = prefix + "/" + name;
    }
    pos += 512;
    if (pos + size > data.size()) throw Error(ErrorKind::ingestion, "truncated tar archive");
    const auto body = data.substr(pos, size);
    pos += (size + 511) / 512 * 512;
    if (type == 'g') {
      auto rec = detail::pax_records(body);
      if (rec.count("comment")) out.global_comment = rec["comment"];
    } else if (type == 'x') {
      auto rec = detail::pax_records(body);
      if (rec.count("path")) next_path = rec["path"];
    } else if (type == 'L') {
      next_path = detail::field(body.data(), body.size());
    } else if (type == '0' || type == '\0') {
      out.files.push_back({next_path.empty() ? name : next_path, std::string(body)});
      next_path.clear();
    } else {
      next_path.clear();
    }
  }
  return out;
}

inline const std::map<std::string, std::vector<std::string>>& extension_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"java", {".java"}},
      {"python", {".py"}},
      {"c++", {".cpp", ".cc", ".cxx", ".hpp", ".hh", ".hxx", ".h"}},
      {"c", {".c", ".h"}},
  };
  return table;
}

/// Language whose extension list contains the path's extension.
inline std::optional<std::string> language_for(const std::string& path, const std::vector<std::string>& languages) {
  const auto ext = http::lowercase(std::filesystem::path(path).extension().string());
  for (const auto& lang : languages) {
    auto it = extension_table().find(http::lowercase(lang));
    if (it == extension_table().end()) continue;
    if (std::find(it->second.begin(), it->second.end(), ext) != it->second.end()) return http::lowercase(lang);
  }
  return std::nullopt;
}

struct FetchStats {
  std::size_t files_seen = 0;
  std::size_t files_matched = 0;
  std::size_t files_skipped_binary = 0;
};

/// Downloads the repository archive and keeps UTF-8 files whose extension
/// matches one of `languages`.
inline std::vector<Document> fetch_repo_files(const MinerConfig& cfg, Client& client, const RepoRecord& repo,
                                              const std::vector<std::string>& languages,
                                              const std::string& dataset, FetchStats* stats = nullptr) {
  const auto res = client.get(archive_url(cfg, repo), "application/octet-stream");
  const auto tar = parse_tar(gunzip(res.body));
  FetchStats local;
  std::vector<Document> docs;
  for (const auto& f : tar.files) {
    ++local.files_seen;
    // Host archives wrap everything in "<owner>-<name>-<sha>/".
    const auto slash = f.path.find('/');
    const std::string top = slash == std::string::npos ? "" : f.path.substr(0, slash);
    const std::string rel = slash == std::string::npos ? f.path : f.path.substr(slash + 1);
    if (rel.empty()) continue;
    auto lang = language_for(rel, languages);
    if (!lang) continue;
    if (!util::is_valid_utf8(f.content)) {
      ++local.files_skipped_binary;
      continue;
    }
    ++local.files_matched;
    std::string commit = tar.global_comment;
    if (commit.empty()) {
      const auto dash = top.rfind('-');
      commit = dash == std::string::npos ? top : top.substr(dash + 1);
    }
    Document d;
    d.id = repo.full_name + ":" + rel;
    d.dataset = dataset;
    d.language = *lang;
    d.path = rel;
    d.content = f.content;
    d.repo = repo.full_name;
    if (!commit.empty()) d.commit = commit;
    d.created_at = repo.created_at;
    docs.push_back(std::move(d));
  }
  if (stats) *stats = local;
  return docs;
}

struct MiningResult {
  std::vector<RepoRecord> repos;
  Corpus corpus;
  std::size_t repos_with_files = 0;  ///< repos that had at least one matching file
  FetchStats totals;
};

/// Search, then fetch every repository's files on up to cfg.workers threads.
inline MiningResult mine(const MinerConfig& cfg, http::Transport& transport, http::Clock& clock,
                         const std::string& dataset, const std::string& fetch_date = today()) {
  Client client(cfg, transport, clock);
  MiningResult out;
  out.repos = search_repositories(cfg, client, fetch_date);
  std::vector<std::vector<Document>> per_repo(out.repos.size());
  std::vector<FetchStats> stats(out.repos.size());
  util::parallel_for(out.repos.size(), cfg.workers, [&](std::size_t i) {
    per_repo[i] = fetch_repo_files(cfg, client, out.repos[i], cfg.languages, dataset, &stats[i]);
  });
  out.corpus.dataset = dataset;
  for (std::size_t i = 0; i < per_repo.size(); ++i) {
    if (!per_repo[i].empty()) ++out.repos_with_files;
    out.totals.files_seen += stats[i].files_seen;
    out.totals.files_matched += stats[i].files_matched;
    out.totals.files_skipped_binary += stats[i].files_skipped_binary;
    for (auto& d : per_repo[i]) out.corpus.documents.push_back(std::move(d));
  }
  normalize(out.corpus);
  return out;
}

/// Same filters over the 2022-2023 creation window, tagged for cross-filtering.
inline MiningResult build_reference_corpus(MinerConfig cfg, http::Transport& transport, http::Clock& clock,
                                           const std::string& fetch_date = today()) {
  cfg.created_from = Date{2022, 1, 1};
  cfg.created_to = Date{2023, 12, 31};
  if (cfg.cursor_path) cfg.cursor_path = cfg.cursor_path->string() + ".reference";
  return mine(cfg, transport, clock, kReferenceDataset, fetch_date);
}

}  // namespace leakaudit::miner
