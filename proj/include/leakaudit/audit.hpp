#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "leakaudit/analysis.hpp"
#include "leakaudit/backend.hpp"
#include "leakaudit/corpus.hpp"
#include "leakaudit/dedup.hpp"
#include "leakaudit/error.hpp"
#include "leakaudit/http.hpp"
#include "leakaudit/membership.hpp"
#include "leakaudit/metrics.hpp"
#include "leakaudit/miner.hpp"
#include "leakaudit/reference_lm.hpp"
#include "leakaudit/remote.hpp"
#include "leakaudit/toml_lite.hpp"
#include "leakaudit/util/csv.hpp"
#include "leakaudit/util/fs.hpp"
#include "leakaudit/util/hash.hpp"
#include "leakaudit/util/jsonl.hpp"

namespace leakaudit::audit {

namespace fs = std::filesystem;
using nlohmann::json;

/// Validation failure listing every problem found.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> problems)
      : Error(ErrorKind::validation, summary(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string summary(const std::vector<std::string>& p) {
    std::string s = fmt::format("invalid configuration ({} problem{})", p.size(), p.size() == 1 ? "" : "s");
    for (const auto& x : p) s += "; " + x;
    return s;
  }

  std::vector<std::string> problems_;
};

struct BackendSettings {
  std::string kind = "reference";  ///< "reference" or "remote"
  std::string url;
  std::vector<fs::path> train;
  std::size_t order = 5;
  std::size_t window = 2048;
  std::string name;
};

struct MineSettings {
  miner::MinerConfig config;
  std::optional<fs::path> fixtures;
  std::optional<fs::path> record;
  std::string dataset = "new-repos-2024";
  bool reference = false;
  std::string fetch_date;  ///< empty means today
};

struct AuditConfig {
  json tree;  ///< effective config after flag overrides
  fs::path base_dir;

  std::vector<fs::path> manifests;
  std::size_t sample_per_language = 0;
  BackendSettings backend;
  metrics::StrideConfig stride{0, 512};
  metrics::NGramConfig ngram;
  dedup::DedupConfig dedup;
  bool include_mined = false;
  std::vector<std::string> cross_filter;
  std::vector<fs::path> reference_manifests;
  std::vector<fs::path> membership_indexes;
  MineSettings mine;
  std::vector<fs::path> extra_summaries;
  std::optional<fs::path> models;
  double reference_parameters = 6.0;
  double reference_budget = 1.0;
  fs::path out = "out";
  std::uint64_t seed = 0;
  std::size_t parallelism = 1;

  /// Hash of the effective config without output location and worker count,
  /// which do not change results.
  std::string hash() const {
    json h = tree;
    h.erase("out");
    h.erase("parallelism");
    return util::to_hex(util::fnv1a64(h.dump()));
  }

  util::ArtifactMeta meta(const std::string& stage) const { return {stage, hash(), seed}; }
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<fs::path> out;
  std::optional<std::string> backend_url;
  std::optional<std::size_t> parallelism;
};

namespace detail {

class Reader {
 public:
  Reader(const json& root, const fs::path& base, std::vector<std::string>& problems)
      : root_(root), base_(base), problems_(problems) {}

  const json* table(const std::string& name) {
    known_[""].insert(name);
    if (!root_.contains(name)) return nullptr;
    if (!root_[name].is_object()) {
      problems_.push_back("[" + name + "] must be a table");
      return nullptr;
    }
    return &root_[name];
  }

  template <typename T>
  void get(const json* t, const std::string& section, const std::string& key, T& out) {
    known_[section].insert(key);
    const json& src = section.empty() ? root_ : (t ? *t : null_);
    if (!src.is_object() || !src.contains(key)) return;
    const auto& v = src[key];
    const auto where = section.empty() ? key : section + "." + key;
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) return bad(where, "a boolean");
      out = v.get<bool>();
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) return bad(where, "a string");
      out = v.get<std::string>();
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) return bad(where, "a number");
      out = v.get<T>();
    } else if constexpr (std::is_integral_v<T> && std::is_unsigned_v<T>) {
      if (!v.is_number_integer() || v.get<long long>() < 0) return bad(where, "a non-negative integer");
      out = static_cast<T>(v.get<long long>());
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) return bad(where, "an integer");
      out = v.get<T>();
    } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
      if (!v.is_array()) return bad(where, "an array of strings");
      out.clear();
      for (const auto& x : v) {
        if (!x.is_string()) return bad(where, "an array of strings");
        out.push_back(x.get<std::string>());
      }
    }
  }

  void path(const json* t, const std::string& section, const std::string& key, std::optional<fs::path>& out) {
    std::string s;
    get(t, section, key, s);
    if (!s.empty()) out = resolve(s);
  }

  void paths(const json* t, const std::string& section, const std::string& key, std::vector<fs::path>& out) {
    std::vector<std::string> raw;
    get(t, section, key, raw);
    for (const auto& s : raw) out.push_back(resolve(s));
  }

  fs::path resolve(const std::string& s) const {
    fs::path p(s);
    return p.is_absolute() ? p : (base_ / p).lexically_normal();
  }

  void unknown_keys() {
    for (const auto& [k, v] : root_.items()) {
      if (!known_[""].count(k)) problems_.push_back("unknown key '" + k + "'");
      if (v.is_object() && known_[""].count(k)) {
        for (const auto& [k2, v2] : v.items()) {
          if (!known_[k].count(k2)) problems_.push_back("unknown key '" + k + "." + k2 + "'");
        }
      }
    }
  }

 private:
  void bad(const std::string& where, const char* what) { problems_.push_back(where + " must be " + what); }

  const json& root_;
  fs::path base_;
  std::vector<std::string>& problems_;
  std::map<std::string, std::set<std::string>> known_;
  const json null_;
};

inline void need_file(const fs::path& p, const std::string& what, std::vector<std::string>& problems) {
  if (!fs::exists(p)) problems.push_back(what + " not found: " + p.string());
}

}  // namespace detail

/// Parses and checks a config tree. Every problem is collected before
/// anything is thrown.
inline AuditConfig config_from_json(json tree, const fs::path& base_dir, const Overrides& overrides = {}) {
  if (!tree.is_object()) throw ConfigError({"configuration root must be a table"});
  if (overrides.seed) tree["seed"] = *overrides.seed;
  if (overrides.out) tree["out"] = fs::absolute(*overrides.out).string();
  if (overrides.parallelism) tree["parallelism"] = *overrides.parallelism;
  if (overrides.backend_url) {
    if (!tree.contains("backend") || !tree["backend"].is_object()) tree["backend"] = json::object();
    tree["backend"]["kind"] = "remote";
    tree["backend"]["url"] = *overrides.backend_url;
  }

  AuditConfig cfg;
  cfg.tree = tree;
  cfg.base_dir = base_dir;
  std::vector<std::string> problems;
  detail::Reader r(cfg.tree, base_dir, problems);

  std::string out = "out";
  r.get(nullptr, "", "out", out);
  cfg.out = r.resolve(out);
  r.get(nullptr, "", "seed", cfg.seed);
  r.get(nullptr, "", "parallelism", cfg.parallelism);
  if (cfg.parallelism == 0) problems.push_back("parallelism must be >= 1");

  const auto* corpus = r.table("corpus");
  r.paths(corpus, "corpus", "manifests", cfg.manifests);
  r.get(corpus, "corpus", "sample_per_language", cfg.sample_per_language);
  for (const auto& m : cfg.manifests) detail::need_file(m, "corpus manifest", problems);

  const auto* backend = r.table("backend");
  r.get(backend, "backend", "kind", cfg.backend.kind);
  r.get(backend, "backend", "url", cfg.backend.url);
  r.paths(backend, "backend", "train", cfg.backend.train);
  r.get(backend, "backend", "order", cfg.backend.order);
  r.get(backend, "backend", "window", cfg.backend.window);
  r.get(backend, "backend", "name", cfg.backend.name);
  if (cfg.backend.kind != "reference" && cfg.backend.kind != "remote") {
    problems.push_back("backend.kind must be \"reference\" or \"remote\"");
  }
  for (const auto& m : cfg.backend.train) detail::need_file(m, "training manifest", problems);
  if (cfg.backend.order < 1 || cfg.backend.order > 7) problems.push_back("backend.order must be in 1..7");
  if (cfg.backend.window < 2) problems.push_back("backend.window must be >= 2");

  const auto* stride = r.table("stride");
  r.get(stride, "stride", "window", cfg.stride.window);
  r.get(stride, "stride", "stride", cfg.stride.stride);
  if (cfg.stride.stride < 1) problems.push_back("stride.stride must be >= 1");
  if (cfg.stride.window != 0 && cfg.stride.window < 2) problems.push_back("stride.window must be 0 or >= 2");
  if (cfg.stride.window != 0 && cfg.stride.stride > cfg.stride.window) {
    problems.push_back("stride.stride must not exceed stride.window");
  }

  const auto* ngram = r.table("ngram");
  r.get(ngram, "ngram", "n", cfg.ngram.n);
  r.get(ngram, "ngram", "points_per_stride", cfg.ngram.points_per_stride);
  cfg.ngram.seed = cfg.seed;
  if (cfg.ngram.n < 1) problems.push_back("ngram.n must be >= 1");
  if (cfg.ngram.points_per_stride < 1) problems.push_back("ngram.points_per_stride must be >= 1");

  const auto* dd = r.table("dedup");
  r.get(dd, "dedup", "threshold", cfg.dedup.overlap_threshold);
  r.get(dd, "dedup", "num_perm", cfg.dedup.k);
  r.get(dd, "dedup", "bands", cfg.dedup.bands);
  r.get(dd, "dedup", "rows", cfg.dedup.rows);
  r.get(dd, "dedup", "shingle", cfg.dedup.w);
  r.get(dd, "dedup", "seed", cfg.dedup.seed);
  r.get(dd, "dedup", "include_mined", cfg.include_mined);
  r.get(dd, "dedup", "cross_filter", cfg.cross_filter);
  r.paths(dd, "dedup", "reference", cfg.reference_manifests);
  try {
    cfg.dedup.validate();
  } catch (const Error& e) {
    problems.push_back(e.what());
  }
  for (const auto& m : cfg.reference_manifests) detail::need_file(m, "reference manifest", problems);

  const auto* mem = r.table("membership");
  r.paths(mem, "membership", "indexes", cfg.membership_indexes);
  for (const auto& m : cfg.membership_indexes) detail::need_file(m, "membership index", problems);

  const auto* mn = r.table("miner");
  auto& mc = cfg.mine.config;
  r.get(mn, "miner", "languages", mc.languages);
  r.get(mn, "miner", "min_stars", mc.min_stars);
  std::string from = mc.created_from.str(), to = mc.created_to.str();
  r.get(mn, "miner", "created_from", from);
  r.get(mn, "miner", "created_to", to);
  for (auto [text, slot, key] : {std::tuple{&from, &mc.created_from, "created_from"},
                                 std::tuple{&to, &mc.created_to, "created_to"}}) {
    if (auto d = Date::parse(*text)) *slot = *d;
    else problems.push_back(std::string("miner.") + key + " must be a YYYY-MM-DD date");
  }
  std::size_t max_repos = 0;
  r.get(mn, "miner", "max_repos", max_repos);
  if (max_repos > 0) mc.max_repos = max_repos;
  r.get(mn, "miner", "api_base", mc.api_base);
  r.get(mn, "miner", "requests_per_hour", mc.requests_per_hour);
  r.get(mn, "miner", "max_retries", mc.max_retries);
  r.get(mn, "miner", "per_page", mc.per_page);
  r.path(mn, "miner", "fixtures", cfg.mine.fixtures);
  r.path(mn, "miner", "record", cfg.mine.record);
  r.get(mn, "miner", "dataset", cfg.mine.dataset);
  r.get(mn, "miner", "reference", cfg.mine.reference);
  r.get(mn, "miner", "fetch_date", cfg.mine.fetch_date);
  mc.seed = cfg.seed;
  mc.workers = cfg.parallelism;
  for (auto& p : mc.problems()) {
    if (p.find("must be > 0 when set") == std::string::npos) problems.push_back(std::move(p));
  }
  if (!cfg.mine.fetch_date.empty() && !Date::parse(cfg.mine.fetch_date)) {
    problems.push_back("miner.fetch_date must be a YYYY-MM-DD date");
  }

  const auto* an = r.table("analysis");
  r.paths(an, "analysis", "summaries", cfg.extra_summaries);
  r.path(an, "analysis", "models", cfg.models);
  r.get(an, "analysis", "reference_parameters", cfg.reference_parameters);
  r.get(an, "analysis", "reference_budget", cfg.reference_budget);
  for (const auto& m : cfg.extra_summaries) detail::need_file(m, "summary table", problems);
  if (cfg.models) detail::need_file(*cfg.models, "model metadata", problems);

  r.unknown_keys();
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return cfg;
}

inline AuditConfig load_config(const fs::path& path, const Overrides& overrides = {}) {
  if (!fs::exists(path)) throw Error(ErrorKind::ingestion, "config not found: " + path.string());
  return config_from_json(toml_lite::parse_file(path), fs::absolute(path).parent_path(), overrides);
}

// ---- stage plumbing --------------------------------------------------------

inline std::string utc_now() {
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  const auto day = std::chrono::floor<std::chrono::days>(now);
  const std::chrono::hh_mm_ss hms{now - day};
  return fmt::format("{}T{:02}:{:02}:{:02}Z", Date::from_sys_days(day).str(), hms.hours().count(),
                     hms.minutes().count(), hms.seconds().count());
}

/// Writes a stage's artifacts into a scratch directory and swaps it into
/// place on commit, so a failed stage never clobbers the previous output.
class Stage {
 public:
  Stage(const AuditConfig& cfg, std::string name)
      : cfg_(cfg), name_(std::move(name)), final_(cfg.out / name_), scratch_(cfg.out / ("." + name_ + ".partial")),
        started_(utc_now()) {
    fs::remove_all(scratch_);
    fs::create_directories(scratch_);
  }

  ~Stage() {
    if (!committed_) {
      std::error_code ec;
      fs::remove_all(scratch_, ec);
    }
  }

  Stage(const Stage&) = delete;
  Stage& operator=(const Stage&) = delete;

  /// CSV artifact with the config hash and seed as leading comments.
  void csv(const std::string& file, const std::string& body) {
    write(file, fmt::format("# config_hash={} seed={}\n", cfg_.hash(), cfg_.seed) + body);
  }

  void jsonl(const std::string& file, const std::vector<json>& records) {
    util::write_jsonl(scratch_ / file, cfg_.meta(name_), records);
    artifacts_.push_back(file);
  }

  void corpus(const std::string& file, const Corpus& c) {
    save_corpus(scratch_ / file, c, cfg_.meta(name_));
    artifacts_.push_back(file);
  }

  void text(const std::string& file, const std::string& body) { write(file, body); }

  void note(std::string n) { notes_.push_back(std::move(n)); }
  json& counts() { return counts_; }

  fs::path commit() {
    json run{{"stage", name_},   {"config_hash", cfg_.hash()}, {"seed", cfg_.seed},
             {"started_at", started_}, {"finished_at", utc_now()}, {"artifacts", artifacts_},
             {"notes", notes_},  {"counts", counts_}};
    util::write_file_atomic(scratch_ / "run.json", run.dump(2) + "\n");
    fs::remove_all(final_);
    fs::rename(scratch_, final_);
    committed_ = true;
    return final_;
  }

 private:
  void write(const std::string& file, const std::string& body) {
    util::write_file_atomic(scratch_ / file, body);
    artifacts_.push_back(file);
  }

  const AuditConfig& cfg_;
  std::string name_;
  fs::path final_, scratch_;
  std::string started_;
  std::vector<std::string> artifacts_;
  std::vector<std::string> notes_;
  json counts_ = json::object();
  bool committed_ = false;
};

inline void require(bool ok, std::vector<std::string>& problems, std::string problem) {
  if (!ok) problems.push_back(std::move(problem));
}

inline void check(std::vector<std::string> problems) {
  if (!problems.empty()) throw ConfigError(std::move(problems));
}

/// Checks the run metadata of an upstream stage against this config.
inline void require_stage(const AuditConfig& cfg, const std::string& stage) {
  const auto run = cfg.out / stage / "run.json";
  if (!fs::exists(run)) {
    throw Error(ErrorKind::validation, "stage '" + stage + "' has not been run (missing " + run.string() + ")");
  }
}

inline Corpus load_stage_corpus(const AuditConfig& cfg) {
  for (const char* stage : {"dedup", "ingest"}) {
    const auto p = cfg.out / stage / "corpus.jsonl";
    if (fs::exists(p)) return load_corpus(p);
  }
  throw Error(ErrorKind::validation, "no corpus artifact: run 'ingest' (and optionally 'dedup') first");
}

/// Splits a mixed corpus into one corpus per dataset label.
inline std::vector<Corpus> by_dataset(const Corpus& c) {
  std::map<std::string, Corpus> parts;
  for (const auto& d : c.documents) {
    auto& p = parts[d.dataset];
    p.dataset = d.dataset;
    p.documents.push_back(d);
  }
  std::vector<Corpus> out;
  for (auto& [k, v] : parts) out.push_back(std::move(v));
  return out;
}

inline std::unique_ptr<Backend> make_backend(const AuditConfig& cfg) {
  std::vector<std::string> problems;
  if (cfg.backend.kind == "remote") {
    require(!cfg.backend.url.empty(), problems, "backend.url is required for a remote backend");
  } else {
    require(!cfg.backend.train.empty(), problems, "backend.train must list at least one manifest");
  }
  check(std::move(problems));
  if (cfg.backend.kind == "remote") {
    RemoteOptions opts;
    opts.max_in_flight = cfg.parallelism;
    return std::make_unique<RemoteBackend>(cfg.backend.url, opts);
  }
  std::vector<Corpus> parts;
  for (const auto& m : cfg.backend.train) parts.push_back(load_manifest(m, m.parent_path()));
  ReferenceLMOptions opts;
  opts.order = cfg.backend.order;
  auto lm = std::make_shared<const ReferenceLM>(train_reference_lm(merge(parts), opts));
  return std::make_unique<ReferenceBackend>(lm, cfg.backend.window, cfg.backend.name);
}

inline metrics::StrideConfig stride_for(const AuditConfig& cfg, const Backend& backend) {
  auto s = cfg.stride;
  if (s.window == 0) s.window = backend.descriptor().context_window;
  if (s.window > backend.descriptor().context_window) {
    throw ConfigError({fmt::format("stride.window {} exceeds the backend context window {}", s.window,
                                   backend.descriptor().context_window)});
  }
  s.stride = std::min(s.stride, s.window);
  s.validate();
  return s;
}

// ---- commands --------------------------------------------------------------

inline fs::path cmd_ingest(const AuditConfig& cfg) {
  check(cfg.manifests.empty() ? std::vector<std::string>{"corpus.manifests must list at least one manifest"}
                              : std::vector<std::string>{});
  std::vector<Corpus> parts;
  for (const auto& m : cfg.manifests) parts.push_back(load_manifest(m, m.parent_path()));
  const auto corpus = merge(parts);
  Stage stage(cfg, "ingest");
  stage.corpus("corpus.jsonl", corpus);
  for (const auto& part : by_dataset(corpus)) stage.counts()[part.dataset] = part.size();
  return stage.commit();
}

inline fs::path cmd_mine(const AuditConfig& cfg) {
  std::unique_ptr<http::Transport> base;
  if (cfg.mine.fixtures) base = std::make_unique<http::FixtureTransport>(*cfg.mine.fixtures);
  else base = std::make_unique<http::LiveTransport>();
  std::unique_ptr<http::Transport> recorder;
  http::Transport* transport = base.get();
  if (cfg.mine.record) {
    recorder = std::make_unique<http::RecordingTransport>(*base, *cfg.mine.record);
    transport = recorder.get();
  }
  auto mc = cfg.mine.config;
  mc.token = miner::token_from_env();
  mc.cursor_path = cfg.out / ".mine.cursor.json";
  fs::create_directories(cfg.out);
  http::SystemClock clock;
  const auto date = cfg.mine.fetch_date.empty() ? miner::today() : cfg.mine.fetch_date;

  Stage stage(cfg, "mine");
  auto emit = [&](const miner::MiningResult& res, const std::string& prefix) {
    std::vector<json> repos;
    for (const auto& r : res.repos) repos.push_back(miner::to_json(r));
    stage.jsonl(prefix + "repos.jsonl", repos);
    if (!res.corpus.empty()) stage.corpus(prefix + "corpus.jsonl", res.corpus);
    stage.counts()[prefix + "repos_by_host_label"] = res.repos.size();
    stage.counts()[prefix + "repos_with_matching_files"] = res.repos_with_files;
    stage.counts()[prefix + "files_matched"] = res.totals.files_matched;
    stage.counts()[prefix + "files_skipped_binary"] = res.totals.files_skipped_binary;
  };
  emit(miner::mine(mc, *transport, clock, cfg.mine.dataset, date), "");
  if (cfg.mine.reference) emit(miner::build_reference_corpus(mc, *transport, clock, date), "reference_");
  stage.note("star counts observed on " + date);
  stage.note("language: host label at search time, file extension at fetch time");
  auto dir = stage.commit();
  fs::remove(mc.cursor_path.value());
  fs::remove(fs::path(mc.cursor_path->string() + ".reference"));
  return dir;
}

inline fs::path cmd_dedup(const AuditConfig& cfg) {
  require_stage(cfg, "ingest");
  std::vector<Corpus> inputs{load_corpus(cfg.out / "ingest" / "corpus.jsonl")};
  const auto mined = cfg.out / "mine" / "corpus.jsonl";
  if (cfg.include_mined) {
    if (!fs::exists(mined)) throw Error(ErrorKind::validation, "dedup.include_mined is set but 'mine' has no corpus");
    inputs.push_back(load_corpus(mined));
  }
  const auto corpus = merge(inputs);

  Corpus reference;
  if (!cfg.cross_filter.empty()) {
    std::vector<Corpus> refs;
    for (const auto& m : cfg.reference_manifests) refs.push_back(load_manifest(m, m.parent_path()));
    const auto mined_ref = cfg.out / "mine" / "reference_corpus.jsonl";
    if (refs.empty() && fs::exists(mined_ref)) refs.push_back(load_corpus(mined_ref));
    if (refs.empty()) {
      throw ConfigError({"dedup.cross_filter needs dedup.reference manifests or a mined reference corpus"});
    }
    reference = merge(refs);
  }

  Stage stage(cfg, "dedup");
  const auto cache_path = cfg.out / ".signatures.jsonl";
  auto cache = dedup::SignatureCache::load(cache_path);
  std::string removed = util::csv_line({"id", "dataset", "reason", "matched_id", "estimate"});
  std::string repos = util::csv_line({"dataset", "repo", "files", "removed"});
  std::vector<Corpus> kept;
  for (const auto& part : by_dataset(corpus)) {
    auto res = dedup::apply_overlap_filter_detailed(part, cfg.dedup, cfg.parallelism, &cache);
    std::set<std::string> survivors;
    for (const auto& d : res.kept.documents) survivors.insert(d.id);
    for (const auto& comp : res.components) {
      std::string keeper;
      for (const auto& id : comp) if (survivors.count(id)) keeper = id;
      for (const auto& id : comp) {
        if (id != keeper) removed += util::csv_line({id, part.dataset, "within-dataset", keeper, ""});
      }
    }
    Corpus current = std::move(res.kept);
    const std::size_t before = part.size(), after_overlap = current.size();
    if (std::find(cfg.cross_filter.begin(), cfg.cross_filter.end(), part.dataset) != cfg.cross_filter.end()) {
      auto cross = dedup::cross_filter_detailed(current, reference, cfg.dedup, cfg.parallelism, &cache);
      for (const auto& m : cross.removed) {
        removed += util::csv_line({m.id, part.dataset, "reference-overlap", m.reference_id,
                                   fmt::format("{:.4f}", m.estimate)});
      }
      std::size_t touched = 0;
      for (const auto& [repo, o] : cross.repos) {
        repos += util::csv_line({part.dataset, repo, std::to_string(o.files), std::to_string(o.removed)});
        touched += o.removed > 0;
      }
      stage.note(fmt::format("{}: cross-filter removed {} files; {} repositories would be dropped under "
                             "repository-level filtering",
                             part.dataset, cross.removed.size(), touched));
      current = std::move(cross.kept);
    }
    if (cfg.sample_per_language > 0) current = sample(current, cfg.sample_per_language, cfg.seed);
    stage.counts()[part.dataset] = {{"input", before}, {"after_overlap", after_overlap}, {"kept", current.size()}};
    kept.push_back(std::move(current));
  }
  cache.save(cache_path);
  stage.corpus("corpus.jsonl", merge(kept));
  stage.csv("removed.csv", removed);
  stage.csv("repo_overlap.csv", repos);
  stage.note(fmt::format("overlap = estimated Jaccard over {}-token whitespace shingles, threshold {}, k={} "
                         "({}x{} LSH bands), file-level removal keeping the oldest file",
                         cfg.dedup.w, cfg.dedup.overlap_threshold, cfg.dedup.k, cfg.dedup.bands, cfg.dedup.rows));
  return stage.commit();
}

/// Shared body of the nll and ngram stages.
inline fs::path score_stage(const AuditConfig& cfg, bool ngram) {
  auto backend = make_backend(cfg);  // validates backend settings before any scoring
  const auto scfg = stride_for(cfg, *backend);
  if (ngram) cfg.ngram.validate();
  const auto corpus = load_stage_corpus(cfg);
  const auto model = backend->descriptor().name;

  std::vector<json> records;
  std::vector<metrics::DatasetSummary> summaries;
  std::size_t skipped = 0;
  for (const auto& part : by_dataset(corpus)) {
    auto out = metrics::score_corpus(part, *backend, scfg, ngram ? &cfg.ngram : nullptr, !ngram, cfg.parallelism);
    skipped += out.skipped.size();
    if (ngram) {
      for (const auto& r : out.ngram) records.push_back(metrics::to_json(r));
      if (!out.ngram.empty()) summaries.push_back(metrics::summarize({}, out.ngram, part.dataset, model));
    } else {
      for (const auto& r : out.nll) records.push_back(metrics::to_json(r));
      if (!out.nll.empty()) summaries.push_back(metrics::summarize(out.nll, {}, part.dataset, model));
    }
  }
  Stage stage(cfg, ngram ? "ngram" : "nll");
  stage.jsonl("results.jsonl", records);
  stage.csv("summaries.csv", metrics::summaries_csv(summaries));
  stage.counts()["documents"] = records.size();
  stage.counts()["skipped_too_short"] = skipped;
  stage.note(fmt::format("backend {} (window {}, stride {})", model, scfg.window, scfg.stride));
  return stage.commit();
}

inline fs::path cmd_nll(const AuditConfig& cfg) { return score_stage(cfg, false); }
inline fs::path cmd_ngram(const AuditConfig& cfg) { return score_stage(cfg, true); }

inline fs::path cmd_membership(const AuditConfig& cfg) {
  check(cfg.membership_indexes.empty()
            ? std::vector<std::string>{"membership.indexes must list at least one index snapshot"}
            : std::vector<std::string>{});
  std::vector<membership::MembershipIndex> indexes;
  for (const auto& p : cfg.membership_indexes) indexes.push_back(membership::load_index(p));
  const auto corpus = load_stage_corpus(cfg);
  std::vector<membership::MembershipReport> reports;
  Stage stage(cfg, "membership");
  for (const auto& part : by_dataset(corpus)) {
    if (std::none_of(part.documents.begin(), part.documents.end(), [](const Document& d) { return d.repo.has_value(); })) {
      stage.note(part.dataset + ": no documents carry a repository; dataset skipped");
      continue;
    }
    reports.push_back(membership::membership_rate(part, indexes));
    if (reports.back().documents_without_repo > 0) {
      stage.note(fmt::format("{}: {} documents without a repository were excluded", part.dataset,
                             reports.back().documents_without_repo));
    }
  }
  stage.csv("table.csv", membership::membership_table_csv(reports));
  stage.csv("detail.csv", membership::membership_detail_csv(reports));
  stage.note("membership = exact owner/name match after lower-casing; same-name repositories under other owners "
             "are listed in detail.csv");
  return stage.commit();
}

inline std::string slug(const std::string& s) {
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c)) out += static_cast<char>(std::tolower(c));
    else if (!out.empty() && out.back() != '-') out += '-';
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out.empty() ? "model" : out;
}

/// Joins NLL and n-gram summaries on (model, dataset), keeping first-seen order.
inline std::vector<metrics::DatasetSummary> join_summaries(const std::vector<std::vector<metrics::DatasetSummary>>& parts) {
  std::vector<metrics::DatasetSummary> out;
  std::map<std::pair<std::string, std::string>, std::size_t> at;
  for (const auto& part : parts) {
    for (const auto& s : part) {
      auto [it, fresh] = at.emplace(std::pair{s.model, s.dataset}, out.size());
      if (fresh) {
        out.push_back(s);
        continue;
      }
      auto& d = out[it->second];
      if (!std::isnan(s.mean_nll)) d.mean_nll = s.mean_nll;
      if (!std::isnan(s.mean_ngram)) d.mean_ngram = s.mean_ngram;
      d.doc_count = std::max(d.doc_count, s.doc_count);
    }
  }
  return out;
}

inline fs::path cmd_analyze(const AuditConfig& cfg) {
  std::vector<std::vector<metrics::DatasetSummary>> parts;
  for (const char* stage : {"nll", "ngram"}) {
    const auto p = cfg.out / stage / "summaries.csv";
    if (fs::exists(p)) parts.push_back(metrics::parse_summaries(util::read_csv(p)));
  }
  for (const auto& p : cfg.extra_summaries) parts.push_back(metrics::parse_summaries(util::read_csv(p)));
  const auto summaries = join_summaries(parts);
  if (summaries.empty()) {
    throw Error(ErrorKind::validation, "nothing to analyze: run 'nll'/'ngram' or list analysis.summaries");
  }

  Stage stage(cfg, "analyze");
  stage.csv("summaries.csv", metrics::summaries_csv(summaries));

  std::vector<std::string> model_order;
  std::map<std::string, std::vector<metrics::DatasetSummary>> per_model;
  for (const auto& s : summaries) {
    if (!per_model.count(s.model)) model_order.push_back(s.model);
    if (!std::isnan(s.mean_nll)) per_model[s.model].push_back(s);
  }
  json ratio_files = json::array();
  for (const auto& m : model_order) {
    if (per_model[m].size() < 2) continue;
    const auto file = "ratio_" + slug(m) + ".csv";
    stage.csv(file, analysis::ratio_matrix_csv(analysis::ratio_matrix(per_model[m])));
    ratio_files.push_back({{"model", m}, {"file", file}});
  }
  stage.counts()["ratio_matrices"] = ratio_files;

  if (!cfg.models) {
    stage.note("regression skipped: analysis.models not set");
    return stage.commit();
  }
  const auto models = analysis::parse_models(util::read_csv(*cfg.models));
  std::vector<analysis::RegressionFit> fits;
  for (auto response : {analysis::Response::nll, analysis::Response::ngram}) {
    auto rows = analysis::build_rows(summaries, models, response);
    for (const auto& [model, why] : rows.excluded) {
      stage.note(fmt::format("{} regression excludes {}: {}", analysis::to_string(response), model, why));
    }
    const auto centered = analysis::center_predictors(rows.rows, cfg.reference_parameters, cfg.reference_budget);
    try {
      fits.push_back(analysis::fit_mixed_model(centered, response));
    } catch (const analysis::ConvergenceError&) {
      throw;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::validation) throw;
      stage.note(fmt::format("{} regression skipped: {}", analysis::to_string(response), e.what()));
      continue;
    }
    const auto name = response == analysis::Response::nll ? "residuals_nll.csv" : "residuals_ngram.csv";
    stage.csv(name, analysis::residuals_csv(analysis::residual_diagnostics(fits.back(), centered)));
    for (const auto& v : fits.back().random_effects) {
      if (v.clamped) {
        stage.note(fmt::format("{} regression: {} variance clamped at 0", analysis::to_string(response), v.group));
      }
    }
  }
  if (!fits.empty()) {
    stage.csv("regression.csv", analysis::regression_csv(fits));
    stage.text("regression.txt", analysis::regression_table_text(fits));
  }
  stage.note(fmt::format("predictors centered at {}B parameters and {}T training tokens; crossed random "
                         "intercepts for dataset and tokenizer family; Wald z p-values",
                         cfg.reference_parameters, cfg.reference_budget));
  return stage.commit();
}

// ---- report ----------------------------------------------------------------

inline const std::vector<std::string>& stage_names() {
  static const std::vector<std::string> names{"ingest", "mine", "dedup", "nll", "ngram", "membership", "analyze"};
  return names;
}

inline std::string md_row(const std::vector<std::string>& cells) {
  std::string s = "|";
  for (const auto& c : cells) s += " " + c + " |";
  return s + "\n";
}

inline std::string md_table(const util::CsvTable& t, const std::function<std::string(std::size_t, const std::string&)>& fmt_cell) {
  std::string out = md_row(t.header);
  out += md_row(std::vector<std::string>(t.header.size(), "---"));
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (std::size_t i = 0; i < row.size(); ++i) cells.push_back(fmt_cell(i, row[i]));
    out += md_row(cells);
  }
  return out;
}

inline std::string two_decimals(const std::string& v) {
  if (v.empty()) return "-";
  return fmt::format("{:.2f}", metrics::parse_metric(v));
}

/// Composes the Markdown report from whatever stages have run. Artifacts
/// from a different config hash are refused unless `force` is set.
inline fs::path cmd_report(const AuditConfig& cfg, bool force = false) {
  std::map<std::string, json> runs;
  std::vector<std::string> mismatched;
  for (const auto& name : stage_names()) {
    const auto p = cfg.out / name / "run.json";
    if (!fs::exists(p)) continue;
    auto run = json::parse(util::read_file(p));
    if (run.value("config_hash", "") != cfg.hash()) mismatched.push_back(name);
    runs[name] = std::move(run);
  }
  if (runs.empty()) throw Error(ErrorKind::validation, "no stage artifacts under " + cfg.out.string());
  if (!mismatched.empty() && !force) {
    std::string list;
    for (const auto& m : mismatched) list += (list.empty() ? "" : ", ") + m;
    throw Error(ErrorKind::validation, "artifacts from a different config hash: " + list + " (use --force to mix)");
  }
  auto notes_of = [&](const std::string& stage) {
    std::string s;
    if (runs.count(stage)) {
      for (const auto& n : runs[stage]["notes"]) s += "- " + n.get<std::string>() + "\n";
    }
    return s;
  };
  auto csv = [&](const std::string& stage, const std::string& file) {
    return util::read_csv(cfg.out / stage / file);
  };

  std::string md = "# Leakage audit report\n\n";
  md += fmt::format("- Config hash: `{}`\n- Seed: {}\n", cfg.hash(), cfg.seed);
  std::string stages;
  for (const auto& name : stage_names()) {
    if (runs.count(name)) stages += (stages.empty() ? "" : ", ") + name;
  }
  md += "- Stages: " + stages + "\n";
  if (!mismatched.empty()) md += "- Warning: mixed config hashes forced for: " + fmt::format("{}", fmt::join(mismatched, ", ")) + "\n";

  md += "\n## Corpus\n\n";
  if (runs.count("ingest")) {
    md += md_row({"Dataset", "Ingested", "After dedup"}) + md_row({"---", "---", "---"});
    const auto& ingest = runs["ingest"]["counts"];
    for (const auto& [ds, n] : ingest.items()) {
      std::string after = "-";
      if (runs.count("dedup") && runs["dedup"]["counts"].contains(ds)) {
        after = std::to_string(runs["dedup"]["counts"][ds]["kept"].get<std::size_t>());
      }
      md += md_row({ds, std::to_string(n.get<std::size_t>()), after});
    }
  } else {
    md += "Stage not run.\n";
  }

  if (runs.count("mine")) {
    md += "\n## Mining\n\n";
    for (const auto& [k, v] : runs["mine"]["counts"].items()) md += fmt::format("- {}: {}\n", k, v.dump());
    md += notes_of("mine");
  }

  md += "\n## Deduplication\n\n";
  md += runs.count("dedup") ? notes_of("dedup") : "Stage not run.\n";

  md += "\n## Membership in pretraining-data index\n\n";
  if (runs.count("membership")) {
    md += md_table(csv("membership", "table.csv"), [](std::size_t, const std::string& v) { return v; });
    const auto n = notes_of("membership");
    if (!n.empty()) md += "\n" + n;
  } else {
    md += "Stage not run.\n";
  }

  md += "\n## NLL ratio matrices\n\n";
  if (runs.count("analyze") && !runs["analyze"]["counts"]["ratio_matrices"].empty()) {
    md += "Cell = NLL of the column dataset / NLL of the row dataset.\n";
    for (const auto& r : runs["analyze"]["counts"]["ratio_matrices"]) {
      md += "\n### " + r["model"].get<std::string>() + "\n\n";
      md += md_table(csv("analyze", r["file"].get<std::string>()),
                     [](std::size_t i, const std::string& v) { return i == 0 ? v : two_decimals(v); });
    }
  } else {
    md += "Not available.\n";
  }

  md += "\n## Mixed-effects regression\n\n";
  if (runs.count("analyze") && fs::exists(cfg.out / "analyze" / "regression.txt")) {
    md += "```\n" + util::read_file(cfg.out / "analyze" / "regression.txt") + "```\n\n";
    const auto t = csv("analyze", "regression.csv");
    const auto resp = t.column("response"), term = t.column("term"), est = t.column("estimate");
    for (const auto& row : t.rows) {
      if (row[term].rfind("var(", 0) == 0) md += fmt::format("- {} {}: {}\n", row[resp], row[term], row[est]);
    }
  } else {
    md += "Not available.\n";
  }
  md += notes_of("analyze");

  md += "\n## Dataset summaries\n\n";
  if (runs.count("analyze")) {
    const auto t = csv("analyze", "summaries.csv");
    md += md_row({"Model", "Dataset", "NLL", "5-gram", "Documents"}) + md_row({"---", "---", "---", "---", "---"});
    for (const auto& row : t.rows) {
      md += md_row({row[t.column("model")], row[t.column("dataset")], two_decimals(row[t.column("mean_nll")]),
                    two_decimals(row[t.column("mean_ngram")]), row[t.column("doc_count")]});
    }
  } else {
    md += "Not available.\n";
  }

  Stage stage(cfg, "report");
  stage.text("report.md", md);
  return stage.commit();
}

}  // namespace leakaudit::audit
