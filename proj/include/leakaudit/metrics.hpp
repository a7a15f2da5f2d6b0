#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "leakaudit/backend.hpp"
#include "leakaudit/corpus.hpp"
#include "leakaudit/error.hpp"
#include "leakaudit/util/csv.hpp"
#include "leakaudit/util/parallel.hpp"

namespace leakaudit::metrics {

struct StrideConfig {
  std::size_t window = 0;  ///< W, the backend context window
  std::size_t stride = 512;

  static StrideConfig for_backend(const BackendDescriptor& desc, std::size_t stride = 512) {
    return {desc.context_window, std::min(stride, desc.context_window)};
  }

  void validate() const {
    if (window < 2) throw Error(ErrorKind::validation, "stride config: window must be >= 2");
    if (stride < 1 || stride > window) {
      throw Error(ErrorKind::validation, "stride config: stride must be in [1, window]");
    }
  }

  /// Every window keeps at least one context token, so S == W advances by W - 1.
  std::size_t effective_stride() const { return std::min(stride, window - 1); }
};

/// Tokens [begin, end) go to the backend; positions [fresh, end) are counted.
struct Window {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t fresh = 0;
};

/// Windows start at 0, S, 2S, ... and stop at the first one reaching t.
/// Counted regions partition positions 1..t-1 (0-indexed).
inline std::vector<Window> plan_windows(std::size_t t, const StrideConfig& cfg) {
  cfg.validate();
  std::vector<Window> out;
  if (t < 2) return out;
  const std::size_t step = cfg.effective_stride();
  std::size_t prev_end = 0;
  for (std::size_t begin = 0;; begin += step) {
    const std::size_t end = std::min(begin + cfg.window, t);
    out.push_back({begin, end, std::max<std::size_t>(prev_end, 1)});
    if (end == t) break;
    prev_end = end;
  }
  return out;
}

struct NllResult {
  std::string doc_id;
  std::string dataset;
  double total_nll = 0.0;
  std::size_t counted = 0;
  double nll = 0.0;
  std::size_t windows = 0;
};

/// Called once per counted position (0-indexed) with its logprob.
using PositionObserver = std::function<void(std::size_t position, double logprob)>;

namespace detail {

[[noreturn]] inline void rethrow_with_context(const Error& e, const std::string& where) {
  const std::string msg = where + ": " + e.what();
  if (const auto* te = dynamic_cast<const TransportError*>(&e)) {
    throw TransportError(msg, te->status(), te->attempts(), te->retryable());
  }
  throw Error(e.kind(), msg);
}

}  // namespace detail

inline NllResult strided_nll(const TokenSeq& tokens, const Backend& backend,
                             const StrideConfig& cfg, const PositionObserver& observer = {}) {
  cfg.validate();
  if (tokens.size() < 2) {
    throw Error(ErrorKind::too_short, "NLL needs at least 2 tokens, got " +
                                          std::to_string(tokens.size()));
  }
  NllResult result;
  const auto windows = plan_windows(tokens.size(), cfg);
  for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    const auto& w = windows[wi];
    ScoredSequence scored;
    try {
      scored = backend.score(TokenSeq(tokens.begin() + static_cast<std::ptrdiff_t>(w.begin),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(w.end)));
    } catch (const Error& e) {
      detail::rethrow_with_context(e, "window " + std::to_string(wi));
    }
    if (scored.logprobs.size() + 1 != w.end - w.begin) {
      throw Error(ErrorKind::protocol, "window " + std::to_string(wi) + ": backend returned " +
                                           std::to_string(scored.logprobs.size()) + " logprobs");
    }
    for (std::size_t p = w.fresh; p < w.end; ++p) {
      const double lp = scored.logprobs[p - w.begin - 1];
      result.total_nll -= lp;
      ++result.counted;
      if (observer) observer(p, lp);
    }
  }
  result.windows = windows.size();
  result.nll = result.total_nll / static_cast<double>(result.counted);
  return result;
}

inline NllResult strided_nll(const Document& doc, const Backend& backend,
                             const StrideConfig& cfg) {
  auto r = strided_nll(backend.tokenize(doc.content), backend, cfg);
  r.doc_id = doc.id;
  r.dataset = doc.dataset;
  return r;
}

struct NGramConfig {
  std::size_t n = 5;
  std::size_t points_per_stride = 5;
  /// Recorded with results; start placement is deterministic and does not draw from it.
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 1) throw Error(ErrorKind::validation, "n-gram config: n must be >= 1");
    if (points_per_stride < 1) {
      throw Error(ErrorKind::validation, "n-gram config: points_per_stride must be >= 1");
    }
  }
};

struct Trial {
  std::size_t start = 0;
  TokenSeq gold;
  TokenSeq predicted;
  bool match = false;
};

struct NGramReport {
  std::string doc_id;
  std::string dataset;
  std::vector<Trial> trials;
  std::size_t matches = 0;
  double accuracy = 0.0;
};

/// Starts spread linearly over [lo, hi] inclusive, duplicates collapsed.
inline std::vector<std::size_t> place_starts(std::size_t lo, std::size_t hi, std::size_t points) {
  std::vector<std::size_t> out;
  if (hi < lo) return out;
  if (points == 1 || hi == lo) {
    out.push_back(lo + (hi - lo) / 2);
    return out;
  }
  for (std::size_t k = 0; k < points; ++k) out.push_back(lo + k * (hi - lo) / (points - 1));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Trial start positions for a sequence of t tokens, window by window.
inline std::vector<std::size_t> plan_trials(std::size_t t, const StrideConfig& scfg,
                                            const NGramConfig& ncfg) {
  std::vector<std::size_t> starts;
  for (const auto& w : plan_windows(t, scfg)) {
    if (w.end < ncfg.n + 1) continue;
    const std::size_t lo = std::max<std::size_t>(w.fresh, 1);
    const std::size_t hi = w.end - ncfg.n;
    for (auto s : place_starts(lo, hi, ncfg.points_per_stride)) starts.push_back(s);
  }
  return starts;
}

inline NGramReport ngram_accuracy(const TokenSeq& tokens, const Backend& backend,
                                  const StrideConfig& scfg, const NGramConfig& ncfg) {
  scfg.validate();
  ncfg.validate();
  if (scfg.window < ncfg.n + 1) {
    throw Error(ErrorKind::validation, "context window must exceed the n-gram length");
  }
  if (tokens.size() < ncfg.n + 1) {
    throw Error(ErrorKind::too_short, "n-gram probe needs at least n+1 tokens, got " +
                                          std::to_string(tokens.size()));
  }
  NGramReport report;
  const std::size_t max_context = scfg.window - ncfg.n;
  const auto starts = plan_trials(tokens.size(), scfg, ncfg);
  for (std::size_t ti = 0; ti < starts.size(); ++ti) {
    const std::size_t s = starts[ti];
    const std::size_t ctx_begin = s > max_context ? s - max_context : 0;
    Trial trial;
    trial.start = s;
    trial.gold.assign(tokens.begin() + static_cast<std::ptrdiff_t>(s),
                      tokens.begin() + static_cast<std::ptrdiff_t>(s + ncfg.n));
    try {
      trial.predicted = backend.greedy_continue(
          TokenSeq(tokens.begin() + static_cast<std::ptrdiff_t>(ctx_begin),
                   tokens.begin() + static_cast<std::ptrdiff_t>(s)),
          ncfg.n);
    } catch (const Error& e) {
      detail::rethrow_with_context(e, "trial " + std::to_string(ti));
    }
    trial.match = trial.predicted == trial.gold;
    report.matches += trial.match;
    report.trials.push_back(std::move(trial));
  }
  report.accuracy = static_cast<double>(report.matches) / static_cast<double>(report.trials.size());
  return report;
}

inline NGramReport ngram_accuracy(const Document& doc, const Backend& backend,
                                  const StrideConfig& scfg, const NGramConfig& ncfg) {
  auto r = ngram_accuracy(backend.tokenize(doc.content), backend, scfg, ncfg);
  r.doc_id = doc.id;
  r.dataset = doc.dataset;
  return r;
}

struct DatasetSummary {
  std::string model;
  std::string dataset;
  double mean_nll = std::numeric_limits<double>::quiet_NaN();
  double mean_ngram = std::numeric_limits<double>::quiet_NaN();
  std::size_t doc_count = 0;
};

/// Unweighted per-document means. Inputs are re-sorted by doc id, so
/// permuting them changes nothing. A metric with no results stays NaN.
inline DatasetSummary summarize(std::vector<NllResult> nll, std::vector<NGramReport> ngram,
                                const std::string& dataset, const std::string& model) {
  if (nll.empty() && ngram.empty()) {
    throw Error(ErrorKind::validation, "cannot summarize zero document results");
  }
  std::sort(nll.begin(), nll.end(), [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
  std::sort(ngram.begin(), ngram.end(),
            [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
  DatasetSummary s{model, dataset};
  std::set<std::string> ids;
  if (!nll.empty()) {
    double sum = 0.0;
    for (const auto& r : nll) {
      sum += r.nll;
      ids.insert(r.doc_id);
    }
    s.mean_nll = sum / static_cast<double>(nll.size());
  }
  if (!ngram.empty()) {
    double sum = 0.0;
    for (const auto& r : ngram) {
      sum += r.accuracy;
      ids.insert(r.doc_id);
    }
    s.mean_ngram = sum / static_cast<double>(ngram.size());
  }
  s.doc_count = ids.size();
  return s;
}

struct BatchOutcome {
  std::vector<NllResult> nll;
  std::vector<NGramReport> ngram;
  /// Documents too short for the metric, with the reason.
  std::vector<std::pair<std::string, std::string>> skipped;
};

/// Scores every document on `workers` threads; output order is by doc id.
inline BatchOutcome score_corpus(const Corpus& corpus, const Backend& backend,
                                 const StrideConfig& scfg, const NGramConfig* ncfg,
                                 bool want_nll, std::size_t workers) {
  std::vector<std::optional<NllResult>> nll(corpus.size());
  std::vector<std::optional<NGramReport>> ngram(corpus.size());
  std::vector<std::optional<std::string>> skipped(corpus.size());
  util::parallel_for(corpus.size(), workers, [&](std::size_t i) {
    const auto& doc = corpus.documents[i];
    try {
      const auto tokens = backend.tokenize(doc.content);
      if (want_nll) {
        auto r = strided_nll(tokens, backend, scfg);
        r.doc_id = doc.id;
        r.dataset = doc.dataset;
        nll[i] = std::move(r);
      }
      if (ncfg) {
        auto r = ngram_accuracy(tokens, backend, scfg, *ncfg);
        r.doc_id = doc.id;
        r.dataset = doc.dataset;
        ngram[i] = std::move(r);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::too_short) detail::rethrow_with_context(e, "document " + doc.id);
      skipped[i] = e.what();
    }
  });
  BatchOutcome out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (nll[i]) out.nll.push_back(std::move(*nll[i]));
    if (ngram[i]) out.ngram.push_back(std::move(*ngram[i]));
    if (skipped[i]) out.skipped.emplace_back(corpus.documents[i].id, *skipped[i]);
  }
  return out;
}

// ---- persistence ---------------------------------------------------------

inline nlohmann::json to_json(const NllResult& r) {
  return {{"doc_id", r.doc_id}, {"dataset", r.dataset}, {"total_nll", r.total_nll},
          {"counted", r.counted}, {"nll", r.nll},         {"windows", r.windows}};
}

inline NllResult nll_from_json(const nlohmann::json& j) {
  NllResult r;
  r.doc_id = j.at("doc_id").get<std::string>();
  r.dataset = j.at("dataset").get<std::string>();
  r.total_nll = j.at("total_nll").get<double>();
  r.counted = j.at("counted").get<std::size_t>();
  r.nll = j.at("nll").get<double>();
  r.windows = j.value("windows", std::size_t{0});
  return r;
}

inline nlohmann::json to_json(const NGramReport& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"start", t.start}, {"gold", t.gold}, {"predicted", t.predicted},
                      {"match", t.match}});
  }
  return {{"doc_id", r.doc_id},   {"dataset", r.dataset},         {"accuracy", r.accuracy},
          {"matches", r.matches}, {"trial_count", r.trials.size()}, {"trials", std::move(trials)}};
}

inline NGramReport ngram_from_json(const nlohmann::json& j) {
  NGramReport r;
  r.doc_id = j.at("doc_id").get<std::string>();
  r.dataset = j.at("dataset").get<std::string>();
  r.accuracy = j.at("accuracy").get<double>();
  r.matches = j.at("matches").get<std::size_t>();
  for (const auto& t : j.at("trials")) {
    r.trials.push_back({t.at("start").get<std::size_t>(), t.at("gold").get<TokenSeq>(),
                        t.at("predicted").get<TokenSeq>(), t.at("match").get<bool>()});
  }
  return r;
}

inline std::string format_metric(double v) {
  return std::isnan(v) ? std::string() : fmt::format("{:.6f}", v);
}

inline double parse_metric(const std::string& s) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, "not a number: '" + s + "'");
  }
}

inline std::string summaries_csv(const std::vector<DatasetSummary>& rows,
                                 const std::vector<std::string>& comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + '\n';
  out += util::csv_line({"model", "dataset", "mean_nll", "mean_ngram", "doc_count"});
  for (const auto& s : rows) {
    out += util::csv_line({s.model, s.dataset, format_metric(s.mean_nll),
                           format_metric(s.mean_ngram), std::to_string(s.doc_count)});
  }
  return out;
}

inline std::vector<DatasetSummary> parse_summaries(const util::CsvTable& table) {
  const auto model = table.column("model"), dataset = table.column("dataset"),
             nll = table.column("mean_nll"), ngram = table.column("mean_ngram"),
             count = table.column("doc_count");
  std::vector<DatasetSummary> out;
  for (const auto& row : table.rows) {
    const double n = row[count].empty() ? 0.0 : parse_metric(row[count]);
    if (n < 0.0 || n != std::floor(n)) {
      throw Error(ErrorKind::parse, "doc_count must be a non-negative integer: '" + row[count] + "'");
    }
    out.push_back({row[model], row[dataset], parse_metric(row[nll]), parse_metric(row[ngram]),
                   static_cast<std::size_t>(n)});
  }
  return out;
}

}  // namespace leakaudit::metrics
