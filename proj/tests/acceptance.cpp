// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "leakaudit/analysis.hpp"
#include "leakaudit/audit.hpp"
#include "leakaudit/dedup.hpp"
#include "leakaudit/membership.hpp"
#include "leakaudit/metrics.hpp"
#include "leakaudit/reference_lm.hpp"
#include "leakaudit/remote.hpp"
#include "mock_server.hpp"
#include "support.hpp"

using namespace leakaudit;
namespace fs = std::filesystem;

namespace {

const fs::path kRepoData = LEAKAUDIT_REPO_DATA;
const fs::path kTestData = LEAKAUDIT_TEST_DATA;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

std::string random_text(std::mt19937_64& rng, std::size_t bytes, char lo = 'a', char hi = 'z') {
  std::uniform_int_distribution<int> pick(lo, hi);
  std::string s(bytes, ' ');
  for (auto& c : s) c = static_cast<char>(pick(rng));
  return s;
}

std::shared_ptr<const ReferenceLM> lm_on(const std::vector<std::string>& texts, std::size_t order) {
  std::vector<TokenSeq> docs;
  for (const auto& t : texts) docs.push_back(ByteTokenizer::encode(t));
  ReferenceLMOptions o;
  o.order = order;
  return std::make_shared<const ReferenceLM>(ReferenceLM::train(docs, ByteTokenizer::kVocab, o));
}

// ---- 1 ---------------------------------------------------------------------

Outcome striding() {
  Outcome out;
  std::mt19937_64 rng(101);
  std::vector<std::string> train;
  for (int i = 0; i < 20; ++i) train.push_back(random_text(rng, 500, 'a', 'p'));
  const auto lm = lm_on(train, 5);
  double worst = 0.0;
  std::size_t single = 0, multi = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t t = 2 + rng() % 600;
    const auto tokens = ByteTokenizer::encode(rng() % 2 ? train[rng() % train.size()].substr(0, t)
                                                        : random_text(rng, t, 'a', 'p'));
    if (trial % 2 == 0) {
      // t <= W: one window, compared against a direct full-sequence pass.
      const std::size_t W = tokens.size() + rng() % 64 + (tokens.size() < 2 ? 2 : 0);
      ReferenceBackend b(lm, std::max<std::size_t>(W, 2));
      const auto direct = b.score(tokens);
      const double d = -std::accumulate(direct.logprobs.begin(), direct.logprobs.end(), 0.0) /
                       static_cast<double>(direct.logprobs.size());
      const auto r = metrics::strided_nll(tokens, b, {b.descriptor().context_window, 1 + rng() % b.descriptor().context_window});
      worst = std::max(worst, std::abs(r.nll - d));
      ++single;
    } else {
      // t > W: every position 2..t counted exactly once.
      const std::size_t W = 2 + rng() % std::max<std::size_t>(2, tokens.size() - 1);
      const std::size_t S = 1 + rng() % W;
      ReferenceBackend b(lm, W);
      std::vector<int> seen(tokens.size(), 0);
      metrics::strided_nll(tokens, b, {W, S}, [&](std::size_t p, double) { ++seen[p]; });
      bool part = seen[0] == 0;
      for (std::size_t p = 1; p < seen.size(); ++p) part = part && seen[p] == 1;
      out.expect(part, fmt::format("partition broken at t={} W={} S={}", tokens.size(), W, S));
      ++multi;
    }
  }
  out.expect(worst < 1e-12, fmt::format("max |strided - direct| = {:.3e}", worst));
  if (out.ok) out.detail = fmt::format("{} single-window triples max |d|={:.1e}, {} partition layouts", single, worst, multi);
  return out;
}

// ---- 2 ---------------------------------------------------------------------

/// A Java-like source file whose identifiers, comments and literals are
/// specific to the file, as they are across unrelated projects.
std::string synthetic_java(std::mt19937_64& rng, int index) {
  auto ident = [&] { return random_text(rng, 6 + rng() % 6, 'a', 'z'); };
  auto words = [&](int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (i ? " " : "") + random_text(rng, 3 + rng() % 6, 'a', 'z');
    return s;
  };
  std::vector<std::string> names;
  for (int i = 0; i < 12; ++i) names.push_back(ident());
  auto name = [&] { return names[rng() % names.size()]; };
  std::string src = "package org." + ident() + ";\n\n/** " + words(12) + " */\npublic class C" + ident() +
                    std::to_string(index) + " {\n";
  for (int m = 0; m < 5; ++m) {
    src += "\n  // " + words(8) + "\n  public String " + ident() + "(String " + name() + ") {\n";
    for (int k = 0; k < 3; ++k) {
      src += "    String " + name() + " = " + name() + ".concat(\"" + words(3) + "\");\n";
    }
    src += "    return " + name() + ";\n  }\n";
  }
  return src + "}\n";
}

Outcome memorization() {
  Outcome out;
  std::mt19937_64 rng(202);
  Corpus a{"A", {}}, b{"B", {}};
  std::vector<std::string> texts_a;
  for (int i = 0; i < 50; ++i) {
    texts_a.push_back(synthetic_java(rng, i));
    a.documents.push_back(testing_support::doc("a" + std::to_string(i), texts_a.back(), {}, "java", "A"));
  }
  for (int i = 0; i < 50; ++i) {
    b.documents.push_back(testing_support::doc("b" + std::to_string(i), synthetic_java(rng, 100 + i), {}, "java", "B"));
  }
  ReferenceBackend lm(lm_on(texts_a, 5), 512);
  const metrics::NGramConfig ncfg;
  auto summary = [&](const Corpus& c) {
    const auto s = metrics::score_corpus(c, lm, {512, 256}, &ncfg, true, 4);
    return metrics::summarize(s.nll, s.ngram, c.dataset, "ref");
  };
  const auto sa = summary(a), sb = summary(b);
  out.detail = fmt::format("NLL A={:.3f} B={:.3f}; 5-gram A={:.3f} B={:.3f}", sa.mean_nll, sb.mean_nll,
                           sa.mean_ngram, sb.mean_ngram);
  out.ok = sa.mean_nll < sb.mean_nll - 0.5 && sa.mean_ngram >= sb.mean_ngram + 0.3;
  return out;
}

// ---- 3 ---------------------------------------------------------------------

Outcome oracles() {
  Outcome out;
  std::mt19937_64 rng(303);
  const auto text = random_text(rng, 1500);
  const auto echo = oracle::Echo::from_texts({text}, 256);
  const auto tokens = echo.tokenize(text);
  const double echo_nll = metrics::strided_nll(tokens, echo, {256, 128}).nll;
  const double echo_acc = metrics::ngram_accuracy(tokens, echo, {256, 128}, {}).accuracy;
  oracle::ConstantAdversary adv(256);
  const double adv_acc = metrics::ngram_accuracy(adv.tokenize(text), adv, {256, 128}, {}).accuracy;
  oracle::Uniform uni(256);
  const double uni_nll = metrics::strided_nll(uni.tokenize(text), uni, {256, 128}).nll;
  out.expect(echo_nll == 0.0, fmt::format("echo NLL {}", echo_nll));
  out.expect(echo_acc == 1.0, fmt::format("echo accuracy {}", echo_acc));
  out.expect(adv_acc == 0.0, fmt::format("adversary accuracy {}", adv_acc));
  out.expect(std::abs(uni_nll - std::log(16.0)) <= 1e-12, fmt::format("uniform NLL {:.15f}", uni_nll));
  if (out.ok) out.detail = fmt::format("echo 0.0/1.0, adversary 0.0, uniform-16 |d|={:.1e}", std::abs(uni_nll - std::log(16.0)));
  return out;
}

// ---- 4 and 5 -----------------------------------------------------------------

std::vector<metrics::DatasetSummary> published() {
  return metrics::parse_summaries(util::read_csv(kRepoData / "reference_tables" / "summaries.csv"));
}

std::vector<metrics::DatasetSummary> for_model(const std::string& model) {
  std::vector<metrics::DatasetSummary> out;
  for (const auto& s : published()) if (s.model == model) out.push_back(s);
  return out;
}

Outcome ratios() {
  Outcome out;
  const auto codegen = analysis::ratio_matrix(for_model("codegen-6B-multi"));
  const auto llama = analysis::ratio_matrix(for_model("Llama-3.1-70B"));
  const double new_java = codegen.at("Defects4J", "NewJava");
  const double gitbug = codegen.at("Defects4J", "GitBugJava");
  const double llama_cell = llama.at("Defects4J", "GitBugJava");
  out.expect(std::abs(new_java - 5.63) <= 0.10, fmt::format("codegen NewJava/Defects4J {:.3f}", new_java));
  out.expect(std::abs(gitbug - 3.82) <= 0.10, fmt::format("codegen GitBug/Defects4J {:.3f}", gitbug));
  out.expect(std::abs(llama_cell - 1.27) <= 0.02, fmt::format("Llama 70B GitBug/Defects4J {:.3f}", llama_cell));
  out.detail = fmt::format("{:.2f} (5.63), {:.2f} (3.82), {:.2f} (1.27)", new_java, gitbug, llama_cell) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome regression() {
  Outcome out;
  const auto models = analysis::parse_models(util::read_csv(kRepoData / "reference_tables" / "models.csv"));
  auto fit = [&](analysis::Response r) {
    return analysis::fit_mixed_model(analysis::center_predictors(analysis::build_rows(published(), models, r).rows), r);
  };
  const auto nll = fit(analysis::Response::nll), ng = fit(analysis::Response::ngram);
  auto est = [](const analysis::RegressionFit& f, const char* term) { return f.coefficient(term).estimate; };
  out.expect(est(nll, "Parameters") < 0 && est(nll, "Training budget") < 0, "NLL slope signs");
  out.expect(est(nll, "Intercept") > 0 && est(ng, "Intercept") > 0, "intercept signs");
  out.expect(est(ng, "Parameters") > 0 && est(ng, "Training budget") > 0, "5-gram slope signs");
  out.expect(std::abs(est(nll, "Intercept") - 0.744) <= 0.10, "NLL intercept");
  out.expect(std::abs(est(ng, "Intercept") - 0.465) <= 0.10, "5-gram intercept");

  // Planted coefficients on a crossed design with no noise.
  const double params[] = {2, 6, 7, 13, 27, 70}, budget[] = {1, 2, 3.5, 6.5, 13, 15};
  const char* family[] = {"fa", "fb", "fa", "fc", "fb", "fc"};
  std::vector<analysis::RegressionRow> rows;
  for (std::size_t m = 0; m < 6; ++m) {
    for (std::size_t d = 0; d < 5; ++d) {
      rows.push_back({"m" + std::to_string(m), params[m], budget[m], "d" + std::to_string(d), family[m],
                      0.7 - 0.003 * params[m] + 0.02 * budget[m]});
    }
  }
  const auto planted = analysis::fit_mixed_model(rows, analysis::Response::nll);
  const double err = std::max({std::abs(est(planted, "Intercept") - 0.7), std::abs(est(planted, "Parameters") + 0.003),
                               std::abs(est(planted, "Training budget") - 0.02)});
  out.expect(err <= 1e-8, fmt::format("planted recovery error {:.2e}", err));
  out.detail = fmt::format("NLL {:.3f}/{:.4f}/{:.4f}, 5-gram {:.3f}/{:.4f}/{:.4f}, planted |d|={:.1e}",
                           est(nll, "Intercept"), est(nll, "Parameters"), est(nll, "Training budget"),
                           est(ng, "Intercept"), est(ng, "Parameters"), est(ng, "Training budget"), err) +
               (out.ok ? "" : "; " + out.detail);
  return out;
}

// ---- 6 ---------------------------------------------------------------------

Corpus repos_corpus(const std::string& dataset, const std::vector<std::string>& repos, std::size_t files) {
  std::vector<Document> docs;
  for (const auto& r : repos) {
    for (std::size_t f = 0; f < files; ++f) {
      auto d = testing_support::doc(r + "/f" + std::to_string(f), "x", {}, "java", dataset);
      d.repo = r;
      docs.push_back(d);
    }
  }
  return testing_support::corpus_of(docs, dataset);
}

Outcome membership_table() {
  Outcome out;
  std::vector<std::string> ten, eight;
  for (int i = 0; i < 10; ++i) ten.push_back("org/r" + std::to_string(i));
  std::string index_text;
  for (int i = 0; i < 8; ++i) index_text += ten[static_cast<std::size_t>(i)] + "\n";
  const auto small = membership::membership_rate(repos_corpus("d", ten, 3), {membership::parse_index(index_text, "v")});
  out.expect(membership::format_tenths(small.rates.at(0).tenths) == "80.0", "8 of 10 is not 80.0");

  const auto dir = kTestData / "membership";
  std::vector<membership::MembershipIndex> indexes;
  for (const char* v : {"v1.0", "v2.0", "v2.1"}) indexes.push_back(membership::load_index(dir / (std::string(v) + ".txt")));
  const auto table = util::read_csv(dir / "benchmarks.csv");
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::string>> repos;
  for (const auto& row : table.rows) {
    if (!repos.count(row[0])) order.push_back(row[0]);
    repos[row[0]].push_back(row[1]);
  }
  std::vector<membership::MembershipReport> reports;
  for (const auto& name : order) reports.push_back(membership::membership_rate(repos_corpus(name, repos[name], 2), indexes));
  out.expect(membership::membership_table_csv(reports) == util::read_file(dir / "table_iii.csv"),
             "table differs from golden file");
  if (out.ok) out.detail = fmt::format("8/10 -> 80.0; {}-row table matches golden byte-for-byte", reports.size());
  return out;
}

// ---- 7 ---------------------------------------------------------------------

std::set<std::string> shingle_strings(const std::string& text, std::size_t w) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string t; in >> t;) tokens.push_back(t);
  std::set<std::string> out;
  for (std::size_t i = 0; i + w <= tokens.size(); ++i) {
    std::string s;
    for (std::size_t k = 0; k < w; ++k) s += (k ? " " : "") + tokens[i + k];
    out.insert(s);
  }
  return out;
}

double exact_jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t inter = 0;
  for (const auto& s : a) inter += b.count(s);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

std::string mutate(const std::string& text, std::size_t edits, std::mt19937_64& rng) {
  std::vector<std::string> words;
  std::istringstream in(text);
  for (std::string t; in >> t;) words.push_back(t);
  for (std::size_t e = 0; e < edits; ++e) words[rng() % words.size()] = "edit" + std::to_string(rng() % 1000000);
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

Outcome dedup_fidelity() {
  Outcome out;
  std::mt19937_64 rng(707);
  const dedup::DedupConfig cfg;
  std::vector<Document> docs;
  int day = 0;
  auto next_date = [&] {
    ++day;
    return Date::from_sys_days(std::chrono::sys_days{std::chrono::year{2020} / 1 / 1} + std::chrono::days{day});
  };
  while (docs.size() < 200) {
    const auto base = testing_support::random_words(rng, 400);
    const std::size_t size = std::min<std::size_t>(1 + rng() % 5, 200 - docs.size());
    for (std::size_t c = 0; c < size; ++c) {
      const auto text = c == 0 ? base : mutate(base, rng() % 2, rng);
      docs.push_back(testing_support::doc(fmt::format("d{:03}", docs.size()), text, next_date()));
    }
  }
  // Shuffle dates so the oldest member is not always the base text.
  std::vector<Date> dates;
  for (const auto& d : docs) dates.push_back(*d.created_at);
  std::shuffle(dates.begin(), dates.end(), rng);
  for (std::size_t i = 0; i < docs.size(); ++i) docs[i].created_at = dates[i];
  const auto corpus = testing_support::corpus_of(docs);

  // Brute-force oracle over exact shingle-string Jaccard.
  std::vector<std::set<std::string>> sets;
  for (const auto& d : corpus.documents) sets.push_back(shingle_strings(d.content, cfg.w));
  const std::size_t n = sets.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::set<std::string> exempt;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double jac = exact_jaccard(sets[i], sets[j]);
      if (std::abs(jac - cfg.overlap_threshold) <= 0.02) {
        exempt.insert(corpus.documents[i].id);
        exempt.insert(corpus.documents[j].id);
      }
      if (jac >= cfg.overlap_threshold) {
        parent[find(i)] = find(j);
        ++edges;
      }
    }
  }
  std::map<std::size_t, std::size_t> oldest;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = oldest.emplace(find(i), i);
    if (!fresh && *corpus.documents[i].created_at < *corpus.documents[it->second].created_at) it->second = i;
  }
  std::set<std::string> expected, actual;
  for (const auto& [root, i] : oldest) expected.insert(corpus.documents[i].id);
  for (const auto& d : dedup::apply_overlap_filter(corpus, cfg).documents) actual.insert(d.id);
  std::size_t disagreements = 0;
  for (const auto& d : corpus.documents) {
    if (!exempt.count(d.id) && expected.count(d.id) != actual.count(d.id)) ++disagreements;
  }
  out.expect(disagreements == 0, fmt::format("{} survivor disagreements", disagreements));

  // Estimator error at several true Jaccard levels.
  double abs_err = 0.0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    const std::size_t common = 20 + rng() % 160, only = 10 + rng() % 60;
    std::vector<std::uint64_t> a, b;
    for (std::size_t i = 0; i < common; ++i) a.push_back(rng());
    b = a;
    for (std::size_t i = 0; i < only; ++i) a.push_back(rng());
    for (std::size_t i = 0; i < only; ++i) b.push_back(rng());
    const double truth = static_cast<double>(common) / static_cast<double>(common + 2 * only);
    auto as_set = [](std::vector<std::uint64_t> v) {
      std::sort(v.begin(), v.end());
      return dedup::ShingleSet{v, 1};
    };
    const std::uint64_t seed = rng();
    abs_err += std::abs(dedup::estimate_jaccard(dedup::signature(as_set(a), cfg.k, seed),
                                                dedup::signature(as_set(b), cfg.k, seed)) - truth);
  }
  abs_err /= trials;
  out.expect(abs_err <= 0.05, fmt::format("MinHash mean abs error {:.4f}", abs_err));
  if (out.ok) {
    out.detail = fmt::format("{} docs, {} oracle edges, {} survivors agree ({} near-threshold exempt); MinHash MAE {:.4f}",
                             n, edges, expected.size(), exempt.size(), abs_err);
  }
  return out;
}

// ---- 8 ---------------------------------------------------------------------

template <typename Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

Outcome wire_protocol() {
  using testing_support::MockServer;
  using testing_support::SleepLog;
  Outcome out;
  MockServer mock;
  SleepLog log;
  RemoteBackend b(mock.url(), log.options(4));
  out.expect(b.descriptor().name == "mock" && b.descriptor().context_window == 32, "/v1/info handshake");

  out.expect(b.score({1, 2, 3, 4}).logprobs.size() == 3, "/v1/score t-1 logprobs");
  mock.script("/v1/score", {200, {{"logprobs", {-1.0, -1.0, -1.0, -1.0}}}});
  out.expect(error_kind([&] { b.score({1, 2, 3, 4}); }) == ErrorKind::protocol, "t logprobs not rejected");
  mock.script("/v1/score", {200, {{"logprobs", {-1.0, 0.5, -1.0}}}});
  out.expect(error_kind([&] { b.score({1, 2, 3, 4}); }) == ErrorKind::protocol, "positive logprob not rejected");
  mock.script("/v1/score", {200, nlohmann::json()});
  out.expect(error_kind([&] { b.score({1, 2, 3, 4}); }) == ErrorKind::protocol, "non-JSON body not rejected");

  out.expect(b.greedy_continue({1, 2}, 4) == TokenSeq(4, 3), "/v1/greedy continuation");
  mock.script("/v1/greedy", {200, {{"tokens", {1, 2}}}});
  out.expect(error_kind([&] { b.greedy_continue({1, 2}, 4); }) == ErrorKind::protocol, "short greedy not rejected");
  mock.script("/v1/greedy", {200, {{"tokens", {1, 2, 99, 1}}}});
  out.expect(error_kind([&] { b.greedy_continue({1, 2}, 4); }) == ErrorKind::protocol, "out-of-vocab not rejected");

  const auto before = b.attempts_made();
  mock.script("/v1/score", {500, {{"error", "boom"}}});
  mock.script("/v1/score", {503, {{"error", "busy"}}});
  out.expect(b.score({1, 2, 3}).logprobs.size() == 2 && b.attempts_made() - before == 3, "5xx retry");
  const auto keys = mock.keys("/v1/score");
  out.expect(keys.size() >= 3 && keys[keys.size() - 1] == keys[keys.size() - 3], "idempotency key reused on retry");

  log.sleeps.clear();
  mock.script("/v1/score", {429, {{"error", "slow down"}}, {{"Retry-After", "2"}}});
  out.expect(b.score({1, 2, 3}).logprobs.size() == 2, "429 retry");
  out.expect(log.sleeps.size() == 1 && log.sleeps[0] == std::chrono::seconds(2), "Retry-After honoured");

  mock.script("/v1/score", {400, {{"error", "bad"}}});
  const auto before_400 = b.attempts_made();
  out.expect(error_kind([&] { b.score({1, 2, 3}); }) == ErrorKind::transport && b.attempts_made() - before_400 == 1,
             "4xx retried or misclassified");
  out.expect(error_kind([&] { b.score({1}); }) == ErrorKind::too_short, "local length check");
  if (out.ok) out.detail = "info, score t-1, greedy, 5xx/429 retry, protocol errors against a local mock";
  return out;
}

// ---- 9 ---------------------------------------------------------------------

std::map<std::string, std::string> run_toy(const fs::path& out_dir, std::size_t workers) {
  audit::Overrides o;
  o.out = out_dir;
  o.parallelism = workers;
  const auto cfg = audit::load_config(kRepoData / "toy" / "toy.toml", o);
  audit::cmd_ingest(cfg);
  audit::cmd_dedup(cfg);
  audit::cmd_nll(cfg);
  audit::cmd_ngram(cfg);
  audit::cmd_membership(cfg);
  audit::cmd_analyze(cfg);
  audit::cmd_report(cfg);
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(out_dir)) {
    const auto ext = e.path().extension();
    if (e.is_regular_file() && (ext == ".csv" || ext == ".jsonl")) {
      files[fs::relative(e.path(), out_dir).string()] = util::read_file(e.path());
    }
  }
  return files;
}

Outcome determinism() {
  Outcome out;
  testing_support::TempDir first, second;
  const auto a = run_toy(first.path(), 1), b = run_toy(second.path(), 3);
  out.expect(!a.empty(), "no artifacts produced");
  out.expect(a.size() == b.size(), "artifact sets differ");
  std::size_t bytes = 0;
  for (const auto& [name, body] : a) {
    auto it = b.find(name);
    out.expect(it != b.end() && it->second == body, name + " differs");
    bytes += body.size();
  }
  if (out.ok) out.detail = fmt::format("{} CSV/JSONL artifacts ({} bytes) identical across runs", a.size(), bytes);
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Striding exactness", 10, striding},
      {2, "Memorization signal", 60, memorization},
      {3, "Oracle extremes", 0, oracles},
      {4, "Ratio-matrix replay", 1, ratios},
      {5, "Regression replay", 5, regression},
      {6, "Membership arithmetic and table layout", 0, membership_table},
      {7, "Dedup fidelity", 30, dedup_fidelity},
      {8, "Wire-protocol conformance", 0, wire_protocol},
      {9, "End-to-end determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      r.ok = false;
      r.detail += fmt::format(" (runtime {:.2f}s over {}s limit)", secs, c.limit_s);
    }
    failures += !r.ok;
    std::cout << fmt::format("{} [{}] {}: {} ({:.2f}s)", r.ok ? "PASS" : "FAIL", c.id, c.name, r.detail, secs)
              << std::endl;
  }
  std::cout << fmt::format("{}/{} criteria passed", criteria.size() - static_cast<std::size_t>(failures),
                           criteria.size())
            << std::endl;
  return failures == 0 ? 0 : 1;
}
