#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "leakaudit/corpus.hpp"
#include "leakaudit/error.hpp"
#include "leakaudit/util/csv.hpp"
#include "leakaudit/util/fs.hpp"

namespace leakaudit::membership {

/// Snapshot of the repositories contained in one pretraining-dataset version.
struct MembershipIndex {
  std::string version;
  std::set<std::string> repos;  // lowercase "org/name"

  bool contains(const std::string& normalized) const { return repos.count(normalized) > 0; }
};

/// Lowercased "org/name", or empty when the input is not of that shape.
inline std::string normalize_repo(std::string_view raw) {
  auto s = std::string(util::trim(raw));
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto slash = s.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == s.size() ||
      s.find('/', slash + 1) != std::string::npos) {
    return {};
  }
  return s;
}

inline MembershipIndex parse_index(std::string_view text, std::string version) {
  MembershipIndex index{std::move(version), {}};
  std::size_t line_no = 0;
  for (auto line : util::split_lines(text)) {
    ++line_no;
    const auto trimmed = util::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    auto repo = normalize_repo(trimmed);
    if (repo.empty()) {
      throw Error(ErrorKind::parse,
                  with_line("index entry is not 'org/name': " + std::string(trimmed), line_no));
    }
    index.repos.insert(std::move(repo));
  }
  return index;
}

/// One repo per line; the version label defaults to the file stem.
inline MembershipIndex load_index(const std::filesystem::path& path, std::string version = "") {
  if (version.empty()) version = path.stem().string();
  return parse_index(util::read_file(path), std::move(version));
}

struct VersionRate {
  std::string version;
  std::size_t present = 0;
  std::size_t total = 0;
  /// Percentage in tenths, rounded half-up: 80.0% is 800.
  std::size_t tenths = 0;
};

struct RepoRow {
  std::string repo;
  std::vector<bool> present;  // parallel to the report's versions
  /// Same repository name under a different owner, as "version:owner/name".
  std::vector<std::string> similar;
};

struct MembershipReport {
  std::string dataset;
  std::vector<VersionRate> rates;
  std::vector<RepoRow> rows;
  std::size_t documents_without_repo = 0;
};

inline std::size_t percent_tenths(std::size_t present, std::size_t total) {
  return (2000 * present + total) / (2 * total);
}

inline std::string format_tenths(std::size_t tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

inline MembershipReport membership_rate(const Corpus& corpus,
                                        const std::vector<MembershipIndex>& indexes) {
  MembershipReport report;
  report.dataset = corpus.dataset;
  std::set<std::string> repos;
  for (const auto& d : corpus.documents) {
    if (!d.repo) {
      ++report.documents_without_repo;
      continue;
    }
    auto r = normalize_repo(*d.repo);
    if (r.empty()) throw Error(ErrorKind::validation, "document " + d.id + " has malformed repo '" + *d.repo + "'");
    repos.insert(std::move(r));
  }
  if (repos.empty()) {
    throw Error(ErrorKind::validation,
                "corpus '" + corpus.dataset + "' has no documents with a repository");
  }
  // name -> owners, per index, for the near-miss detail column
  std::vector<std::map<std::string, std::vector<std::string>>> by_name(indexes.size());
  for (std::size_t v = 0; v < indexes.size(); ++v) {
    for (const auto& r : indexes[v].repos) by_name[v][r.substr(r.find('/') + 1)].push_back(r);
  }
  for (const auto& index : indexes) report.rates.push_back({index.version, 0, repos.size(), 0});
  for (const auto& repo : repos) {
    RepoRow row{repo, {}, {}};
    const auto name = repo.substr(repo.find('/') + 1);
    for (std::size_t v = 0; v < indexes.size(); ++v) {
      const bool hit = indexes[v].contains(repo);
      row.present.push_back(hit);
      report.rates[v].present += hit;
      if (hit) continue;
      auto it = by_name[v].find(name);
      if (it == by_name[v].end()) continue;
      for (const auto& other : it->second) row.similar.push_back(indexes[v].version + ":" + other);
    }
    report.rows.push_back(std::move(row));
  }
  for (auto& rate : report.rates) rate.tenths = percent_tenths(rate.present, rate.total);
  return report;
}

/// Table with one row per dataset and one percentage column per version.
inline std::string membership_table_csv(const std::vector<MembershipReport>& reports) {
  if (reports.empty()) return {};
  util::CsvRow header{"dataset"};
  for (const auto& r : reports.front().rates) header.push_back(r.version + " (%)");
  std::string out = util::csv_line(header);
  for (const auto& report : reports) {
    util::CsvRow row{report.dataset};
    for (const auto& r : report.rates) row.push_back(format_tenths(r.tenths));
    out += util::csv_line(row);
  }
  return out;
}

inline std::string membership_detail_csv(const std::vector<MembershipReport>& reports) {
  if (reports.empty()) return {};
  util::CsvRow header{"dataset", "repo"};
  for (const auto& r : reports.front().rates) header.push_back(r.version);
  header.push_back("similar");
  std::string out = util::csv_line(header);
  for (const auto& report : reports) {
    for (const auto& row : report.rows) {
      util::CsvRow line{report.dataset, row.repo};
      for (bool p : row.present) line.push_back(p ? "1" : "0");
      std::string similar;
      for (const auto& s : row.similar) similar += (similar.empty() ? "" : ";") + s;
      line.push_back(similar);
      out += util::csv_line(line);
    }
  }
  return out;
}

}  // namespace leakaudit::membership
