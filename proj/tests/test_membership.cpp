#include <gtest/gtest.h>

#include "leakaudit/membership.hpp"
#include "support.hpp"

using namespace leakaudit;
using namespace leakaudit::membership;

namespace {

const std::filesystem::path kFixtures = std::filesystem::path(LEAKAUDIT_TEST_DATA) / "membership";

Corpus repos_corpus(const std::string& dataset, const std::vector<std::string>& repos,
                    std::size_t files_per_repo = 1) {
  std::vector<Document> docs;
  for (const auto& r : repos) {
    for (std::size_t f = 0; f < files_per_repo; ++f) {
      auto d = testing_support::doc(r + "/f" + std::to_string(f), "x", {}, "java", dataset);
      d.repo = r;
      docs.push_back(d);
    }
  }
  return testing_support::corpus_of(docs, dataset);
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("org/r" + std::to_string(i));
  return out;
}

MembershipIndex index_of(const std::vector<std::string>& repos, std::string version = "v") {
  std::string text;
  for (const auto& r : repos) text += r + "\n";
  return parse_index(text, std::move(version));
}

}  // namespace

TEST(LoadIndex, NormalizesAndDeduplicates) {
  testing_support::TempDir dir;
  const auto idx = load_index(dir.write("v1.0.txt", "# snapshot\nApache/Commons-Lang\napache/commons-lang\n\n  google/guava  \n"));
  EXPECT_EQ(idx.version, "v1.0");
  EXPECT_TRUE(idx.contains("apache/commons-lang"));
  EXPECT_EQ(idx.repos.size(), 2u);
}

TEST(LoadIndex, EmptyFileIsValid) {
  testing_support::TempDir dir;
  EXPECT_TRUE(load_index(dir.write("empty.txt", "")).repos.empty());
}

TEST(LoadIndex, MalformedLineReportsLineNumber) {
  try {
    parse_index("a/b\nnoslash\n", "v");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  EXPECT_THROW(parse_index("a/b/c\n", "v"), Error);
  EXPECT_THROW(load_index("/nonexistent/index.txt"), Error);
}

TEST(MembershipRate, EightOfTen) {
  const auto repos = numbered(10);
  const auto report = membership_rate(repos_corpus("d", repos, 3), {index_of({repos.begin(), repos.begin() + 8})});
  ASSERT_EQ(report.rates.size(), 1u);
  EXPECT_EQ(report.rates[0].present, 8u);
  EXPECT_EQ(report.rates[0].total, 10u);
  EXPECT_EQ(format_tenths(report.rates[0].tenths), "80.0");
}

TEST(MembershipRate, EmptyIndexIsZero) {
  const auto report = membership_rate(repos_corpus("d", numbered(4)), {MembershipIndex{"v", {}}});
  EXPECT_EQ(format_tenths(report.rates[0].tenths), "0.0");
}

TEST(MembershipRate, HalfUpRounding) {
  EXPECT_EQ(format_tenths(percent_tenths(1, 3)), "33.3");
  EXPECT_EQ(format_tenths(percent_tenths(2, 3)), "66.7");
  EXPECT_EQ(format_tenths(percent_tenths(1, 8)), "12.5");
  EXPECT_EQ(format_tenths(percent_tenths(1, 16)), "6.3");
  EXPECT_EQ(format_tenths(percent_tenths(1, 1)), "100.0");
}

TEST(MembershipRate, CountsDistinctReposNotFiles) {
  auto c = repos_corpus("d", {"a/x", "b/y"});
  for (int i = 0; i < 9; ++i) {
    auto d = testing_support::doc("more" + std::to_string(i), "x", {}, "java", "d");
    d.repo = "A/X";
    c.documents.push_back(d);
  }
  const auto report = membership_rate(c, {index_of({"a/x"})});
  EXPECT_EQ(report.rates[0].total, 2u);
  EXPECT_EQ(format_tenths(report.rates[0].tenths), "50.0");
}

TEST(MembershipRate, DocumentsWithoutRepoAreCountedAndExcluded) {
  auto c = repos_corpus("d", {"a/x"});
  c.documents.push_back(testing_support::doc("loose", "x"));
  const auto report = membership_rate(c, {index_of({"a/x"})});
  EXPECT_EQ(report.documents_without_repo, 1u);
  EXPECT_EQ(format_tenths(report.rates[0].tenths), "100.0");
  EXPECT_THROW(membership_rate(testing_support::corpus_of({testing_support::doc("n", "x")}), {}), Error);
}

TEST(MembershipRate, MonotoneInIndexEntries) {
  const auto repos = numbered(20);
  std::vector<std::string> entries;
  std::size_t last = 0;
  for (std::size_t i = 0; i < 25; ++i) {
    entries.push_back(i < 20 ? repos[(i * 7) % 20] : "other/z" + std::to_string(i));
    const auto t = membership_rate(repos_corpus("d", repos), {index_of(entries)}).rates[0].tenths;
    EXPECT_GE(t, last);
    last = t;
  }
  EXPECT_EQ(last, 1000u);
}

TEST(MembershipRate, SimilarNamesSurfaceInDetail) {
  const auto report = membership_rate(repos_corpus("d", {"alice/tool", "bob/lib"}), {index_of({"mirror/tool"}, "v2")});
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].repo, "alice/tool");
  EXPECT_EQ(report.rows[0].similar, std::vector<std::string>{"v2:mirror/tool"});
  EXPECT_FALSE(report.rows[0].present[0]);
  const auto csv = membership_detail_csv({report});
  EXPECT_EQ(csv, "dataset,repo,v2,similar\nd,alice/tool,0,v2:mirror/tool\nd,bob/lib,0,\n");
}

TEST(MembershipTable, PublishedRowsFromFixtures) {
  std::vector<MembershipIndex> indexes;
  for (const char* v : {"v1.0", "v2.0", "v2.1"}) indexes.push_back(load_index(kFixtures / (std::string(v) + ".txt")));
  const auto table = util::read_csv(kFixtures / "benchmarks.csv");
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::string>> repos;
  for (const auto& row : table.rows) {
    if (!repos.count(row[0])) order.push_back(row[0]);
    repos[row[0]].push_back(row[1]);
  }
  std::vector<MembershipReport> reports;
  for (const auto& name : order) reports.push_back(membership_rate(repos_corpus(name, repos[name], 2), indexes));
  EXPECT_EQ(membership_table_csv(reports), util::read_file(kFixtures / "table_iii.csv"));
}
