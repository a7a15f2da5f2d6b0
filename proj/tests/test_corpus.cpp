#include <gtest/gtest.h>

#include <set>

#include <fmt/format.h>

#include "leakaudit/corpus.hpp"
#include "support.hpp"

using namespace leakaudit;
using testing_support::corpus_of;
using testing_support::doc;
using testing_support::TempDir;

namespace {

std::string manifest_line(const std::string& id, const std::string& path, const std::string& extra = "") {
  return "{\"id\":\"" + id + "\",\"dataset\":\"d4j\",\"language\":\"java\",\"path\":\"" + path + "\"" + extra + "}\n";
}

Date ymd(int y, unsigned m = 1, unsigned d = 1) { return Date{y, m, d}; }

}  // namespace

TEST(LoadManifest, LoadsEntriesSortedById) {
  TempDir dir;
  dir.write("src/B.java", "class B {}");
  dir.write("src/A.java", "class A {}");
  dir.write("src/C.java", "class C {}");
  const auto m = dir.write("m.jsonl", manifest_line("c", "src/C.java") +
                                          manifest_line("a", "src/A.java", ",\"repo\":\"o/r\",\"created_at\":\"2015-02-03\"") +
                                          manifest_line("b", "src/B.java"));
  const auto corpus = load_manifest(m, dir.path());
  ASSERT_EQ(corpus.size(), 3u);
  EXPECT_EQ(corpus.documents[0].id, "a");
  EXPECT_EQ(corpus.documents[0].content, "class A {}");
  EXPECT_EQ(corpus.documents[0].repo, "o/r");
  EXPECT_EQ(corpus.documents[0].created_at, ymd(2015, 2, 3));
  EXPECT_EQ(corpus.dataset, "d4j");
}

TEST(LoadManifest, MissingFileIsNamed) {
  TempDir dir;
  const auto m = dir.write("m.jsonl", manifest_line("x", "x.java"));
  try {
    load_manifest(m, dir.path());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ingestion);
    EXPECT_NE(std::string(e.what()).find("x.java"), std::string::npos);
  }
}

TEST(LoadManifest, EmptyManifestGivesEmptyCorpus) {
  TempDir dir;
  EXPECT_TRUE(load_manifest(dir.write("m.jsonl", ""), dir.path()).empty());
}

TEST(LoadManifest, MalformedLineReportsLineNumber) {
  TempDir dir;
  dir.write("a.java", "x");
  const auto m = dir.write("m.jsonl", manifest_line("a", "a.java") + "{not json\n");
  try {
    load_manifest(m, dir.path());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(LoadManifest, DuplicateIdIsValidationError) {
  TempDir dir;
  dir.write("a.java", "x");
  const auto m = dir.write("m.jsonl", manifest_line("a", "a.java") + manifest_line("a", "a.java"));
  try {
    load_manifest(m, dir.path());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
}

TEST(LoadManifest, RejectsEscapingPathsAndNonUtf8) {
  TempDir dir;
  dir.write("root/ok.java", "x");
  dir.write("outside.java", "x");
  dir.write("root/bin.dat", std::string("\xff\xfe\x00", 3));
  EXPECT_THROW(load_manifest(dir.write("root/m1.jsonl", manifest_line("a", "../outside.java")), dir / "root"), Error);
  try {
    load_manifest(dir.write("root/m2.jsonl", manifest_line("b", "bin.dat")), dir / "root");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ingestion);
  }
}

TEST(Snapshot, SaveLoadRoundTrip) {
  TempDir dir;
  auto c = corpus_of({doc("b", "two", ymd(2020)), doc("a", "one\nline", std::nullopt)});
  c.documents[0].repo = "org/name";
  c.documents[0].commit = "abc123";
  save_corpus(dir / "c.jsonl", c, util::ArtifactMeta{"ingest", "h", 1});
  const auto back = load_corpus(dir / "c.jsonl");
  EXPECT_EQ(back.documents, c.documents);
}

TEST(KeepOldest, EarliestDateWins) {
  const auto c = corpus_of({doc("A", "x", ymd(2015)), doc("B", "y", ymd(2018))});
  const auto out = keep_oldest(c, {{"A", "B"}});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.documents[0].id, "A");
}

TEST(KeepOldest, TieBrokenBySmallestId) {
  const auto c = corpus_of({doc("b2", "x", ymd(2015)), doc("a1", "y", ymd(2015))});
  EXPECT_EQ(keep_oldest(c, {{"a1", "b2"}}).documents.at(0).id, "a1");
}

TEST(KeepOldest, EmptyGroupListIsIdentity) {
  const auto c = corpus_of({doc("a", "x"), doc("b", "y")});
  EXPECT_EQ(keep_oldest(c, {}).documents, c.documents);
}

TEST(KeepOldest, UndatedSortsAsNewest) {
  const auto c = corpus_of({doc("a", "x", std::nullopt), doc("z", "y", ymd(2023))});
  EXPECT_EQ(keep_oldest(c, {{"a", "z"}}).documents.at(0).id, "z");
}

TEST(KeepOldest, UnknownIdIsValidationError) {
  const auto c = corpus_of({doc("a", "x")});
  try {
    keep_oldest(c, {{"a", "ghost"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
}

TEST(KeepOldest, PreservesOutOfGroupDocumentsAndNeverGrows) {
  std::vector<Document> docs;
  for (int i = 0; i < 12; ++i) docs.push_back(doc("d" + std::to_string(10 + i), "c" + std::to_string(i), ymd(2010 + i)));
  const auto c = corpus_of(docs);
  const auto out = keep_oldest(c, {{"d10", "d11", "d12"}, {"d15", "d20"}});
  EXPECT_EQ(out.size(), c.size() - 3);
  for (const auto& d : c.documents) {
    if (d.id == "d11" || d.id == "d12" || d.id == "d20") {
      EXPECT_EQ(out.find(d.id), nullptr);
    } else {
      ASSERT_NE(out.find(d.id), nullptr);
      EXPECT_EQ(*out.find(d.id), d);
    }
  }
}

namespace {

Corpus java_files(int n) {
  std::vector<Document> docs;
  for (int i = 0; i < n; ++i) docs.push_back(doc(fmt::format("f{:04d}", i), "content " + std::to_string(i)));
  return corpus_of(docs);
}

std::set<std::string> ids(const Corpus& c) {
  std::set<std::string> out;
  for (const auto& d : c.documents) out.insert(d.id);
  return out;
}

}  // namespace

TEST(Sample, DrawsRequestedCountDeterministically) {
  const auto c = java_files(1000);
  const auto a = sample(c, 250, 7);
  EXPECT_EQ(a.size(), 250u);
  EXPECT_EQ(ids(a).size(), 250u);
  EXPECT_EQ(sample(c, 250, 7).documents, a.documents);
  for (const auto& d : a.documents) EXPECT_NE(c.find(d.id), nullptr);
}

TEST(Sample, UndersizedCorpusReturnsEverything) {
  const auto c = java_files(10);
  EXPECT_EQ(sample(c, 250, 7).documents, c.documents);
}

TEST(Sample, SeedsGiveDifferentSamples) {
  const auto c = java_files(1000);
  EXPECT_NE(ids(sample(c, 250, 7)), ids(sample(c, 250, 8)));
}

TEST(Sample, PerLanguageQuota) {
  std::vector<Document> docs;
  for (int i = 0; i < 30; ++i) docs.push_back(doc("j" + std::to_string(i), "x", std::nullopt, "java"));
  for (int i = 0; i < 4; ++i) docs.push_back(doc("p" + std::to_string(i), "x", std::nullopt, "python"));
  const auto s = sample(corpus_of(docs), 10, 3);
  std::map<std::string, int> per;
  for (const auto& d : s.documents) ++per[d.language];
  EXPECT_EQ(per["java"], 10);
  EXPECT_EQ(per["python"], 4);
}
