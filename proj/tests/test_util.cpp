#include <gtest/gtest.h>

#include "leakaudit/toml_lite.hpp"
#include "leakaudit/util/base64.hpp"
#include "leakaudit/util/csv.hpp"
#include "leakaudit/util/date.hpp"
#include "leakaudit/util/hash.hpp"
#include "leakaudit/util/jsonl.hpp"
#include "leakaudit/util/parallel.hpp"
#include "leakaudit/util/utf8.hpp"
#include "support.hpp"

using namespace leakaudit;

TEST(Csv, EscapesAndRoundTrips) {
  const util::CsvRow row{"plain", "with,comma", "with \"quote\"", ""};
  const auto line = util::csv_line(row);
  EXPECT_EQ(line, "plain,\"with,comma\",\"with \"\"quote\"\"\",\n");
  EXPECT_EQ(util::parse_csv_line(line.substr(0, line.size() - 1), 1), row);
}

TEST(Csv, SkipsCommentsAndChecksWidth) {
  const auto t = util::parse_csv("# note\na,b\n1,2\n");
  EXPECT_EQ(t.comments.size(), 1u);
  EXPECT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.column("b"), 1u);
  EXPECT_THROW(util::parse_csv("a,b\n1\n"), Error);
  EXPECT_THROW(t.column("zzz"), Error);
}

TEST(Date, ParsesDatesAndTimestamps) {
  EXPECT_EQ(Date::parse("2024-03-01")->str(), "2024-03-01");
  EXPECT_EQ(Date::parse("2023-12-31T23:59:59Z")->str(), "2023-12-31");
  EXPECT_FALSE(Date::parse("2023-02-30"));
  EXPECT_FALSE(Date::parse("yesterday"));
  EXPECT_LT(*Date::parse("2023-12-31"), *Date::parse("2024-01-01"));
}

TEST(Utf8, RejectsInvalidAndNul) {
  EXPECT_TRUE(util::is_valid_utf8("héllo ✓"));
  EXPECT_FALSE(util::is_valid_utf8(std::string("\xff\xfe", 2)));
  EXPECT_FALSE(util::is_valid_utf8(std::string("a\0b", 3)));
  EXPECT_FALSE(util::is_valid_utf8("\xc3"));
}

TEST(Base64, RoundTrip) {
  for (const std::string& s : std::vector<std::string>{"", "f", "fo", "foo", "foob", std::string("\0\xff\x10", 3)}) {
    EXPECT_EQ(util::base64_decode(util::base64_encode(s)), s);
  }
  EXPECT_EQ(util::base64_encode("foobar"), "Zm9vYmFy");
}

TEST(Hash, HexRoundTripAndUniformBelow) {
  std::uint64_t v = 0;
  ASSERT_TRUE(util::parse_hex(util::to_hex(0xdeadbeefcafef00dULL), v));
  EXPECT_EQ(v, 0xdeadbeefcafef00dULL);
  util::SplitMix64 rng(1);
  std::vector<int> counts(3);
  for (int i = 0; i < 30000; ++i) ++counts[rng.below(3)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 400);
}

TEST(Jsonl, MetaLineAndLineNumberedErrors) {
  const auto text = util::dump_jsonl(util::ArtifactMeta{"nll", "abc", 7}, {{{"x", 1}}, {{"x", 2}}});
  const auto f = util::parse_jsonl(text);
  ASSERT_TRUE(f.meta);
  EXPECT_EQ(f.meta->config_hash, "abc");
  EXPECT_EQ(f.records.size(), 2u);
  try {
    util::parse_jsonl("{\"a\":1}\n{broken\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Parallel, PropagatesLowestIndexError) {
  std::vector<int> out(50);
  util::parallel_for(out.size(), 4, [&](std::size_t i) { out[i] = static_cast<int>(i); });
  for (int i = 0; i < 50; ++i) EXPECT_EQ(out[i], i);
  try {
    util::parallel_for(20, 4, [](std::size_t i) {
      if (i == 3 || i == 11) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "3");
  }
}

TEST(TomlLite, SectionsArraysAndComments) {
  const auto j = toml_lite::parse(
      "seed = 7 # trailing\nname = \"a # not a comment\"\n[stride]\nwindow = 1_024\nratio = 0.5\n"
      "[x.y]\nlist = [\n  \"a\", # c\n  \"b\",\n]\nflag = true\n");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["name"], "a # not a comment");
  EXPECT_EQ(j["stride"]["window"], 1024);
  EXPECT_DOUBLE_EQ(j["stride"]["ratio"].get<double>(), 0.5);
  EXPECT_EQ(j["x"]["y"]["list"], nlohmann::json::array({"a", "b"}));
  EXPECT_EQ(j["x"]["y"]["flag"], true);
}

TEST(TomlLite, ErrorsCarryLineNumbers) {
  for (const char* bad : {"a = 1\nb = \n", "a = 1\na = 2\n", "x = [1, 2\n", "[sec\n", "k = what\n"}) {
    EXPECT_THROW(toml_lite::parse(bad), Error) << bad;
  }
  try {
    toml_lite::parse("a = 1\n\nb = nope\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}
