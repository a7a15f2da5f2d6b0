#include <gtest/gtest.h>

#include <deque>
#include <mutex>
#include <thread>

#include "leakaudit/metrics.hpp"
#include "leakaudit/reference_lm.hpp"
#include "leakaudit/remote.hpp"
#include "mock_server.hpp"

using namespace leakaudit;
using json = nlohmann::json;
using testing_support::MockServer;
using testing_support::SleepLog;

namespace {

template <typename Fn>
Error catch_error(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected an error";
  return Error(ErrorKind::validation, "none");
}

Document make_doc(std::string content) {
  Document d;
  d.id = "a";
  d.content = std::move(content);
  return d;
}

}  // namespace

TEST(Remote, InfoHandshake) {
  MockServer mock;
  RemoteBackend b(mock.url() + "/");
  EXPECT_EQ(b.descriptor().name, "mock");
  EXPECT_EQ(b.descriptor().vocab_size, 16u);
  EXPECT_EQ(b.descriptor().context_window, 32u);
  EXPECT_EQ(b.descriptor().family, "nibble");
}

TEST(Remote, BadInfoIsProtocolError) {
  MockServer mock;
  mock.script("/v1/info", {200, {{"name", "x"}}});
  EXPECT_EQ(catch_error([&] { RemoteBackend b(mock.url()); }).kind(), ErrorKind::protocol);
  mock.script("/v1/info", {200, {{"name", "x"}, {"vocab_size", 16}, {"context_window", 1}, {"family", "f"}}});
  EXPECT_EQ(catch_error([&] { RemoteBackend b(mock.url()); }).kind(), ErrorKind::protocol);
}

TEST(Remote, ScoreHonoursLengthContract) {
  MockServer mock;
  RemoteBackend b(mock.url());
  const auto s = b.score({1, 2, 3, 4});
  ASSERT_EQ(s.logprobs.size(), 3u);
  for (double lp : s.logprobs) EXPECT_LE(lp, 0.0);
  mock.script("/v1/score", {200, {{"logprobs", {-1.0, -1.0, -1.0, -1.0}}}});
  EXPECT_EQ(catch_error([&] { b.score({1, 2, 3, 4}); }).kind(), ErrorKind::protocol);
  mock.script("/v1/score", {200, {{"logprobs", {-1.0, 0.5, -1.0}}}});
  EXPECT_EQ(catch_error([&] { b.score({1, 2, 3, 4}); }).kind(), ErrorKind::protocol);
  mock.script("/v1/score", {200, {{"nope", 1}}});
  EXPECT_EQ(catch_error([&] { b.score({1, 2, 3, 4}); }).kind(), ErrorKind::protocol);
  mock.script("/v1/score", {200, json()});
  EXPECT_EQ(catch_error([&] { b.score({1, 2, 3, 4}); }).kind(), ErrorKind::protocol);
}

TEST(Remote, LocalValidationBeforeNetwork) {
  MockServer mock;
  RemoteBackend b(mock.url());
  EXPECT_EQ(catch_error([&] { b.score({1}); }).kind(), ErrorKind::too_short);
  EXPECT_EQ(catch_error([&] { b.score(TokenSeq(33, 1)); }).kind(), ErrorKind::window);
  EXPECT_EQ(mock.hits("/v1/score"), 0u);
}

TEST(Remote, GreedyLengthAndVocabulary) {
  MockServer mock;
  RemoteBackend b(mock.url());
  EXPECT_EQ(b.greedy_continue({1, 2}, 4), TokenSeq(4, 3));
  mock.script("/v1/greedy", {200, {{"tokens", {1, 2}}}});
  EXPECT_EQ(catch_error([&] { b.greedy_continue({1, 2}, 4); }).kind(), ErrorKind::protocol);
  mock.script("/v1/greedy", {200, {{"tokens", {1, 2, 99, 1}}}});
  EXPECT_EQ(catch_error([&] { b.greedy_continue({1, 2}, 4); }).kind(), ErrorKind::protocol);
  mock.script("/v1/greedy", {200, {{"tokens", {1, -2, 3, 1}}}});
  EXPECT_EQ(catch_error([&] { b.greedy_continue({1, 2}, 4); }).kind(), ErrorKind::protocol);
}

TEST(Remote, TokenizeAndDetokenizeDelegate) {
  MockServer mock;
  RemoteBackend b(mock.url());
  EXPECT_EQ(b.tokenize("whatever"), (TokenSeq{1, 2, 3}));
  EXPECT_EQ(b.detokenize({1, 2}), "abc");
  EXPECT_THROW(b.detokenize({40}), Error);
}

TEST(Remote, RetriesServerErrorsThenSucceeds) {
  MockServer mock;
  SleepLog log;
  RemoteBackend b(mock.url(), log.options());
  const auto before = b.attempts_made();
  mock.script("/v1/score", {500, {{"error", "boom"}}});
  mock.script("/v1/score", {500, {{"error", "boom"}}});
  EXPECT_EQ(b.score({1, 2, 3}).logprobs.size(), 2u);
  EXPECT_EQ(b.attempts_made() - before, 3u);
  EXPECT_EQ(log.sleeps, (std::vector<std::chrono::milliseconds>{std::chrono::milliseconds(200), std::chrono::milliseconds(400)}));
  // One logical request carries one idempotency key across its retries.
  const auto keys = mock.keys("/v1/score");
  ASSERT_EQ(keys.size(), 3u);
  EXPECT_FALSE(keys[0].empty());
  EXPECT_EQ(keys[0], keys[1]);
  EXPECT_EQ(keys[1], keys[2]);
}

TEST(Remote, RateLimitHonoursRetryAfter) {
  MockServer mock;
  SleepLog log;
  RemoteBackend b(mock.url(), log.options());
  mock.script("/v1/greedy", {429, {{"error", "slow down"}}, {{"Retry-After", "2"}}});
  EXPECT_EQ(b.greedy_continue({1}, 2).size(), 2u);
  EXPECT_EQ(log.sleeps, std::vector<std::chrono::milliseconds>{std::chrono::seconds(2)});
}

TEST(Remote, ExhaustedRetriesCarryMetadata) {
  MockServer mock;
  SleepLog log;
  RemoteBackend b(mock.url(), log.options(3));
  for (int i = 0; i < 3; ++i) mock.script("/v1/score", {503, json::object()});
  try {
    b.score({1, 2});
    FAIL();
  } catch (const TransportError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::transport);
    EXPECT_EQ(e.status(), 503);
    EXPECT_EQ(e.attempts(), 3);
    EXPECT_TRUE(e.retryable());
  }
  EXPECT_EQ(log.sleeps.size(), 2u);
}

TEST(Remote, ClientErrorsAreNotRetried) {
  MockServer mock;
  SleepLog log;
  RemoteBackend b(mock.url(), log.options());
  mock.script("/v1/score", {400, {{"error", "bad tokens"}, {"retryable", false}}});
  try {
    b.score({1, 2});
    FAIL();
  } catch (const TransportError& e) {
    EXPECT_EQ(e.status(), 400);
    EXPECT_EQ(e.attempts(), 1);
    EXPECT_FALSE(e.retryable());
    EXPECT_NE(std::string(e.what()).find("bad tokens"), std::string::npos);
  }
  mock.script("/v1/score", {503, {{"error", "permanent"}, {"retryable", false}}});
  EXPECT_THROW(b.score({1, 2}), TransportError);
  EXPECT_TRUE(log.sleeps.empty());
}

TEST(Remote, ConnectionRefusedIsTransportError) {
  // Bind, read back and close a socket so nothing listens on the port.
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  ASSERT_EQ(::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)), 0);
  socklen_t len = sizeof(addr);
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  const int port = ntohs(addr.sin_port);
  SleepLog log;
  try {
    RemoteBackend b("http://127.0.0.1:" + std::to_string(port), log.options(2));
    FAIL();
  } catch (const TransportError& e) {
    EXPECT_EQ(e.status(), 0);
    EXPECT_EQ(e.attempts(), 2);
  }
}

TEST(Remote, EmptyUrlIsValidationError) {
  EXPECT_EQ(catch_error([] { RemoteBackend b("///"); }).kind(), ErrorKind::validation);
}

TEST(BackendServer, RoundTripMatchesInProcessBackend) {
  auto lm = std::make_shared<const ReferenceLM>(
      train_reference_lm(Corpus{"ds", {make_doc("int main() { return 0; }\n")}}));
  ReferenceBackend local(lm, 64, "served");
  BackendServer server(local);
  const int port = server.start();
  RemoteBackend remote("http://127.0.0.1:" + std::to_string(port));
  EXPECT_EQ(remote.descriptor().name, "served");
  EXPECT_EQ(remote.descriptor().context_window, 64u);
  const std::string text = "int main() { return 1; }\n";
  const auto tokens = remote.tokenize(text);
  EXPECT_EQ(tokens, local.tokenize(text));
  EXPECT_EQ(remote.detokenize(tokens), text);
  EXPECT_EQ(remote.score(tokens).logprobs, local.score(tokens).logprobs);
  const TokenSeq ctx(tokens.begin(), tokens.begin() + 6);
  EXPECT_EQ(remote.greedy_continue(ctx, 5), local.greedy_continue(ctx, 5));
  // Strided scoring over the wire equals scoring in process.
  const metrics::StrideConfig scfg{16, 8};
  EXPECT_EQ(metrics::strided_nll(tokens, remote, scfg).nll, metrics::strided_nll(tokens, local, scfg).nll);
  // Server-side validation surfaces as a non-retryable client error.
  try {
    remote.score(TokenSeq(2, 1));
    auto raw = httplib::Client("127.0.0.1", port).Post("/v1/score", R"({"tokens":[1]})", "application/json");
    ASSERT_TRUE(raw);
    EXPECT_EQ(raw->status, 400);
    EXPECT_FALSE(json::parse(raw->body).at("retryable").get<bool>());
  } catch (const Error& e) {
    FAIL() << e.what();
  }
  server.stop();
}
