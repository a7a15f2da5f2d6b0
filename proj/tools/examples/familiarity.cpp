// Trains the reference n-gram model on a set of files and prints how familiar
// it finds each probe file: strided NLL (nats/token) and 5-gram accuracy.
//
//   familiarity --train a.java b.java --probe a.java c.java

#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "leakaudit/metrics.hpp"
#include "leakaudit/reference_lm.hpp"

int main(int argc, char** argv) {
  using namespace leakaudit;
  CLI::App app{"Score probe files against a model trained on other files"};
  std::vector<std::string> train, probe;
  std::size_t order = 5, window = 512;
  app.add_option("--train", train, "Training files")->required()->check(CLI::ExistingFile);
  app.add_option("--probe", probe, "Files to score")->required()->check(CLI::ExistingFile);
  app.add_option("--order", order, "n-gram order");
  app.add_option("--window", window, "Context window in bytes");
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<TokenSeq> docs;
    for (const auto& f : train) docs.push_back(ByteTokenizer::encode(util::read_file(f)));
    ReferenceLMOptions opts;
    opts.order = order;
    auto lm = std::make_shared<const ReferenceLM>(ReferenceLM::train(docs, ByteTokenizer::kVocab, opts));
    ReferenceBackend backend(lm, window);
    const metrics::StrideConfig stride{window, window / 2};

    std::cout << "file,nll,ngram_accuracy\n";
    for (const auto& f : probe) {
      const auto tokens = backend.tokenize(util::read_file(f));
      const auto nll = metrics::strided_nll(tokens, backend, stride);
      const auto ngram = metrics::ngram_accuracy(tokens, backend, stride, {});
      std::cout << fmt::format("{},{:.4f},{:.4f}\n", f, nll.nll, ngram.accuracy);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
