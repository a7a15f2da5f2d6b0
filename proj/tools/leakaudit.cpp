#include <csignal>
#include <iostream>

#include <CLI11.hpp>

#include "leakaudit/audit.hpp"

namespace {

using namespace leakaudit;

int fail(const std::string& kind, const std::string& message, const std::vector<std::string>& problems, int code) {
  nlohmann::json j{{"error", kind}, {"message", message}};
  if (!problems.empty()) j["problems"] = problems;
  std::cerr << j.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark contamination audit toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  audit::Overrides overrides;
  std::uint64_t seed = 0;
  std::string out, backend_url;
  std::size_t parallelism = 0;
  bool force = false;
  std::string host = "127.0.0.1";
  int port = 8080;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config,-c", config_path, "Audit configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "Override the configured seed");
    sub->add_option("--out", out, "Override the output directory");
    sub->add_option("--backend-url", backend_url, "Score with a remote backend at this URL");
    sub->add_option("--parallelism,-j", parallelism, "Worker threads")->check(CLI::PositiveNumber);
  };

  const std::vector<std::pair<const char*, const char*>> commands{
      {"ingest", "Load corpus manifests into a snapshot"},
      {"mine", "Mine candidate unseen repositories"},
      {"dedup", "Remove near-duplicates and reference overlap"},
      {"nll", "Strided negative log-likelihood per document"},
      {"ngram", "5-gram greedy accuracy per document"},
      {"membership", "Repository membership in index snapshots"},
      {"analyze", "Ratio matrices and mixed-effects regressions"},
      {"report", "Compose the Markdown report"},
      {"serve", "Serve the configured reference backend over HTTP"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    subs[name] = app.add_subcommand(name, help);
    common(subs[name]);
  }
  subs["report"]->add_flag("--force", force, "Mix artifacts from different config hashes");
  subs["serve"]->add_option("--host", host, "Bind address");
  subs["serve"]->add_option("--port", port, "Port (0 picks a free one)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail("usage", e.what(), {}, 1);
  }

  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--seed")) overrides.seed = seed;
    if (sub->count("--out")) overrides.out = out;
    if (sub->count("--backend-url")) overrides.backend_url = backend_url;
    if (sub->count("--parallelism")) overrides.parallelism = parallelism;
  }

  try {
    const auto cfg = audit::load_config(config_path, overrides);
    const auto name = app.get_subcommands().front()->get_name();
    std::filesystem::path dir;
    if (name == "ingest") dir = audit::cmd_ingest(cfg);
    else if (name == "mine") dir = audit::cmd_mine(cfg);
    else if (name == "dedup") dir = audit::cmd_dedup(cfg);
    else if (name == "nll") dir = audit::cmd_nll(cfg);
    else if (name == "ngram") dir = audit::cmd_ngram(cfg);
    else if (name == "membership") dir = audit::cmd_membership(cfg);
    else if (name == "analyze") dir = audit::cmd_analyze(cfg);
    else if (name == "report") dir = audit::cmd_report(cfg, force);
    else if (name == "serve") {
      auto backend = audit::make_backend(cfg);
      BackendServer server(*backend);
      std::cout << nlohmann::json{{"serving", backend->descriptor().name}, {"host", host}, {"port", port}}.dump()
                << std::endl;
      server.listen(host, port);
      return 0;
    }
    std::cout << nlohmann::json{{"stage", name}, {"output", dir.string()}}.dump() << std::endl;
    return 0;
  } catch (const audit::ConfigError& e) {
    return fail("validation", e.what(), e.problems(), 1);
  } catch (const Error& e) {
    return fail(std::string(to_string(e.kind())), e.what(), {}, is_transport_kind(e.kind()) ? 2 : 1);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), {}, 1);
  }
}
