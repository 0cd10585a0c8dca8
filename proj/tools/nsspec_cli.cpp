// Command-line driver for the experiment harness.
//
//   nsspec <verify|spectrum|sweep|bgk|symbol> [--config FILE] [--seed N]
//          [--out DIR] [--format csv|json|both]
//
// Exit status: 0 all checks pass, 1 a check failed, 2 configuration error,
// 3 numerical failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nsspec/error.hpp"
#include "nsspec/harness/config.hpp"
#include "nsspec/harness/run.hpp"

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::string format = "both";
  bool quiet = false;
};

int execute(nsspec::ExperimentKind kind, const Options& opt) {
  using namespace nsspec;
  ExperimentConfig cfg;
  try {
    cfg = opt.config.empty() ? ExperimentConfig{} : load_config(opt.config);
    cfg.kind = kind;
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.out) cfg.output = *opt.out;
    validate_config(cfg);
  } catch (const Error& e) {
    std::cerr << "nsspec: " << e.what() << "\n";
    return 2;
  }

  Report report;
  try {
    report = run(cfg);
  } catch (const NumericalError& e) {
    std::cerr << "nsspec: numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "nsspec: " << e.what() << "\n";
    return 2;
  }
  report.meta.timestamp = utc_timestamp();

  try {
    write_report(report, cfg.output, output_format_from_string(opt.format));
  } catch (const Error& e) {
    std::cerr << "nsspec: " << e.what() << "\n";
    return 2;
  }

  if (!opt.quiet) {
    for (const Row& row : report.rows)
      if (row.status == Status::Fail)
        std::cout << "FAIL " << row.section << " " << row.name << " = " << format_number(row.value)
                  << (row.note.empty() ? "" : "  (" + row.note + ")") << "\n";
    std::cout << to_string(kind) << ": " << report.rows.size() << " rows, " << report.failures()
              << " failed, written to " << cfg.output << "\n";
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional checks of eigenvalue bounds for non-selfadjoint operators"};
  app.require_subcommand(1);

  Options opt;
  const std::pair<const char*, const char*> commands[] = {
      {"verify", "explicit-constant lemma suite"},
      {"spectrum", "eigenvalue functionals of one model"},
      {"sweep", "seeded sweep over models or potential scales"},
      {"bgk", "zero sums and growth envelopes on the disk"},
      {"symbol", "resolvent-symbol norms and scalar integrals"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config, "JSON experiment configuration")->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "override the configured seed");
    sub->add_option("--out", opt.out, "output directory");
    sub->add_option("--format", opt.format, "csv, json or both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    sub->add_flag("-q,--quiet", opt.quiet, "no summary on stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    const std::string name = sub->get_name();
    return execute(nsspec::experiment_kind_from_string(name == "verify" ? "verify_lemmas" : name), opt);
  }
  return 2;
}
