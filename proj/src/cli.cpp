#include "shieldbic/cli.hpp"

#include <exception>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "shieldbic/io.hpp"
#include "shieldbic/pipeline.hpp"

namespace shieldbic {

namespace {

void printSummary(std::ostream& out, const RunReport& report) {
  std::size_t ok = 0;
  for (const auto& rec : report.records) ok += rec.ok() ? 1 : 0;
  out << toString(report.config.strategy) << ": " << ok << "/" << report.records.size()
      << " bi-clusters found\n";
  out << "k\tcount\tmsr_mean\tmsr_std\tsize_mean\tsize_std\n";
  for (const auto& s : summarize(report)) {
    out << s.k << '\t' << s.count << '\t' << s.msr_mean << '\t' << s.msr_std << '\t' << s.size_mean << '\t'
        << s.size_std << '\n';
  }
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cheng-Church bi-clustering with random masking or complex shielding"};
  app.name("shieldbic");

  DatasetSpec dataset;
  RunConfig config;
  std::string input;
  std::string format = "yeast-raw";
  std::string strategy = "shield";
  std::string out_dir = "shieldbic-out";

  app.add_option("--input", input, "Expression matrix file")->check(CLI::ExistingFile);
  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"yeast-raw", "csv", "tsv"}))
      ->capture_default_str();
  app.add_option("--delta", config.delta, "MSR budget")->capture_default_str();
  app.add_option("--alpha", config.alpha, "Collective deletion threshold (> 1)")->capture_default_str();
  app.add_option("--phi", config.phi, "Shielding factor (>= 1)")->capture_default_str();
  app.add_option("--k", config.k_target, "Bi-clusters to discover per repeat")->capture_default_str();
  app.add_option("--strategy", strategy, "Masking strategy")
      ->check(CLI::IsMember({"random-mask", "shield"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Base random seed")->capture_default_str();
  app.add_option("--repeats", config.repeats, "Independent repeats")->capture_default_str();
  app.add_option("--missing-sentinel", dataset.missing_sentinel, "Value marking a missing entry")
      ->capture_default_str();
  app.add_option("--impute-low", dataset.impute_low, "Lower bound of imputed values")->capture_default_str();
  app.add_option("--impute-high", dataset.impute_high, "Upper bound of imputed values")->capture_default_str();
  app.add_option("--out-dir", out_dir, "Directory for report files")->capture_default_str();
  auto* compare = app.add_subcommand("compare", "Run both strategies on identical seeds and write paired reports");
  compare->fallthrough();

  if (argc <= 1) {
    err << app.help();
    return 2;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  try {
    if (input.empty()) throw std::invalid_argument("--input is required");
    dataset.path = input;
    dataset.format = parseFormat(format);
    config.strategy = parseStrategy(strategy);
    config.validate();
    dataset.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  try {
    const MatrixSource source = datasetSource(dataset);
    if (compare->parsed()) {
      const StrategyComparison cmp = compareStrategies(source, config);
      writeComparison(cmp, out_dir, dataset);
      printSummary(out, cmp.random_mask);
      printSummary(out, cmp.shield);
      out << "mean msr delta (shield - random-mask): " << cmp.msr_mean_delta << '\n'
          << "mean size delta (shield - random-mask): " << cmp.size_mean_delta << '\n';
    } else {
      const RunReport report = runRepeats(source, config);
      writeReport(report, out_dir, dataset);
      printSummary(out, report);
    }
    out << "reports written to " << out_dir << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace shieldbic
