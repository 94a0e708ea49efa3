#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shieldbic/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "shieldbic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = shieldbic::runCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path writeInput(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "shieldbic-cli-tests";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(0, 800);
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 8; ++j) out << (j ? " " : "") << (i == 3 && j == 2 ? -1 : d(rng));
    out << '\n';
  }
  return path;
}

}  // namespace

TEST(Cli, NoArgumentsPrintsUsage) {
  const auto r = cli({});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--input"), std::string::npos);
}

TEST(Cli, Help) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--phi"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  const auto input = writeInput("usage.matrix").string();
  EXPECT_EQ(cli({"--input", input, "--phi", "0.5"}).code, 2);
  EXPECT_EQ(cli({"--input", input, "--alpha", "1"}).code, 2);
  EXPECT_EQ(cli({"--input", input, "--bogus"}).code, 2);
  EXPECT_EQ(cli({"--input", input, "--strategy", "cc"}).code, 2);
  EXPECT_EQ(cli({"--input", input, "--impute-low", "-5"}).code, 2);
  EXPECT_EQ(cli({"--delta", "10"}).code, 2);
  EXPECT_EQ(cli({"--input", "/nonexistent/file"}).code, 2);
}

TEST(Cli, MalformedInputIsRuntimeFailure) {
  const fs::path path = fs::temp_directory_path() / "shieldbic-cli-tests" / "ragged.matrix";
  fs::create_directories(path.parent_path());
  std::ofstream(path) << "1 2\n3\n";
  const auto r = cli({"--input", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(":2:"), std::string::npos);
}

TEST(Cli, SingleStrategyRun) {
  const auto input = writeInput("run.matrix").string();
  const auto out_dir = fs::temp_directory_path() / "shieldbic-cli-tests" / "run-out";
  fs::remove_all(out_dir);
  const auto r = cli({"--input", input, "--k", "2", "--repeats", "2", "--strategy", "random-mask", "--out-dir",
                      out_dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("random-mask: 4/4"), std::string::npos);
  EXPECT_TRUE(fs::exists(out_dir / "biclusters.jsonl"));
  EXPECT_TRUE(fs::exists(out_dir / "summary.tsv"));
  EXPECT_TRUE(fs::exists(out_dir / "config.json"));
}

TEST(Cli, Compare) {
  const auto input = writeInput("cmp.matrix").string();
  const auto out_dir = fs::temp_directory_path() / "shieldbic-cli-tests" / "cmp-out";
  fs::remove_all(out_dir);
  const auto r = cli({"compare", "--input", input, "--k", "2", "--repeats", "1", "--out-dir", out_dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(out_dir / "comparison.tsv"));
  EXPECT_TRUE(fs::exists(out_dir / "shield" / "biclusters.jsonl"));
  EXPECT_TRUE(fs::exists(out_dir / "random-mask" / "biclusters.jsonl"));
}
