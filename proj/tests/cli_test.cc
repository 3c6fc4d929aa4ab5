// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynsub/csv.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dynsub::cli {
namespace {

using ::dynsub::testing::FixturePath;

struct Invocation {
  ParseResult result;
  std::string out;
  std::string err;
};

Invocation Parse(std::vector<std::string> args) {
  args.insert(args.begin(), "dynsub");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Invocation inv;
  inv.result = ParseArgs(static_cast<int>(argv.size()), argv.data(), out, err);
  inv.out = out.str();
  inv.err = err.str();
  return inv;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::filesystem::path TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("dynsub_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(ParseArgsTest, WindowExample) {
  const Invocation inv = Parse({"run", "--algo", "full", "--dataset", "enron.txt", "--stream",
                                "window:30000", "--k", "20", "--eps", "0.2"});
  ASSERT_FALSE(inv.result.exit_code.has_value()) << inv.err;
  const RunConfig& c = inv.result.config;
  EXPECT_EQ(c.algo, AlgoKind::kFull);
  EXPECT_EQ(c.dataset, "enron.txt");
  EXPECT_EQ(c.stream.kind, StreamSpec::Kind::kWindow);
  EXPECT_EQ(c.stream.window, 30000u);
  EXPECT_EQ(c.ks, std::vector<std::size_t>{20});
  EXPECT_DOUBLE_EQ(c.eps, 0.2);
}

TEST(ParseArgsTest, Defaults) {
  const Invocation inv =
      Parse({"run", "--dataset", "g.txt", "--stream", "degdel", "--k", "5"});
  ASSERT_FALSE(inv.result.exit_code.has_value()) << inv.err;
  const RunConfig& c = inv.result.config;
  EXPECT_EQ(c.algo, AlgoKind::kFull);
  EXPECT_DOUBLE_EQ(c.eps, 0.0);
  EXPECT_DOUBLE_EQ(c.eps1, 1.0);
  EXPECT_DOUBLE_EQ(c.epsp, 0.1);
  EXPECT_DOUBLE_EQ(c.sieve_eps, 0.1);
  EXPECT_EQ(c.repeats, 5u);
  EXPECT_EQ(c.seed, 1u);
  EXPECT_EQ(c.profile, "practical");
  EXPECT_EQ(c.blocks, 400u);
  EXPECT_FALSE(c.records);
}

TEST(ParseArgsTest, KGrid) {
  const Invocation inv =
      Parse({"run", "--dataset", "g.txt", "--stream", "degdel", "--k", "10..70:10"});
  ASSERT_FALSE(inv.result.exit_code.has_value()) << inv.err;
  EXPECT_EQ(inv.result.config.ks, (std::vector<std::size_t>{10, 20, 30, 40, 50, 60, 70}));
}

TEST(ParseArgsTest, UsageErrors) {
  const std::vector<std::vector<std::string>> bad = {
      {"run", "--stream", "degdel", "--k", "5"},
      {"run", "--dataset", "g", "--k", "5"},
      {"run", "--dataset", "g", "--stream", "degdel"},
      {"run", "--algo", "lazy", "--dataset", "g", "--stream", "degdel", "--k", "5"},
      {"run", "--dataset", "g", "--stream", "window:0", "--k", "5"},
      {"run", "--dataset", "g", "--stream", "degdel", "--k", "0"},
      {"run", "--dataset", "g", "--stream", "degdel", "--k", "5", "--eps", "1"},
      {"run", "--dataset", "g", "--stream", "degdel", "--k", "5", "--eps", "abc"},
      {"run", "--dataset", "g", "--stream", "degdel", "--k", "5", "--epsp", "0"},
      {"run", "--dataset", "g", "--stream", "degdel", "--k", "5", "--repeats", "0"},
      {"run", "--dataset", "g", "--stream", "degdel", "--k", "5", "--profile", "fast"},
      {"run", "--dataset", "g", "--stream", "degdel", "--k", "5", "--bogus", "1"},
      {"walk"},
      {},
  };
  for (const auto& args : bad) {
    const Invocation inv = Parse(args);
    ASSERT_TRUE(inv.result.exit_code.has_value());
    EXPECT_EQ(*inv.result.exit_code, kExitUsage);
    EXPECT_FALSE(inv.err.empty());
  }
}

TEST(ParseArgsTest, HelpListsEveryFlag) {
  const Invocation inv = Parse({"run", "--help"});
  ASSERT_TRUE(inv.result.exit_code.has_value());
  EXPECT_EQ(*inv.result.exit_code, kExitOk);
  for (const char* flag : {"--algo", "--dataset", "--stream", "--k", "--eps", "--eps1",
                           "--epsp", "--sieve-eps", "--seed", "--repeats", "--out",
                           "--profile", "--blocks", "--records", "10..70:10"}) {
    EXPECT_NE(inv.out.find(flag), std::string::npos) << flag;
  }
}

TEST(ExpandKGridTest, Forms) {
  EXPECT_EQ(ExpandKGrid("7"), std::vector<std::size_t>{7});
  EXPECT_EQ(ExpandKGrid("10,20,40"), (std::vector<std::size_t>{10, 20, 40}));
  EXPECT_EQ(ExpandKGrid("5..5:1"), std::vector<std::size_t>{5});
  EXPECT_EQ(ExpandKGrid("1..10:4"), (std::vector<std::size_t>{1, 5, 9}));
  for (const char* bad : {"", "0", "a", "1,,2", "10..5:1", "1..5", "1..5:0", "0..4:2"}) {
    EXPECT_THROW(ExpandKGrid(bad), std::invalid_argument) << bad;
  }
}

TEST(LoadDatasetTest, SyntheticAndFiles) {
  EXPECT_EQ(LoadDataset("synthetic:ba:50:2:3").node_count(), 50u);
  EXPECT_EQ(LoadDataset("synthetic:er:40:3.5:3").node_count(), 40u);
  EXPECT_EQ(LoadDataset(FixturePath("graph100.txt")).node_count(), 100u);
  EXPECT_THROW(LoadDataset("synthetic:ws:10:2:1"), std::invalid_argument);
  EXPECT_THROW(LoadDataset("synthetic:er:10:x:1"), std::invalid_argument);
}

// Property: every flag-named manifest entry parses back to the same config.
TEST(ManifestTest, RoundTripsThroughParse) {
  const Invocation inv = Parse({"run", "--algo", "sieve", "--dataset",
                                FixturePath("graph100.txt"), "--stream", "degdel-solution",
                                "--k", "2..8:3", "--eps", "0.2", "--eps1", "0.5", "--epsp",
                                "0.05", "--sieve-eps", "0.2", "--seed", "17", "--repeats", "2",
                                "--profile", "exact", "--blocks", "50"});
  ASSERT_FALSE(inv.result.exit_code.has_value()) << inv.err;
  const RunConfig& c = inv.result.config;
  const auto manifest = Manifest(c, LoadDataset(c.dataset));
  std::vector<std::string> args = {"run"};
  for (const auto& [key, value] : manifest) {
    if (key.rfind("info.", 0) == 0) continue;
    args.push_back("--" + key);
    args.push_back(value);
  }
  const Invocation back = Parse(args);
  ASSERT_FALSE(back.result.exit_code.has_value()) << back.err;
  EXPECT_EQ(back.result.config, c);
  EXPECT_EQ(manifest.at("info.nodes"), "100");
}

TEST(RunMainTest, FixtureSmokeRunIsFastAndReproducible) {
  const auto dir_a = TempDir("smoke_a");
  const auto dir_b = TempDir("smoke_b");
  for (const char* algo : {"full", "simple", "sieve", "random", "greedy"}) {
    for (const auto& dir : {dir_a, dir_b}) {
      const std::vector<std::string> args = {
          "dynsub", "run",  "--algo", algo,          "--dataset", FixturePath("graph100.txt"),
          "--stream", "window:50", "--k", "5,10", "--eps", "0.2", "--repeats", "2",
          "--out", dir.string(), "--records"};
      std::vector<const char*> argv;
      for (const std::string& a : args) argv.push_back(a.c_str());
      std::ostringstream out;
      std::ostringstream err;
      const auto start = std::chrono::steady_clock::now();
      const int code = Main(static_cast<int>(argv.size()), argv.data(), out, err);
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ASSERT_EQ(code, kExitOk) << err.str();
      EXPECT_LT(seconds, 5.0) << algo;
      EXPECT_NE(out.str().find(" k=5 "), std::string::npos);
      EXPECT_NE(out.str().find(" k=10 "), std::string::npos);
    }
  }
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir_a)) {
    const auto other = dir_b / entry.path().filename();
    ASSERT_TRUE(std::filesystem::exists(other)) << other;
    if (entry.path().filename().string().find("manifest") == std::string::npos) {
      EXPECT_EQ(ReadFile(entry.path()), ReadFile(other)) << entry.path();
    }
    ++files;
  }
  // summary_f, summary_oc, 2 x (blocks_f, blocks_oc), records, manifest.
  EXPECT_EQ(files, 5u * 8u);
  const CsvTable summary = ReadCsv((dir_a / "full_summary_f.csv").string());
  EXPECT_EQ(summary.header, (std::vector<std::string>{"k", "f", "stddev"}));
  EXPECT_EQ(summary.rows.size(), 2u);
  const auto manifest = ReadManifest((dir_a / "full_manifest.txt").string());
  EXPECT_EQ(manifest.at("algo"), "full");
  EXPECT_EQ(manifest.at("k"), "5,10");
  EXPECT_EQ(manifest.at("eps1"), "1");
  EXPECT_EQ(manifest.at("epsp"), "0.1");
  std::filesystem::remove_all(dir_a);
  std::filesystem::remove_all(dir_b);
}

TEST(RunMainTest, RuntimeErrorsExitTwo) {
  RunConfig c;
  c.dataset = FixturePath("does_not_exist.txt");
  c.stream = StreamSpec::Parse("degdel");
  c.ks = {3};
  c.out = TempDir("runtime").string();
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(RunMain(c, out, err), kExitRuntime);
  EXPECT_NE(err.str().find("does_not_exist"), std::string::npos);
}

}  // namespace
}  // namespace dynsub::cli
