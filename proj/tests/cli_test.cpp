// Copyright 2026 The Inset Authors
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

#include "cli.hpp"

#include <filesystem>

#include "gtest/gtest.h"
#include "inset/randgen.hpp"
#include "inset/tree.hpp"
#include "test_util.hpp"

namespace inset::cli {
namespace {

using ::inset::testing::data_path;
using ::inset::testing::read_file;
using nlohmann::json;

json run_ok(const std::vector<std::string>& args) {
  const CommandResult r = run(args);
  EXPECT_EQ(r.exit_code, kExitOk) << r.err << r.out;
  return json::parse(r.out);
}

TEST(CliTest, Wiener) {
  const json j = run_ok({"wiener", data_path("p4.tree")});
  EXPECT_EQ(j["D"], 10);
  EXPECT_EQ(j["AD"]["exact"], "5/3");
}

TEST(CliTest, DeltaAllMethods) {
  for (const std::string method : {"direct", "matrix", "oracle"}) {
    const json j = run_ok(
        {"delta", data_path("p7.tree"), "-e", "1", "5", "--method", method});
    EXPECT_EQ(j["k"], 5);
    EXPECT_EQ(j["d_prime"], 16);
    EXPECT_EQ(j["ad_prime"]["exact"], "16/21");
  }
}

TEST(CliTest, Best) {
  const json j = run_ok({"best", data_path("p6.tree")});
  EXPECT_EQ(j["best_pairs"], json::parse("[[0,4],[1,5]]"));
  EXPECT_EQ(j["best_delta"], 9);
  EXPECT_EQ(run_ok({"best", data_path("p7.tree"), "--strategy", "pruned"})["pruned"],
            2);
}

TEST(CliTest, Sweep) {
  const json j = run_ok({"sweep", data_path("p7.tree"), "-p", "0", "6"});
  ASSERT_EQ(j["entries"].size(), 7u);
  EXPECT_EQ(j["entries"][1]["d_prime"], 16);
  EXPECT_EQ(j["entries"][1]["family"], "diagonal");
}

TEST(CliTest, BoundsAndExtremal) {
  const json b = run_ok({"bounds", "--n", "16"});
  EXPECT_EQ(b["claimed_upper"], 232);
  EXPECT_EQ(b["family_max"], 234);
  EXPECT_EQ(b["discrepancies"][0]["kind"], "upper_bound");

  const auto out =
      std::filesystem::temp_directory_path() / "inset_cli_test_extremal.tree";
  const json e = run_ok({"extremal", "--n", "16", "--k", "11", "--wx", "3",
                         "--wy", "4", "--shape", "path", "--out", out.string()});
  EXPECT_EQ(e["oracle_d_prime"], 234);
  EXPECT_EQ(e["d_prime"], 234);
  const json d = run_ok({"delta", out.string(), "-e", "0", "10"});
  EXPECT_EQ(d["d_prime"], 234);
  std::filesystem::remove(out);
}

TEST(CliTest, Random) {
  const json trees = run_ok({"random", "--n", "6", "--count", "3", "--seed", "9"});
  ASSERT_EQ(trees["trees"].size(), 3u);
  EXPECT_EQ(trees["trees"][0]["n"], 6);
  const json leaves =
      run_ok({"random", "--n", "50", "--count", "200", "--seed", "1", "--stats",
              "leaves"});
  EXPECT_NEAR(leaves["expected"].get<double>(), 18.96, 0.01);
  EXPECT_NEAR(leaves["claimed_expected"].get<double>(), 18.58, 0.01);
  const json pruning = run_ok({"random", "--n", "20", "--n-max", "30", "--count",
                               "20", "--seed", "1", "--stats", "pruning"});
  EXPECT_GT(pruning["mean_ratio"].get<double>(), 0.0);
}

TEST(CliTest, VerifyFixturesAndRandomTrees) {
  for (const std::string name : {"p4", "p6", "p7", "s5", "spider"}) {
    const json j = run_ok({"verify", data_path(name + ".tree")});
    EXPECT_TRUE(j["mismatch"].is_null());
  }
  const auto file =
      std::filesystem::temp_directory_path() / "inset_cli_test_verify.tree";
  const Corpus corpus(4, 60, 2718, 15);
  for (std::size_t i = 0; i < corpus.count(); ++i) {
    {
      std::ofstream out(file, std::ios::binary);
      out << to_edge_list(corpus.tree(i));
    }
    run_ok({"verify", file.string()});
  }
  std::filesystem::remove(file);
}

TEST(CliTest, Bench) {
  const json j = run_ok({"bench", "--sizes", "64,128", "--recompute-limit", "64"});
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_TRUE(j["rows"][0]["recompute_ops"].is_number());
  EXPECT_TRUE(j["rows"][1]["recompute_ops"].is_null());
}

TEST(CliTest, DomainErrorsExitOne) {
  const CommandResult adjacent =
      run({"delta", data_path("p7.tree"), "-e", "1", "2"});
  EXPECT_EQ(adjacent.exit_code, kExitDomain);
  EXPECT_EQ(json::parse(adjacent.out)["error"], "AdjacentPair");
  EXPECT_FALSE(adjacent.err.empty());

  const CommandResult cycle = run({"wiener", data_path("cycle3.tree")});
  EXPECT_EQ(cycle.exit_code, kExitDomain);
  EXPECT_EQ(json::parse(cycle.out)["error"], "NotATree");

  const CommandResult missing = run({"wiener", "/nonexistent/file.tree"});
  EXPECT_EQ(missing.exit_code, kExitDomain);
  EXPECT_EQ(json::parse(missing.out)["error"], "IoError");

  const CommandResult bounds = run({"bounds", "--n", "4"});
  EXPECT_EQ(json::parse(bounds.out)["error"], "OutOfDomain");
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).exit_code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"delta", data_path("p7.tree")}).exit_code, kExitUsage);
  EXPECT_EQ(run({"best", data_path("p7.tree"), "--strategy", "greedy"}).exit_code,
            kExitUsage);
  const CommandResult help = run({"--help"});
  EXPECT_EQ(help.exit_code, kExitOk);
  EXPECT_NE(help.out.find("wiener"), std::string::npos);
}

TEST(CliTest, ByteIdenticalAcrossRunsAndThreads) {
  const std::vector<std::vector<std::string>> invocations = {
      {"best", data_path("p7.tree"), "--strategy", "oracle"},
      {"bounds", "--n", "7"},
      {"random", "--n", "12", "--count", "5", "--seed", "42"},
      {"sweep", data_path("spider.tree"), "-p", "3", "4"},
  };
  for (const auto& args : invocations) {
    const std::string first = run(args).out;
    EXPECT_EQ(run(args).out, first);
    if (args[0] == "best" || args[0] == "bounds") {
      for (const std::string threads : {"1", "3"}) {
        auto with_threads = args;
        with_threads.insert(with_threads.end(), {"--threads", threads});
        EXPECT_EQ(run(with_threads).out, first);
      }
    }
  }
}

}  // namespace
}  // namespace inset::cli
