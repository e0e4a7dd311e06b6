// Copyright 2026 The labeldp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the built labeldp binary end to end.

#include <sys/wait.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace {

using ::testing::HasSubstr;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult RunCli(const std::string& args) {
  const std::string command =
      std::string(LABELDP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  std::string output;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("labeldp_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void WriteFile(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name), std::ios::binary) << text;
  }

  std::string ReadFile(const std::string& name) const {
    std::ifstream in(Path(name), std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, OptimalIntervalUniformPrior) {
  WriteFile("prior.json", R"({"nodes": [0, 1], "heights": [1]})");
  RunResult r = RunCli("optimal-interval --prior " + Path("prior.json") +
                    " --zeta 0.1 --epsilon 1 --output " + Path("out.json"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  auto json = nlohmann::json::parse(ReadFile("out.json"));
  EXPECT_EQ(json["a1"], 0.0);
  EXPECT_EQ(json["a2"], 1.0);
  EXPECT_NEAR(json["objective"].get<double>(), 0.2 / (0.2 + std::exp(-1.0)),
              1e-12);
}

TEST_F(CliTest, PrivatizeWritesCsvAndReport) {
  std::string csv = "id,label,tag\n";
  for (int i = 0; i < 200; ++i) {
    csv += std::to_string(i) + "," + std::to_string((i % 10) / 10.0) +
           ",\"t," + std::to_string(i) + "\"\n";
  }
  WriteFile("in.csv", csv);
  const std::string args = "privatize --input " + Path("in.csv") +
                           " --output " + Path("out.csv") +
                           " --label-col label --epsilon 2 --label-bounds 0 1"
                           " --seed 3 --report " + Path("report.json");
  RunResult r = RunCli(args);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const std::string first = ReadFile("out.csv");
  EXPECT_THAT(first, HasSubstr("id,label,tag\n0,"));
  EXPECT_THAT(first, HasSubstr(",\"t,199\"\n"));
  auto report = nlohmann::json::parse(ReadFile("report.json"));
  EXPECT_EQ(report["seed"], 3);
  EXPECT_TRUE(report.contains("interval"));
  ASSERT_EQ(RunCli(args).exit_code, 0);
  EXPECT_EQ(ReadFile("out.csv"), first);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  WriteFile("in.csv", "label\n0.5\n");
  EXPECT_EQ(RunCli("privatize --input " + Path("in.csv") +
                " --output " + Path("o.csv") +
                " --label-col label --epsilon 1 --eps1 2 --label-bounds 0 1")
                .exit_code,
            2);
  EXPECT_EQ(RunCli("privatize --input " + Path("in.csv") +
                " --output " + Path("o.csv") + " --label-col missing"
                " --epsilon 1 --label-bounds 0 1")
                .exit_code,
            2);
  EXPECT_EQ(RunCli("optimal-interval --zeta 0.1").exit_code, 2);
  EXPECT_EQ(RunCli("no-such-command").exit_code, 2);
}

TEST_F(CliTest, MissingInputExitsThree) {
  RunResult r = RunCli("privatize --input " + Path("absent.csv") + " --output " +
                    Path("o.csv") +
                    " --label-col label --epsilon 1 --label-bounds 0 1");
  EXPECT_EQ(r.exit_code, 3) << r.output;
}

TEST_F(CliTest, AuditExitCodes) {
  WriteFile("good.json",
            R"({"a1": 0, "a2": 1, "zeta": 0.1, "epsilon": 1})");
  WriteFile("bad.json", R"({"a1": 0, "a2": 1, "zeta": 0.1, "epsilon": 1,
                           "test_neighborhood_scale": 2})");
  RunResult good = RunCli("audit --spec " + Path("good.json"));
  EXPECT_EQ(good.exit_code, 0) << good.output;
  RunResult bad = RunCli("audit --spec " + Path("bad.json"));
  EXPECT_EQ(bad.exit_code, 4) << bad.output;
  RunResult empirical = RunCli("audit --spec " + Path("bad.json") +
                            " --empirical --samples 200000 --bins 20");
  EXPECT_EQ(empirical.exit_code, 4) << empirical.output;
}

TEST_F(CliTest, BenchSynthetic) {
  RunResult r = RunCli("bench --synthetic 1000 3 --epsilon 1,inf --trials 2"
                    " --label-bounds 0 1 --seed 1 --output " + Path("b.csv"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const std::string csv = ReadFile("b.csv");
  EXPECT_THAT(csv, HasSubstr("mechanism,epsilon,trials,mean_mse,std_mse,note"));
  EXPECT_THAT(csv, HasSubstr("rp_with_prior,inf,2,"));
}

}  // namespace
