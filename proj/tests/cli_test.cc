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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "adasub/cli.h"
#include "adasub/instance_io.h"

namespace adasub {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "adasub");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Drops the trailing wall_ms column.
std::string WithoutTiming(const std::string& csv) {
  std::string out;
  for (const std::string& line : Lines(csv)) {
    out += line.substr(0, line.rfind(',')) + "\n";
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(CliRunTest, GreedyOnOneSensorToy) {
  const Result r = Invoke({"run", "--instance", "fixture:one-sensor", "--policy",
                        "greedy", "--k", "1", "--mode", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0],
            "instance,policy,k,epsilon,seed,trials,mode,favg,stderr,"
            "queries_mean,wall_ms");
  EXPECT_EQ(lines[1].rfind("one-sensor,greedy,1,,0,0,exact,1,0,1,", 0), 0u)
      << lines[1];
}

TEST(CliRunTest, OneRowPerCombination) {
  const Result r = Invoke({"run", "--instance", "fixture:coverage-3", "--policy",
                        "greedy,lt", "--k", "1,2", "--epsilon", "0.1,0.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  // greedy x 2 k, lt x 2 k x 2 eps.
  EXPECT_EQ(Lines(r.out).size(), 1u + 2u + 4u);
}

TEST(CliRunTest, MissingEpsilonNamesTheFlag) {
  const Result r = Invoke({"run", "--instance", "fixture:coverage-3", "--policy",
                        "asg", "--k", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--epsilon"), std::string::npos) << r.err;
}

TEST(CliRunTest, InvalidValuesNameTheFlag) {
  Result r = Invoke({"run", "--instance", "fixture:coverage-3", "--policy",
                  "greedy", "--k", "7"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--k"), std::string::npos) << r.err;

  r = Invoke({"run", "--instance", "fixture:coverage-3", "--policy", "magic",
           "--k", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--policy"), std::string::npos) << r.err;

  r = Invoke({"run", "--instance", "fixture:coverage-3", "--policy", "local"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--instance"), std::string::npos) << r.err;

  r = Invoke({"run", "--instance", "/no/such/file.json", "--policy", "greedy",
           "--k", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("/no/such/file.json"), std::string::npos) << r.err;

  r = Invoke({"run", "--instance", "fixture:coverage-3", "--policy", "lt",
           "--k", "1", "--epsilon", "0.6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--epsilon"), std::string::npos) << r.err;
}

TEST(CliRunTest, ReproducibleAcrossRunsAndJobs) {
  const std::vector<std::string> base = {
      "run", "--instance", "fixture:mixed-5", "--policy", "arg,asg", "--k", "2",
      "--epsilon", "0.2", "--mode", "mc", "--trials", "500", "--seed", "9"};
  const Result a = Invoke(base);
  const Result b = Invoke(base);
  std::vector<std::string> parallel = base;
  parallel.insert(parallel.end(), {"--jobs", "3"});
  const Result c = Invoke(parallel);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(WithoutTiming(a.out), WithoutTiming(b.out));
  EXPECT_EQ(WithoutTiming(a.out), WithoutTiming(c.out));
}

TEST(CliRunTest, MatroidPoliciesFromFile) {
  const Result r = Invoke({"run", "--instance",
                        std::string(ADASUB_FIXTURE_DIR) + "/matroid_coverage.json",
                        "--policy", "local,gasg", "--epsilon", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1].rfind("coverage-4-matroid,local,2,,", 0), 0u) << lines[1];
}

TEST(CliRunTest, WritesToOutFile) {
  const std::string path = ::testing::TempDir() + "/adasub_cli_out.csv";
  const Result r = Invoke({"run", "--instance", "fixture:triangle-cut", "--policy",
                        "arg", "--k", "2", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Lines(ReadFile(path)).size(), 2u);
}

TEST(CliRunTest, EnumerationCapExitCode) {
  ::setenv("ADASUB_ENUM_CAP", "3", 1);
  const Result r = Invoke({"run", "--instance", "fixture:coverage-joint",
                        "--policy", "greedy", "--k", "2"});
  ::unsetenv("ADASUB_ENUM_CAP");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("use --mode mc"), std::string::npos) << r.err;
}

TEST(CliVerifyTest, QueriesSuitePasses) {
  const Result r = Invoke({"verify", "queries"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("PASS [5]", 0), 0u) << r.out;
}

TEST(CliVerifyTest, UnknownSuite) {
  const Result r = Invoke({"verify", "everything"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliGenerateTest, FullDensityCoverage) {
  const std::string path = ::testing::TempDir() + "/adasub_gen_cov.json";
  const Result r = Invoke({"generate", "coverage", "--n", "3", "--m", "4",
                        "--density", "1.0", "--seed", "7", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const Instance instance = LoadInstance(path);
  ASSERT_EQ(instance.n(), 3);
  for (ItemId e = 0; e < 3; ++e) {
    EXPECT_EQ(instance.Evaluate(std::vector<ItemId>{e}, Realization{1, 1, 1}), 4.0);
  }
}

TEST(CliGenerateTest, SameSeedSameFile) {
  const std::vector<std::string> args = {"generate", "mixed", "--n", "4",
                                         "--m", "3", "--seed", "12"};
  const Result a = Invoke(args);
  const Result b = Invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> other = args;
  other.back() = "13";
  EXPECT_NE(Invoke(other).out, a.out);
}

TEST(CliGenerateTest, CutFromEdgeList) {
  const Result r = Invoke({"generate", "cut", "--n", "4", "--edges",
                        "0-1:2.5;1-2;2-3:0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Instance instance = ParseInstance(r.out);
  const Realization phi{0, 0, 0, 0};
  EXPECT_DOUBLE_EQ(instance.Evaluate(std::vector<ItemId>{1}, phi), 3.5);
  EXPECT_DOUBLE_EQ(instance.Evaluate(std::vector<ItemId>{0, 2}, phi), 4.0);
}

TEST(CliGenerateTest, MatroidFlags) {
  const Result r = Invoke({"generate", "coverage", "--n", "4", "--blocks",
                        "0+1;2+3", "--limits", "1;2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Instance instance = ParseInstance(r.out);
  ASSERT_TRUE(instance.matroid.has_value());
  EXPECT_EQ(instance.matroid->limits, (std::vector<int>{1, 2}));
}

TEST(CliGenerateTest, InvalidParameters) {
  Result r = Invoke({"generate", "coverage", "--density", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("density"), std::string::npos) << r.err;
  r = Invoke({"generate", "cut", "--edges", "0-9"});
  EXPECT_EQ(r.code, 1);
  r = Invoke({"generate", "coverage", "--blocks", "0+1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--limits"), std::string::npos) << r.err;
  r = Invoke({"generate", "sphere"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliTest, NoSubcommand) {
  EXPECT_EQ(Invoke({}).code, 1);
  EXPECT_EQ(Invoke({"--help"}).code, 0);
}

}  // namespace
}  // namespace adasub
