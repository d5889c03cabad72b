// Copyright 2026 The fuzznorm Authors
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
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fuzznorm::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("fuzznorm-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, kExitHolds);
  EXPECT_NE(r.out.find("suite"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExit64) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check", "tnorm:hamacher"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check", "tnorm:product", "--props", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check", "tnorm:product", "--grid", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check", "tnorm:product", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check", "tnorm:product", "--epsilon", "abc"}).code, kExitUsage);
}

TEST_F(CliTest, CheckReportsAsJson) {
  const auto r = run_cli({"check", "tnorm:product", "--props", "axioms,archimedean", "--grid", "6"});
  EXPECT_EQ(r.code, kExitHolds);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["exit_code"], 0);
}

TEST_F(CliTest, FailingPropertyExitsOne) {
  const auto r = run_cli({"check", "tnorm:min", "--props", "archimedean", "--format", "text"});
  EXPECT_EQ(r.code, kExitFails);
  EXPECT_NE(r.out.find("FAILS"), std::string::npos);
}

TEST_F(CliTest, InconclusiveExitsTwo) {
  const auto r = run_cli({"check", "tnorm:product", "--props", "archimedean", "--nmax", "2"});
  EXPECT_EQ(r.code, kExitVacuous);
}

TEST_F(CliTest, BudgetOverrideFromEnvironment) {
  ::setenv("FUZZNORM_BUDGET_OVERRIDE", R"({"n_max": 2})", 1);
  const auto r = run_cli({"check", "tnorm:product", "--props", "archimedean"});
  ::setenv("FUZZNORM_BUDGET_OVERRIDE", R"({"bogus": 2})", 1);
  const auto bad = run_cli({"check", "tnorm:product"});
  ::unsetenv("FUZZNORM_BUDGET_OVERRIDE");
  EXPECT_EQ(r.code, kExitVacuous);
  EXPECT_EQ(bad.code, kExitUsage);
  // Flags win over the environment.
  ::setenv("FUZZNORM_BUDGET_OVERRIDE", R"({"n_max": 2})", 1);
  const auto flagged = run_cli({"check", "tnorm:product", "--props", "archimedean", "--nmax", "64"});
  ::unsetenv("FUZZNORM_BUDGET_OVERRIDE");
  EXPECT_EQ(flagged.code, kExitHolds);
}

TEST_F(CliTest, SubstructureOnInterval) {
  EXPECT_EQ(run_cli({"substructure", "--mu", "builtin:identity", "--carrier", "tnorm:min", "--kind", "t-subnorm"}).code,
            kExitHolds);
  const auto r = run_cli({"substructure", "--mu", "builtin:identity", "--carrier", "tnorm:product", "--kind",
                          "t-subnorm", "--grid", "10"});
  EXPECT_EQ(r.code, kExitFails);
  EXPECT_EQ(run_cli({"substructure", "--mu", "builtin:identity", "--carrier", "tnorm:min", "--kind", "bogus"}).code,
            kExitUsage);
}

TEST_F(CliTest, SubstructureCase) {
  const auto r = run_cli({"substructure", "--mu", "builtin:one", "--carrier", "tnorm:min", "--kind", "a-submonoid",
                          "--case", "prop17", "--grid", "4"});
  EXPECT_EQ(r.code, kExitHolds) << r.err;
}

TEST_F(CliTest, PartialSubsetExits65) {
  const auto mu = write("mu.json", R"({"form":"table","entries":[["0",1],["1",1]]})");
  const auto r = run_cli({"substructure", "--mu", mu, "--carrier", "tnorm:min", "--kind", "t-subnorm", "--grid", "4"});
  EXPECT_EQ(r.code, kExitNotTotal);
  EXPECT_NE(r.err.find("1/4"), std::string::npos) << r.err;
}

TEST_F(CliTest, FiniteCarrierFromFiles) {
  const auto carrier = write("z4.json", R"({"name":"Z4","elements":["0","1","2","3"],
    "op":[["0","1","2","3"],["1","2","3","0"],["2","3","0","1"],["3","0","1","2"]],"identity":"0"})");
  const auto good = write("good.json", R"({"form":"indicator","members":["0","2"]})");
  const auto bad = write("bad.json", R"({"form":"indicator","members":["0","1"]})");
  const auto partial = write("partial.json", R"({"form":"table","entries":[["0",1]]})");
  EXPECT_EQ(run_cli({"substructure", "--mu", good, "--carrier", carrier, "--kind", "subgroup"}).code, kExitHolds);
  EXPECT_EQ(run_cli({"substructure", "--mu", bad, "--carrier", carrier, "--kind", "subgroup"}).code, kExitFails);
  EXPECT_EQ(run_cli({"substructure", "--mu", partial, "--carrier", carrier, "--kind", "subgroup"}).code,
            kExitNotTotal);
}

TEST_F(CliTest, MalformedJsonExits64) {
  const auto mu = write("broken.json", "{ \"form\": ");
  const auto r = run_cli({"substructure", "--mu", mu, "--carrier", "tnorm:min", "--kind", "t-subnorm"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("broken.json"), std::string::npos);
}

TEST_F(CliTest, VagueDefaults) {
  const auto r = run_cli({"vague", "--props", "equality,operation,commutativity", "--grid", "6"});
  EXPECT_EQ(r.code, kExitHolds) << r.err;
  EXPECT_EQ(run_cli({"vague", "--tnorm", "tnorm:min", "--props", "equality"}).code, kExitFails);
  EXPECT_EQ(run_cli({"vague", "--props", "nonsense"}).code, kExitUsage);
}

TEST_F(CliTest, LatticeCommands) {
  const auto r = run_cli({"lattice", "--lattice", "chain:3", "--props", "enumerate"});
  EXPECT_EQ(r.code, kExitHolds);
  EXPECT_EQ(nlohmann::json::parse(r.out)["tnorm_count"], 2);
  EXPECT_EQ(run_cli({"lattice", "--lattice", "diamond", "--mu", "0,a,b,1", "--props", "subnorm"}).code, kExitHolds);
  EXPECT_EQ(run_cli({"lattice", "--lattice", "diamond", "--mu", "0,a", "--props", "subnorm"}).code, kExitNotTotal);
  const auto bad = write("v.json", R"({"elements":["0","a","b"],"covers":[["0","a"],["0","b"]]})");
  EXPECT_EQ(run_cli({"lattice", "--lattice", bad}).code, kExitUsage);
}

TEST_F(CliTest, EnumerateRows) {
  const auto r = run_cli({"enumerate", "rows"});
  EXPECT_EQ(r.code, kExitHolds);
  EXPECT_GT(nlohmann::json::parse(r.out)["count"].get<int>(), 30);
  EXPECT_EQ(run_cli({"enumerate", "widgets"}).code, kExitUsage);
}

TEST_F(CliTest, OutWritesFile) {
  const auto path = (dir_ / "out.json").string();
  const auto r = run_cli({"check", "tnorm:min", "--out", path});
  EXPECT_EQ(r.code, kExitHolds);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["command"], "check");
}

TEST_F(CliTest, SuiteSubset) {
  const auto r = run_cli({"suite", "--only", "axioms,discrete-uninorm", "--format", "json"});
  EXPECT_EQ(r.code, kExitHolds) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 2u);
  EXPECT_FALSE(j["rows"][0].contains("runtime_ms"));
  EXPECT_EQ(run_cli({"suite", "--only", "nope"}).code, kExitUsage);
}

}  // namespace
}  // namespace fuzznorm::cli
