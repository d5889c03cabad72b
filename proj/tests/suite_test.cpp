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

#include <set>

#include "fuzznorm/error.hpp"
#include "fuzznorm/suite.hpp"

namespace fuzznorm {
namespace {

TEST(SuiteTest, CatalogIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& row : suite_catalog()) EXPECT_TRUE(ids.insert(row.id).second) << row.id;
}

TEST(SuiteTest, OnlyRunsRequestedRowsInCatalogOrder) {
  SuiteConfig config;
  config.only = {"discrete-nullnorm", "axioms"};
  const auto result = run_suite(config);
  ASSERT_EQ(result.rows.size(), 2u);
  EXPECT_EQ(result.rows[0].id, "axioms");
  EXPECT_EQ(result.rows[1].id, "discrete-nullnorm");
  EXPECT_EQ(result.exit_code(), 0);
}

TEST(SuiteTest, UnknownRowAndTinyGridAreConfigurationErrors) {
  SuiteConfig bad;
  bad.only = {"missing"};
  EXPECT_THROW(run_suite(bad), ConfigurationError);
  SuiteConfig tiny;
  tiny.grid = 1;
  EXPECT_THROW(run_suite(tiny), ConfigurationError);
}

TEST(SuiteTest, TightBudgetSkipsInsteadOfFailing) {
  SuiteConfig config;
  config.only = {"prop16"};
  config.budget.max_tuples = 10;
  const auto result = run_suite(config);
  ASSERT_EQ(result.rows.size(), 1u);
  EXPECT_EQ(result.rows[0].status, RowStatus::kSkipped);
  EXPECT_FALSE(result.rows[0].detail.empty());
  EXPECT_EQ(result.exit_code(), 2);
}

TEST(SuiteTest, ParallelRunMatchesSerialRun) {
  SuiteConfig serial;
  serial.only = {"axioms", "subgroupoid-indicator", "prop3.6", "prop13", "vague-commutativity"};
  SuiteConfig parallel = serial;
  parallel.jobs = 4;
  EXPECT_EQ(to_json(run_suite(serial)).dump(), to_json(run_suite(parallel)).dump());
}

TEST(SuiteTest, TimingsOnlyWhenAsked) {
  SuiteConfig config;
  config.only = {"axioms"};
  const auto result = run_suite(config);
  EXPECT_FALSE(to_json(result)["rows"][0].contains("runtime_ms"));
  EXPECT_TRUE(to_json(result, true)["rows"][0].contains("runtime_ms"));
  EXPECT_NE(to_text(result).find("axioms"), std::string::npos);
}

}  // namespace
}  // namespace fuzznorm
