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

#include "fuzznorm/error.hpp"
#include "fuzznorm/io.hpp"

namespace fuzznorm {
namespace {

using nlohmann::json;

UnitScalar q(long p, long d = 1) { return {p, d}; }

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TEST(JsonTest, SyntaxErrorNamesTheLine) {
  const auto msg = message_of([] { io::parse_json("{\n  \"a\": 1,\n  oops\n}", "input.json"); });
  EXPECT_NE(msg.find("input.json"), std::string::npos);
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_THROW(io::parse_json("[", "x"), ParseError);
}

TEST(JsonTest, MissingFileIsAParseError) {
  EXPECT_THROW(io::read_json("/nonexistent/fuzznorm.json"), ParseError);
}

TEST(SubsetJsonTest, TableAndIndicatorForms) {
  const auto table = io::subset_from_json(json::parse(R"({"form":"table","entries":[["0",1],["1/2","1/4"],[1,1]]})"), "t");
  EXPECT_EQ(table(q(1, 2)), q(1, 4));
  const auto ind = io::subset_from_json(json::parse(R"({"form":"indicator","members":["0","1"]})"), "i");
  EXPECT_EQ(ind(q(0)), q(1));
  EXPECT_EQ(ind(q(1, 2)), q(0));
  const auto b = io::subset_from_json(json::parse(R"({"form":"builtin:complement"})"), "b");
  EXPECT_EQ(b(q(1, 4)), q(3, 4));
}

TEST(SubsetJsonTest, BadFieldsAreNamed) {
  const auto msg = message_of(
      [] { io::subset_from_json(json::parse(R"({"form":"table","entries":[["0","3/2"]]})"), "mu.json"); });
  EXPECT_NE(msg.find("mu.json"), std::string::npos);
  EXPECT_NE(msg.find("entries"), std::string::npos) << msg;
  EXPECT_THROW(io::subset_from_json(json::parse(R"({"form":"spline"})"), "s"), ParseError);
  EXPECT_THROW(io::subset_from_json(json::parse(R"({"entries":[]})"), "s"), ParseError);
}

TEST(CarrierJsonTest, CyclicGroupFromTable) {
  const auto j = json::parse(R"({"name":"Z3","elements":["0","1","2"],
    "op":[["0","1","2"],["1","2","0"],["2","0","1"]],"identity":"0"})");
  const auto c = io::carrier_from_json(j, "z3.json");
  EXPECT_EQ(c.name, "Z3");
  EXPECT_EQ(c.elements.size(), 3u);
  EXPECT_EQ(c.op(element_of(c, "2"), element_of(c, "2")), element_of(c, "1"));
  const auto mu = io::subset_on_carrier_from_json(json::parse(R"({"form":"indicator","members":["0"]})"), c, "mu");
  EXPECT_EQ(mu(element_of(c, "0")), q(1));
}

TEST(CarrierJsonTest, UnknownLabelsAndMissingDegrees) {
  EXPECT_THROW(io::carrier_from_json(json::parse(R"({"elements":["0"],"op":[["9"]]})"), "c"), ParseError);
  const auto c = io::carrier_from_json(json::parse(R"({"elements":["0","1"],"op":[["0","1"],["1","0"]]})"), "c");
  EXPECT_THROW(io::subset_on_carrier_from_json(json::parse(R"({"form":"table","entries":[["0",1]]})"), c, "mu"),
               NotTotalError);
}

TEST(LatticeJsonTest, DiamondFromCovers) {
  const auto l = io::lattice_from_json(
      json::parse(R"({"name":"M2","elements":["0","a","b","1"],"covers":[["0","a"],["0","b"],["a","1"],["b","1"]]})"),
      "m2.json");
  EXPECT_EQ(l.size(), 4u);
  EXPECT_FALSE(l.is_chain());
  EXPECT_THROW(io::lattice_from_json(json::parse(R"({"elements":["0","a","b"],"covers":[["0","a"],["0","b"]]})"), "v"),
               UnboundedError);
}

TEST(EqualityJsonTest, TableMustBeComplete) {
  const auto t = tnorm(TNormFamily::kMinimum);
  const auto eq = io::equality_from_json(
      json::parse(R"({"form":"table","entries":[["0","0",1],["0","1",0],["1","0",0],["1","1",1]]})"), t, "eq");
  EXPECT_EQ(eq.size(), 2u);
  EXPECT_EQ(eq(0, 1), q(0));
  EXPECT_THROW(io::equality_from_json(json::parse(R"({"form":"table","entries":[["0","0",1],["1","1",1]]})"), t, "eq"), ParseError);
}

TEST(BudgetJsonTest, OverridesAndUnknownKeys) {
  const auto b = io::apply_budget_override(SearchBudget{}, json::parse(R"({"n_max":5,"epsilon":"1/8","max_witnesses":0})"),
                                           "env");
  EXPECT_EQ(b.n_max, 5);
  EXPECT_EQ(b.epsilon, q(1, 8));
  EXPECT_EQ(b.max_witnesses, 0u);
  EXPECT_EQ(b.iter_cap, SearchBudget{}.iter_cap);
  const auto msg = message_of([] { io::apply_budget_override(SearchBudget{}, json::parse(R"({"nmax":5})"), "env"); });
  EXPECT_NE(msg.find("nmax"), std::string::npos);
}

}  // namespace
}  // namespace fuzznorm
