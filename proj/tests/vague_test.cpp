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

#include "fuzznorm/checker.hpp"
#include "fuzznorm/error.hpp"
#include "fuzznorm/vague.hpp"

namespace fuzznorm {
namespace {

UnitScalar q(long p, long d = 1) { return {p, d}; }

const Connective kTM = tnorm(TNormFamily::kMinimum);
const Connective kTP = tnorm(TNormFamily::kProduct);
const Connective kTL = tnorm(TNormFamily::kLukasiewicz);
const Connective kTD = tnorm(TNormFamily::kDrastic);

VagueTNorm lukasiewicz_on(std::int64_t n) {
  return induce_vague_tnorm("lukasiewicz", equalities::lukasiewicz(), kTL, Domain::grid(n));
}

std::size_t index_of(const VagueOperation& op, const UnitScalar& x) {
  for (std::size_t i = 0; i < op.size(); ++i) {
    if (std::get<UnitScalar>(op.eq.labels[i]) == x) return i;
  }
  ADD_FAILURE() << "no label " << x;
  return 0;
}

TEST(EqualityTest, LukasiewiczDistanceIsTransitiveForLukasiewicz) {
  const auto eq = tabulate_equality("lukasiewicz", equalities::lukasiewicz(), Domain::grid(10), kTL);
  EXPECT_TRUE(validate_fuzzy_equality(eq).holds());
  EXPECT_TRUE(eq.separates_points());
}

TEST(EqualityTest, LukasiewiczDistanceIsNotTransitiveForMinimum) {
  SearchBudget all;
  all.max_witnesses = 0;
  const auto eq = tabulate_equality("lukasiewicz", equalities::lukasiewicz(), Domain::grid(10), kTM);
  const auto r = validate_fuzzy_equality(eq, all);
  EXPECT_TRUE(r.fails());
  EXPECT_TRUE(r.find_check("transitivity")->contains_witness({q(0), q(1, 2), q(1)}));
}

TEST(EqualityTest, CrispIsValidForEveryTnorm) {
  for (const auto& t : {kTM, kTP, kTL, kTD}) {
    const auto eq = tabulate_equality("crisp", equalities::crisp(), Domain::grid(6), t);
    EXPECT_TRUE(validate_fuzzy_equality(eq).holds()) << t.name();
  }
}

TEST(EqualityTest, UnknownNameIsRejected) { EXPECT_THROW(equalities::by_name("euclid"), ConfigurationError); }

TEST(InduceTest, DegreesAreDistancesToTheProduct) {
  const auto v = induce_vague_tnorm("lukasiewicz", equalities::lukasiewicz(), kTL, Domain::grid(10));
  const auto& op = v.op;
  EXPECT_EQ(op(index_of(op, q(7, 10)), index_of(op, q(1, 2)), index_of(op, q(3, 10))), q(9, 10));
  for (std::size_t x = 0; x < op.size(); ++x) {
    const auto one = index_of(op, q(1));
    EXPECT_EQ(op(one, x, x), q(1));
    for (std::size_t y = 0; y < op.size(); ++y) {
      const auto xy = kTL(std::get<UnitScalar>(op.eq.labels[x]), std::get<UnitScalar>(op.eq.labels[y]));
      EXPECT_EQ(op(x, y, index_of(op, xy)), q(1));
    }
  }
}

TEST(InduceTest, InvalidEqualityIsADomainError) {
  EXPECT_THROW(induce_vague_tnorm("lukasiewicz", equalities::lukasiewicz(), kTM, Domain::grid(4)), DomainError);
}

TEST(VagueOperationTest, InducedLukasiewiczPassesAllConditions) {
  const auto r = check_vague_operation(lukasiewicz_on(6).op);
  EXPECT_TRUE(r.holds());
  for (const char* id : {"extensionality", "functionality", "totality"}) EXPECT_NE(r.find_check(id), nullptr);
}

TEST(VagueOperationTest, IncompatibleTnormBreaksExtensionality) {
  // E_G(1/6, 1) = 1/6 but E_G(T_D(1/6,1/6), T_D(1/6,1)) = E_G(0, 1/6) = 0.
  const auto v = induce_vague_tnorm("goedel", equalities::goedel(), kTD, Domain::grid(6));
  const auto r = check_vague_operation(v.op);
  EXPECT_TRUE(r.fails());
  EXPECT_TRUE(r.find_check("extensionality")->fails());
  EXPECT_TRUE(r.find_check("functionality")->holds());
}

TEST(VagueOperationTest, BrokenFunctionalityIsCaught) {
  const auto eq = tabulate_equality("crisp", equalities::crisp(), Domain::grid(1 + 1), kTM);
  std::vector<std::vector<std::vector<UnitScalar>>> mu(3, std::vector<std::vector<UnitScalar>>(3, std::vector<UnitScalar>(3, q(0))));
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) mu[x][y][std::min(x, y)] = q(1);
  }
  mu[0][0][1] = q(1);
  const auto op = vague_operation_from_table("broken", eq, mu);
  EXPECT_TRUE(check_vague_operation(op).find_check("functionality")->fails());
  const auto monoid = check_vague_monoid(op);
  EXPECT_TRUE(monoid.fails());
  EXPECT_TRUE(monoid.has_tag("NOT_VAGUE_OP"));
}

TEST(VagueMonoidTest, LukasiewiczOnFourGrid) {
  const auto r = check_vague_monoid(lukasiewicz_on(4).op);
  EXPECT_TRUE(r.holds());
}

TEST(VagueMonoidTest, CrispEqualityOverLukasiewiczChain) {
  const auto v = induce_vague_tnorm("crisp", equalities::crisp(), kTL, Domain::grid(4));
  EXPECT_TRUE(check_vague_monoid(v.op).holds());
}

TEST(VagueMonoidTest, RefusesLargeCarriers) {
  SearchBudget small;
  small.max_tuples = 1000;
  EXPECT_THROW(check_vague_monoid(lukasiewicz_on(4).op, small), BudgetError);
}

TEST(VagueCommutativityTest, InducedOperationsAreCommutative) {
  for (const char* name : {"crisp", "lukasiewicz"}) {
    const auto v = induce_vague_tnorm(name, equalities::by_name(name), kTL, Domain::grid(6));
    EXPECT_TRUE(check_vague_commutativity(v.op).holds()) << name;
  }
  const auto m = induce_vague_tnorm("crisp", equalities::crisp(), kTM, Domain::grid(4));
  EXPECT_TRUE(check_vague_commutativity(m.op).holds());
}

TEST(VagueStrictMonotoneTest, ProductAndMinimumFailWithCrispEquality) {
  for (const auto& t : {kTP, kTM}) {
    const auto v = induce_vague_tnorm("crisp", equalities::crisp(), t, Domain::grid(4));
    for (auto reading : {VagueReading::kLiteral, VagueReading::kCrisp}) {
      EXPECT_TRUE(check_vague_strict_monotone(v.op, reading).fails()) << t.name();
    }
  }
}

TEST(VagueStrictMonotoneTest, TwoPointCarrierHasAPremiseInstance) {
  // x=0 < y=1 with z=0 gives T(0,0) = T(1,0) = 0 at full degree.
  const auto v = induce_vague_tnorm("crisp", equalities::crisp(), kTM, Domain::from_points({q(0), q(1)}));
  const auto r = check_vague_strict_monotone(v.op, VagueReading::kLiteral);
  EXPECT_EQ(r.verdict, Verdict::kFails);
  EXPECT_GT(r.instances, 0u);
}

TEST(VagueCancellationTest, MinimumFailsWithCrispEquality) {
  const auto v = induce_vague_tnorm("crisp", equalities::crisp(), kTM, Domain::grid(10));
  EXPECT_TRUE(check_vague_cancellation(v.op, VagueReading::kCrisp).fails());
}

// With crisp E and the crisp reading, vague verdicts match the classical ones.
TEST(DegenerationTest, CrispVerdictsMatchClassical) {
  const std::vector<Domain> domains{Domain::grid(4), Domain::from_points({q(1, 4), q(1, 2), q(3, 4), q(1)})};
  for (const auto& d : domains) {
    for (const auto& t : {kTM, kTP, kTL, kTD}) {
      bool closed = true;
      for (const auto& x : d.points()) {
        for (const auto& y : d.points()) closed = closed && d.contains(t(x, y));
      }
      if (!closed) continue;
      const auto v = induce_vague_tnorm("crisp", equalities::crisp(), t, d);
      EXPECT_EQ(check_vague_strict_monotone(v.op, VagueReading::kCrisp).fails(),
                check_strict_monotonicity(t, d).fails())
          << t.name();
      EXPECT_EQ(check_vague_cancellation(v.op, VagueReading::kCrisp).fails(),
                check_cancellation(t, d, Cancellation::kPlain).fails())
          << t.name();
    }
  }
}

TEST(VagueGroupTest, CrispCyclicGroupsCancel) {
  for (std::uint32_t n : {3u, 4u}) {
    const auto g = make_vague_group(crisp_vague_operation(cyclic_group(n)));
    EXPECT_TRUE(check_vague_group_cancellation(g).holds()) << n;
    EXPECT_EQ(g.identity, 0u);
  }
}

TEST(VagueGroupTest, MissingInverseIsADomainError) {
  // ({0,1}, max) has identity 0 but 1 has no inverse.
  const auto c = finite_carrier("or", {"0", "1"}, {{0, 1}, {1, 1}}, "0");
  EXPECT_THROW(make_vague_group(crisp_vague_operation(c)), DomainError);
}

}  // namespace
}  // namespace fuzznorm
