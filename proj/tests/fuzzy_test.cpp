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
#include "fuzznorm/fuzzy.hpp"
#include "oracle.hpp"

namespace fuzznorm {
namespace {

UnitScalar q(long p, long d = 1) { return {p, d}; }

const Connective kTM = tnorm(TNormFamily::kMinimum);
const Connective kTP = tnorm(TNormFamily::kProduct);
const Connective kTL = tnorm(TNormFamily::kLukasiewicz);
const Connective kSM = tconorm(TConormFamily::kMaximum);
const Connective kSP = tconorm(TConormFamily::kProbabilisticSum);
const Connective kSL = tconorm(TConormFamily::kLukasiewicz);

TEST(SubnormTest, IdentityUnderMinimum) {
  EXPECT_TRUE(check_fuzzy_subnorm(subsets::identity(), kTM, Domain::grid(10)).holds());
}

TEST(SubnormTest, IdentityUnderProductFailsAtOneHalf) {
  SearchBudget all;
  all.max_witnesses = 0;
  const auto r = check_fuzzy_subnorm(subsets::identity(), kTP, Domain::grid(10), all);
  EXPECT_TRUE(r.fails());
  EXPECT_TRUE(r.contains_witness({q(1, 2), q(1, 2)}));
}

TEST(SubnormTest, ConstantOneUnderEveryBuiltin) {
  for (auto f : all_tnorm_families()) {
    EXPECT_TRUE(check_fuzzy_subnorm(subsets::one(), tnorm(f), Domain::grid(10)).holds()) << short_name(f);
  }
}

TEST(SubnormTest, ComplementIsSubconormOfMaximum) {
  const auto c = interval_carrier(kSM, Domain::grid(10));
  EXPECT_TRUE(check_fuzzy_submonoid(subsets::complement(), c, SubstructureKind(Substructure::kTSubconorm)).holds());
}

TEST(SubnormTest, WrongCarrierRoleIsRejected) {
  const auto c = interval_carrier(kSM, Domain::grid(4));
  EXPECT_THROW(check_fuzzy_submonoid(subsets::one(), c, SubstructureKind(Substructure::kTSubnorm)),
               ConfigurationError);
}

TEST(SubstructureKindTest, CombinerRoleIsValidated) {
  EXPECT_NO_THROW(SubstructureKind(Substructure::kUSubmonoid, construct_uninorm_min(q(1, 2), kTP, kSP)));
  EXPECT_NO_THROW(SubstructureKind(Substructure::kUSubmonoid, kTP));
  EXPECT_THROW(SubstructureKind(Substructure::kUSubmonoid, aggregation_mean()), ConfigurationError);
  EXPECT_THROW(SubstructureKind(Substructure::kFSubmonoid), ConfigurationError);
}

// Brute-force oracle: min(mu(x), mu(y)) <= mu(x*y) and mu(e) = 1.
bool submonoid_by_hand(const std::vector<UnitScalar>& mu, const std::vector<std::vector<std::uint32_t>>& table,
                       std::uint32_t e) {
  if (!(mu[e] == q(1))) return false;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    for (std::size_t y = 0; y < mu.size(); ++y) {
      if (mu[table[x][y]] < min(mu[x], mu[y])) return false;
    }
  }
  return true;
}

TEST(SubmonoidTest, RandomTablesAgreeWithBruteForce) {
  // Multiplication mod 6 is a monoid with identity 1.
  const std::uint32_t n = 6;
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::uint32_t j = 0; j < n; ++j) table[i][j] = (i * j) % n;
  }
  const auto c = finite_carrier("Z6*", labels, table, "1");
  std::mt19937 rng(6006);
  const std::vector<UnitScalar> alphabet{q(0), q(1, 3), q(2, 3), q(1)};
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int agreed_true = 0;
  for (int trial = 0; trial < 600; ++trial) {
    std::vector<UnitScalar> mu(n);
    for (auto& v : mu) v = alphabet[pick(rng)];
    mu[1] = q(1);
    if (trial % 3 == 0) mu[1] = alphabet[pick(rng)];
    const bool expected = submonoid_by_hand(mu, table, 1);
    const auto r = check_fuzzy_submonoid(subsets::table_on("mu", mu), c, SubstructureKind(Substructure::kSubmonoid));
    EXPECT_EQ(r.holds(), expected) << "trial " << trial;
    agreed_true += expected ? 1 : 0;
  }
  EXPECT_GT(agreed_true, 0);
}

TEST(SubgroupTest, IndicatorsOnCyclicGroup) {
  const auto z4 = with_inverses(cyclic_group(4));
  auto ind = [&](std::vector<std::string> members) {
    std::vector<FiniteElement> els;
    for (const auto& m : members) els.push_back(element_of(z4, m));
    return subsets::indicator_on(els);
  };
  EXPECT_TRUE(check_fuzzy_subgroup(ind({"0"}), z4).holds());
  EXPECT_TRUE(check_fuzzy_subgroup(ind({"0", "2"}), z4).holds());
  EXPECT_TRUE(check_fuzzy_subgroup(ind({"0", "1", "2", "3"}), z4).holds());
  EXPECT_TRUE(check_fuzzy_subgroup(ind({"0", "1"}), z4).fails());
  EXPECT_TRUE(check_fuzzy_subgroupoid(ind({"0", "1"}), z4).fails());
}

TEST(SubgroupTest, IntersectionOfSubgroupsIsSubgroup) {
  const auto z4 = with_inverses(cyclic_group(4));
  const auto a = subsets::table_on("a", {q(1), q(1, 2), q(3, 4), q(1, 2)});
  const auto b = subsets::table_on("b", {q(1), q(1, 4), q(1, 4), q(1, 4)});
  ASSERT_TRUE(check_fuzzy_subgroup(a, z4).holds());
  ASSERT_TRUE(check_fuzzy_subgroup(b, z4).holds());
  const auto both = intersect<FiniteElement>({a, b});
  EXPECT_TRUE(check_fuzzy_subgroup(both, z4).holds());
  EXPECT_EQ(both(element_of(z4, "2")), q(1, 4));
}

TEST(IntersectTest, PointwiseMinimum) {
  const auto m = intersect<UnitScalar>({subsets::identity(), subsets::complement()});
  EXPECT_EQ(m(q(1, 4)), q(1, 4));
  EXPECT_EQ(m(q(3, 4)), q(1, 4));
  EXPECT_EQ(intersect<UnitScalar>({subsets::one(), subsets::identity()})(q(2, 5)), q(2, 5));
}

TEST(TotalityTest, MissingTablePointIsReported) {
  const auto mu = subsets::table("partial", {{q(0), q(1)}, {q(1), q(1)}});
  EXPECT_THROW(require_total(mu, interval_carrier(kTM, Domain::grid(2))), NotTotalError);
  EXPECT_NO_THROW(require_total(mu, interval_carrier(kTM, Domain::from_points({q(0), q(1)}))));
}

TEST(CoreTest, CoreOfSubmonoidIsClosed) {
  const auto d = Domain::grid(4);
  const auto mu = subsets::table("mu", {{q(0), q(1)}, {q(1, 4), q(1, 2)}, {q(1, 2), q(1)}, {q(3, 4), q(1, 2)}, {q(1), q(1)}});
  const auto c = interval_carrier(kTM, d);
  ASSERT_TRUE(check_fuzzy_submonoid(mu, c, SubstructureKind(Substructure::kSubmonoid)).holds());
  const auto core = extract_core(mu, c);
  EXPECT_EQ(core.core.size(), 3u);
  EXPECT_TRUE(core.report.holds());
}

TEST(FuzzyPropertyTest, ConstantOneIsNotStrict) {
  for (auto f : all_tnorm_families()) {
    EXPECT_TRUE(check_fuzzy_property(subsets::one(), tnorm(f), FuzzyProperty::kStrict, Domain::grid(6)).fails());
  }
}

TEST(FuzzyPropertyTest, IdentityUnderMinimumDoesNotCancel) {
  const auto d = Domain::grid(10);
  const auto r = check_fuzzy_property(subsets::identity(), kTM, FuzzyProperty::kCancel, d);
  EXPECT_TRUE(r.fails());
  SearchBudget all;
  all.max_witnesses = 0;
  EXPECT_TRUE(check_fuzzy_property(subsets::identity(), kTM, FuzzyProperty::kCancel, d, all)
                  .contains_witness({q(1, 2), q(3, 5), q(7, 10)}));
}

TEST(FuzzyPropertyTest, RequiresTnorm) {
  EXPECT_THROW(check_fuzzy_property(subsets::one(), kSM, FuzzyProperty::kStrict, Domain::grid(4)), DomainError);
}

TEST(FuzzyPropertyTest, StrictWithoutInteriorPointsIsVacuous) {
  const auto r = check_fuzzy_property(subsets::complement(), kTP, FuzzyProperty::kStrict,
                                      Domain::from_points({q(0), q(1)}));
  EXPECT_EQ(r.verdict, Verdict::kVacuous);
  EXPECT_TRUE(r.has_tag("NO_INTERIOR_ELEMENT"));
}

// mu(x) = 1 - x/2 below 1 and mu(1) = 1 is strictly monotone in the fuzzy sense
// for the product, yet cancellation fails at x = 1 because mu(0) = mu(1).
TEST(FuzzyPropertyTest, StrictDoesNotForceCancellationAtTop) {
  const FuzzySubset<UnitScalar> mu("half-slope", [](const UnitScalar& x) {
    return x.is_one() ? UnitScalar::one() : UnitScalar::one() - x * UnitScalar(1, 2);
  });
  const auto d = Domain::grid(6);
  ASSERT_TRUE(check_fuzzy_subnorm(mu, kTP, d).holds());
  EXPECT_TRUE(check_fuzzy_property(mu, kTP, FuzzyProperty::kStrict, d).holds());
  const auto cancel = check_fuzzy_property(mu, kTP, FuzzyProperty::kCancel, d);
  EXPECT_TRUE(cancel.fails());
  EXPECT_TRUE(cancel.contains_witness({q(1), q(0), q(1)}));
}

TEST(FuzzyPropertyTest, ConstantSubsetIsVacuouslyArchimedean) {
  const auto d = Domain::grid(10);
  const auto constant = check_fuzzy_property(subsets::one(), kTP, FuzzyProperty::kArchimedean, d);
  EXPECT_EQ(constant.verdict, Verdict::kVacuous);
  EXPECT_TRUE(constant.has_tag("VACUOUS_BY_CONSTANCY"));
}

TEST(NotStrictlyDecreasingTest, ProductSubnorms) {
  const auto d = Domain::grid(6).with_points({q(1, 2)});
  const auto r = check_not_strictly_decreasing(subsets::one(), kTP, d);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.notes.at("subnorm"), "true");
}

TEST(CharacterizationTest, MinAggregationOverMinimum) {
  const auto d = Domain::grid(6);
  EXPECT_TRUE(characterize_special_cases("prop17", subsets::identity(), kTM, d).holds());
  EXPECT_TRUE(characterize_special_cases("prop17", subsets::complement(), kTM, d).holds());
  EXPECT_TRUE(characterize_special_cases("prop18", subsets::complement(), kSM, d).holds());
  EXPECT_THROW(characterize_special_cases("prop17", subsets::one(), kTP, d), DomainError);
  EXPECT_THROW(characterize_special_cases("nope", subsets::one(), kTM, d), ConfigurationError);
}

TEST(CharacterizationTest, DisjunctiveUninormOnlyAcceptsOne) {
  const auto u = construct_uninorm_max(q(1, 2), kTP, kSP);
  const auto d = Domain::grid(2);
  EXPECT_TRUE(characterize_special_cases("disjunctive", subsets::one(), u, d).holds());
  EXPECT_TRUE(characterize_special_cases("disjunctive", subsets::identity(), u, d).holds());
  EXPECT_THROW(characterize_special_cases("disjunctive", subsets::one(), construct_uninorm_min(q(1, 2), kTP, kSP), d),
               DomainError);
}

TEST(CharacterizationTest, NullnormLowerBound) {
  const auto f = construct_nullnorm(kSL, q(1, 2), kTL);
  const auto d = Domain::grid(4);
  const auto r = characterize_special_cases("prop24", subsets::constant(q(1, 4)), f, d);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.notes.at("left"), "fails");
  const auto fm = construct_nullnorm(kSM, q(1, 2), kTM);
  EXPECT_TRUE(characterize_special_cases("prop25", subsets::step(q(1, 2)), fm, d).holds());
}

TEST(RefutationTest, IdentityIsNoUninormSubnorm) {
  const auto family = uninorm_family({q(1, 4), q(1, 2), q(3, 4)}, {kTP, kTL}, {kSP, kSL});
  ASSERT_EQ(family.size(), 24u);
  for (const auto& carrier : {kTP, kTL, kTM}) {
    const auto r = refute_uninorm_existence(subsets::identity(), carrier, family, Domain::grid(4));
    EXPECT_TRUE(r.all_refuted()) << carrier.name();
    for (const auto& m : r.members) {
      ASSERT_TRUE(m.contradiction.has_value()) << m.uninorm;
      const auto x = std::get<UnitScalar>(m.contradiction->inputs[0]);
      const auto y = std::get<UnitScalar>(m.contradiction->inputs[1]);
      EXPECT_LT(x, y);
    }
  }
}

TEST(RefutationTest, ComplementIsNoUninormSubconorm) {
  const auto family = uninorm_family({q(1, 4), q(1, 2), q(3, 4)}, {kTP, kTL}, {kSP, kSL});
  for (const auto& carrier : {kSP, kSL, kSM}) {
    const auto r = refute_uninorm_existence(subsets::complement(), carrier, family, Domain::grid(4));
    EXPECT_TRUE(r.all_refuted()) << carrier.name();
  }
}

TEST(DiscreteTest, ChainClosedUnderLukasiewiczForms) {
  const auto pts = discrete_chain(q(1, 2), 2, 2);
  ASSERT_EQ(pts.size(), 5u);
  EXPECT_TRUE(check_discrete_subalgebra(pts, construct_uninorm_min(q(1, 2), kTL, kSL)).holds());
  EXPECT_TRUE(check_discrete_subalgebra(pts, construct_nullnorm(kSL, q(1, 2), kTL)).holds());
  EXPECT_TRUE(check_discrete_subalgebra({q(0), q(1, 3), q(1)}, kTP).fails());
  EXPECT_THROW(discrete_chain(q(1), 2, 2), DegenerateParameterError);
}

TEST(EnumerateTest, CountsTables) {
  const auto all = enumerate_subsets(Domain::grid(3).points(), {q(0), q(1, 2), q(1)});
  EXPECT_EQ(all.size(), 81u);
  SearchBudget tight;
  tight.max_tuples = 10;
  EXPECT_THROW(enumerate_subsets(Domain::grid(3).points(), {q(0), q(1, 2), q(1)}, tight), BudgetError);
}

}  // namespace
}  // namespace fuzznorm
