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

#include "fuzznorm/connective.hpp"
#include "fuzznorm/domain.hpp"
#include "fuzznorm/error.hpp"
#include "oracle.hpp"

namespace fuzznorm {
namespace {

UnitScalar q(long p, long d = 1) { return {p, d}; }

TEST(UnitScalarTest, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(UnitScalar::parse("1/2"), q(1, 2));
  EXPECT_EQ(UnitScalar::parse("2/4"), q(1, 2));
  EXPECT_EQ(UnitScalar::parse("0.25"), q(1, 4));
  EXPECT_EQ(UnitScalar::parse("1"), q(1));
  EXPECT_THROW(UnitScalar::parse("x/2"), ParseError);
  EXPECT_THROW(UnitScalar::parse("1/0"), ParseError);
}

TEST(UnitScalarTest, PrintsCanonicalForm) {
  EXPECT_EQ(q(2, 6).to_string(), "1/3");
  EXPECT_EQ(q(4, 2).to_string(), "2");
  EXPECT_EQ(q(1, 4).to_decimal(), "0.25");
}

TEST(UnitScalarTest, ExactArithmetic) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_EQ(q(1, 2) * q(2, 3), q(1, 3));
  EXPECT_EQ(q(1) - q(1, 4), q(3, 4));
  EXPECT_TRUE(below(q(1, 3), q(1, 2)));
  EXPECT_TRUE(at_most(q(1, 2), q(2, 4)));
}

TEST(UnitScalarTest, FloatComparisonsUseTolerance) {
  const auto a = UnitScalar::approx(0.1 + 0.2);
  const auto b = UnitScalar::approx(0.3);
  EXPECT_TRUE(same(a, b));
  EXPECT_FALSE(below(b, a));
}

TEST(DomainTest, GridPointsAreSortedAndExact) {
  const auto d = Domain::grid(4);
  ASSERT_EQ(d.size(), 5u);
  EXPECT_EQ(d.points()[1], q(1, 4));
  EXPECT_EQ(d.interior().size(), 3u);
  EXPECT_TRUE(d.contains(q(2, 4)));
  EXPECT_FALSE(d.contains(q(1, 3)));
  EXPECT_THROW(Domain::grid(1), ConfigurationError);
}

TEST(DomainTest, WithPointsMergesAndDeduplicates) {
  const auto d = Domain::grid(2).with_points({q(1, 3), q(1, 2)});
  EXPECT_EQ(d.size(), 4u);
  EXPECT_TRUE(d.contains(q(1, 3)));
}

TEST(ConnectiveTest, BuiltinValuesMatchClosedForms) {
  EXPECT_EQ(tnorm(TNormFamily::kProduct)(q(1, 2), q(1, 2)), q(1, 4));
  EXPECT_EQ(tnorm(TNormFamily::kLukasiewicz)(q(7, 10), q(1, 2)), q(1, 5));
  EXPECT_EQ(tnorm(TNormFamily::kDrastic)(q(9, 10), q(9, 10)), q(0));
  EXPECT_EQ(tconorm(TConormFamily::kProbabilisticSum)(q(1, 2), q(1, 2)), q(3, 4));
  EXPECT_EQ(tconorm(TConormFamily::kDrastic)(q(1, 10), q(1, 10)), q(1));
}

TEST(ConnectiveTest, RandomRationalsAgreeWithDoubleOracle) {
  oracle::Rationals gen(7001);
  const std::vector<std::pair<Connective, oracle::Fn>> cases{
      {tnorm(TNormFamily::kMinimum), oracle::t_min},     {tnorm(TNormFamily::kProduct), oracle::t_prod},
      {tnorm(TNormFamily::kLukasiewicz), oracle::t_luk}, {tnorm(TNormFamily::kDrastic), oracle::t_drastic},
      {tconorm(TConormFamily::kMaximum), oracle::s_max}, {tconorm(TConormFamily::kProbabilisticSum), oracle::s_prob},
      {tconorm(TConormFamily::kLukasiewicz), oracle::s_luk}, {tconorm(TConormFamily::kDrastic), oracle::s_drastic},
  };
  for (int trial = 0; trial < 400; ++trial) {
    const auto x = gen.next();
    const auto y = gen.next();
    for (const auto& [c, ref] : cases) {
      EXPECT_NEAR(c(x, y).to_double(), ref(x.to_double(), y.to_double()), 1e-12) << c.name() << " at " << x << ", " << y;
    }
  }
}

TEST(ConnectiveTest, RandomTriplesAreAssociativeAndCommutative) {
  oracle::Rationals gen(7002, 12);
  for (auto family : all_tnorm_families()) {
    const auto t = tnorm(family);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = gen.next();
      const auto y = gen.next();
      const auto z = gen.next();
      EXPECT_EQ(t(x, y), t(y, x)) << t.name();
      EXPECT_EQ(t(t(x, y), z), t(x, t(y, z))) << t.name();
    }
  }
}

TEST(ConnectiveTest, DualOfTnormIsTheMatchingConorm) {
  oracle::Rationals gen(7003);
  const auto dual = dualize(tnorm(TNormFamily::kProduct));
  const auto s = tconorm(TConormFamily::kProbabilisticSum);
  EXPECT_EQ(dual.role(), Role::kTConorm);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = gen.next();
    const auto y = gen.next();
    EXPECT_EQ(dual(x, y), s(x, y));
  }
}

TEST(ConnectiveTest, UninormsAgreeWithOracle) {
  const auto t = tnorm(TNormFamily::kProduct);
  const auto s = tconorm(TConormFamily::kProbabilisticSum);
  oracle::Rationals gen(7004);
  for (const auto& e : {q(1, 4), q(1, 2), q(3, 4)}) {
    const auto umin = construct_uninorm_min(e, t, s);
    const auto umax = construct_uninorm_max(e, t, s);
    EXPECT_EQ(umin.identity(), e);
    for (int trial = 0; trial < 150; ++trial) {
      const auto x = gen.next();
      const auto y = gen.next();
      const double ed = e.to_double();
      EXPECT_NEAR(umin(x, y).to_double(),
                  oracle::uninorm(ed, oracle::t_prod, oracle::s_prob, false, x.to_double(), y.to_double()), 1e-12);
      EXPECT_NEAR(umax(x, y).to_double(),
                  oracle::uninorm(ed, oracle::t_prod, oracle::s_prob, true, x.to_double(), y.to_double()), 1e-12);
    }
  }
}

TEST(ConnectiveTest, UninormExamplePoints) {
  const auto u = construct_uninorm_min(q(1, 2), tnorm(TNormFamily::kProduct), tconorm(TConormFamily::kProbabilisticSum));
  EXPECT_EQ(u(q(1, 4), q(1, 4)), q(1, 8));
  EXPECT_EQ(u(q(1, 4), q(3, 4)), q(1, 4));
  EXPECT_EQ(u(q(1, 2), q(1, 3)), q(1, 3));
  EXPECT_EQ(u(q(0), q(1)), q(0));
}

TEST(ConnectiveTest, NullnormsAgreeWithOracle) {
  const auto f = construct_nullnorm(tconorm(TConormFamily::kLukasiewicz), q(1, 2), tnorm(TNormFamily::kLukasiewicz));
  EXPECT_EQ(f.absorber(), q(1, 2));
  oracle::Rationals gen(7005);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = gen.next();
    const auto y = gen.next();
    EXPECT_NEAR(f(x, y).to_double(), oracle::nullnorm(oracle::s_luk, 0.5, oracle::t_luk, x.to_double(), y.to_double()),
                1e-12);
  }
  EXPECT_EQ(f(q(0), q(1)), q(1, 2));
}

TEST(ConnectiveTest, DegenerateParametersAreRejected) {
  const auto t = tnorm(TNormFamily::kProduct);
  const auto s = tconorm(TConormFamily::kProbabilisticSum);
  EXPECT_THROW(construct_uninorm_min(q(0), t, s), DegenerateParameterError);
  EXPECT_THROW(construct_uninorm_max(q(1), t, s), DegenerateParameterError);
  EXPECT_THROW(construct_nullnorm(s, q(1), t), DegenerateParameterError);
  EXPECT_THROW(construct_uninorm_min(q(1, 2), s, t), ConfigurationError);
}

TEST(ConnectiveTest, PowerIterationOfProduct) {
  EXPECT_EQ(power_iterate(tnorm(TNormFamily::kProduct), q(1, 2), 3), q(1, 8));
  EXPECT_EQ(power_iterate(tnorm(TNormFamily::kLukasiewicz), q(3, 4), 4), q(0));
  EXPECT_EQ(power_iterate(tnorm(TNormFamily::kMinimum), q(1, 3), 10), q(1, 3));
}

TEST(ConnectiveTest, AggregationIsNaryNative) {
  const auto mean = aggregation_mean();
  const std::vector<UnitScalar> args{q(0), q(1, 2), q(1)};
  EXPECT_EQ(mean(args), q(1, 2));
  EXPECT_EQ(aggregation_min()(args), q(0));
}

TEST(ConnectiveTest, ParsesIds) {
  EXPECT_EQ(parse_connective("tnorm:product").role(), Role::kTNorm);
  EXPECT_EQ(parse_connective("tconorm:probsum").role(), Role::kTConorm);
  const auto u = parse_connective("uninorm:umax(1/2,product,probsum)");
  EXPECT_EQ(u.role(), Role::kUninorm);
  EXPECT_EQ(u.identity(), q(1, 2));
  const auto f = parse_connective("nullnorm:<lukasiewicz-S,1/2,lukasiewicz-T>");
  EXPECT_EQ(f.absorber(), q(1, 2));
  EXPECT_THROW(parse_connective("tnorm:hamacher"), ConfigurationError);
  EXPECT_THROW(parse_connective("product"), ConfigurationError);
}

TEST(ConnectiveTest, TableConnectiveRejectsOffTablePoints) {
  const std::vector<UnitScalar> pts{q(0), q(1)};
  const auto c = table_connective("and", Role::kTNorm, pts, {{q(0), q(0)}, {q(0), q(1)}}, q(1));
  EXPECT_EQ(c(q(1), q(1)), q(1));
  EXPECT_THROW(c(q(1, 2), q(1)), DomainError);
}

}  // namespace
}  // namespace fuzznorm
