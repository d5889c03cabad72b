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

#ifndef FUZZNORM_CHECKER_HPP_
#define FUZZNORM_CHECKER_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fuzznorm/connective.hpp"
#include "fuzznorm/domain.hpp"
#include "fuzznorm/report.hpp"

namespace fuzznorm {

DomainInfo describe(const Domain& d);

/**
 * Checks the axioms of the connective's declared role on every point, pair
 * and triple of the domain, one sub-check per axiom:
 *
 *   t-norm       T1 commutativity, T2 associativity, T3 monotonicity, T4 T(x,1)=x
 *   t-conorm     S1..S3 likewise, S4 S(x,0)=x
 *   uninorm      U1..U3 likewise, U4 U(x,e)=x for the declared e
 *   nullnorm     F1..F3 likewise, F4 F(k,x)=k, F(0,x)=x for x<=k, F(1,x)=x for x>=k
 *   aggregation  monotonicity, A(0,0)=0 and A(1,1)=1
 *
 * A "range" sub-check confirms every value lies in [0,1].
 */
PropertyReport check_axioms(const Connective& c, const Domain& d, const SearchBudget& budget = {});

/// T(x,y) < T(x,z) for x > 0 and y < z.
PropertyReport check_strict_monotonicity(const Connective& t, const Domain& d, const SearchBudget& budget = {});

enum class Cancellation { kPlain, kConditional };

/// Plain: T(x,y) = T(x,z) implies x = 0 or y = z.
/// Conditional: T(x,y) = T(x,z) > 0 implies y = z.
PropertyReport check_cancellation(const Connective& t, const Domain& d, Cancellation kind,
                                  const SearchBudget& budget = {});

/**
 * For every interior pair (x,y), searches n <= n_max with x^(n) < y.
 * A pair whose powers become stationary at or above y fails; a pair still
 * strictly decreasing at n_max is inconclusive (VACUOUS).
 */
PropertyReport check_archimedean(const Connective& t, const Domain& d, const SearchBudget& budget = {});

/// How the power sequence x^(1), x^(2), ... of one point ended.
struct Trajectory {
  enum class Outcome { kReachedZero, kBelowEpsilon, kStationary, kExhausted };
  Outcome outcome;
  /// Exponent at which the outcome was observed.
  std::int64_t steps;
  UnitScalar value;
};

std::string_view to_string(Trajectory::Outcome o);

Trajectory limit_trajectory(const Connective& t, const UnitScalar& x, const SearchBudget& budget = {});

/// Every interior x has powers tending to 0: reached exactly, or strictly
/// below epsilon. A stationary positive trajectory fails.
PropertyReport check_limit_property(const Connective& t, const Domain& d, const SearchBudget& budget = {});

struct UninormClassification {
  std::string name;
  UnitScalar identity;
  bool conjunctive = false;
  bool disjunctive = false;
  bool locally_internal = false;
  bool idempotent_diagonal = false;
  /// Behaviour on the mixed region A(e): "min", "max", "other" or "empty".
  std::string mixed_region;

  PropertyReport to_report(const Domain& d) const;
};

/// Requires a declared identity (t-norms count as uninorms with e = 1,
/// t-conorms with e = 0).
UninormClassification classify_uninorm(const Connective& u, const Domain& d);

/**
 * Dispatches a check by property id: "axioms", "strict-monotone",
 * "cancellation", "conditional-cancellation", "archimedean", "limit",
 * "classify".
 */
PropertyReport check_property(std::string_view property_id, const Connective& c, const Domain& d,
                              const SearchBudget& budget = {});

const std::vector<std::string>& known_property_ids();

}  // namespace fuzznorm

#endif  // FUZZNORM_CHECKER_HPP_
