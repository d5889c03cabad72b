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

#ifndef FUZZNORM_VAGUE_HPP_
#define FUZZNORM_VAGUE_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzznorm/connective.hpp"
#include "fuzznorm/domain.hpp"
#include "fuzznorm/fuzzy.hpp"
#include "fuzznorm/report.hpp"

namespace fuzznorm {

using EqualityFn = std::function<UnitScalar(const UnitScalar&, const UnitScalar&)>;

namespace equalities {

/// 1 if x = y, else 0.
EqualityFn crisp();
/// 1 - |x - y|; T_L-transitive.
EqualityFn lukasiewicz();
/// 1 if x = y, else min(x, y); T_M-transitive.
EqualityFn goedel();
/// min(x,y) / max(x,y), with E(0,0) = 1; T_P-transitive.
EqualityFn product();

/// "crisp", "lukasiewicz", "goedel" or "product".
EqualityFn by_name(std::string_view name);

}  // namespace equalities

/**
 * A candidate T-fuzzy equality, tabulated on a finite carrier. Elements are
 * addressed by position; for grid carriers positions follow the numeric
 * order of the points.
 */
struct FuzzyEquality {
  std::string name;
  std::vector<Datum> labels;
  Connective t;
  std::vector<std::vector<UnitScalar>> degree;

  std::size_t size() const { return labels.size(); }
  const UnitScalar& operator()(std::size_t i, std::size_t j) const { return degree[i][j]; }
  /// E(x,y) = 1 only for x = y.
  bool separates_points() const;
};

FuzzyEquality tabulate_equality(std::string name, const EqualityFn& e, const Domain& d, const Connective& t);

/// From an explicit square table; ConfigurationError on shape mismatch.
FuzzyEquality equality_from_table(std::string name, std::vector<Datum> labels, const Connective& t,
                                  std::vector<std::vector<UnitScalar>> table);

/// Reflexivity, symmetry and T-transitivity over all triples.
PropertyReport validate_fuzzy_equality(const FuzzyEquality& eq, const SearchBudget& budget = {});

/// A ternary degree map mu(x,y,z): the degree to which x o y is z.
struct VagueOperation {
  std::string name;
  FuzzyEquality eq;
  /// Flattened n x n x n table.
  std::vector<UnitScalar> mu;

  std::size_t size() const { return eq.size(); }
  const UnitScalar& operator()(std::size_t x, std::size_t y, std::size_t z) const {
    return mu[(x * size() + y) * size() + z];
  }
};

VagueOperation vague_operation_from_table(std::string name, FuzzyEquality eq,
                                          const std::vector<std::vector<std::vector<UnitScalar>>>& mu);

/// Extensionality, functionality and totality.
PropertyReport check_vague_operation(const VagueOperation& v, const SearchBudget& budget = {});

struct VagueTNorm {
  VagueOperation op;
  Connective underlying;
};

/**
 * The vague t-norm mu(x,y,z) = E(T(x,y), z) on the domain. T(x,y) may leave
 * the domain; E is evaluated there in closed form. Throws DomainError when
 * E is not a T-fuzzy equality on the domain.
 */
VagueTNorm induce_vague_tnorm(const std::string& equality_name, const EqualityFn& e, const Connective& t,
                              const Domain& d, const SearchBudget& budget = {});

/**
 * The associativity-style inequality over all 7-tuples and the search for
 * an identity. A structure that is not a vague operation fails first,
 * tagged NOT_VAGUE_OP. Refuses carriers whose 7-tuple count exceeds the
 * budget.
 */
PropertyReport check_vague_monoid(const VagueOperation& v, const SearchBudget& budget = {});

/// T(mu(a,b,m), mu(b,a,w)) <= E(m,w).
PropertyReport check_vague_commutativity(const VagueOperation& v, const SearchBudget& budget = {});

/**
 * How the equal-degree premises of the vague strict monotonicity and
 * cancellation laws are matched: kLiteral accepts any common degree,
 * kCrisp only degree 1.
 */
enum class VagueReading { kLiteral, kCrisp };

std::string_view to_string(VagueReading r);

/// x < y and mu(x,z,a) = mu(y,z,b) imply a < b. VACUOUS when no instance
/// satisfies the premise.
PropertyReport check_vague_strict_monotone(const VagueOperation& v, VagueReading reading,
                                           const SearchBudget& budget = {});

/// mu(a,x,c) = mu(b,x,c) implies a = b.
PropertyReport check_vague_cancellation(const VagueOperation& v, VagueReading reading,
                                        const SearchBudget& budget = {});

/// The vague operation of a finite carrier with crisp equality:
/// mu(x,y,z) = 1 exactly when x o y = z.
VagueOperation crisp_vague_operation(const Carrier<FiniteElement>& c);

struct VagueGroup {
  VagueOperation op;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
};

/// Finds an identity (mu(e,a,a) = mu(a,e,a) = 1) and inverses
/// (mu(a',a,e) = mu(a,a',e) = 1); DomainError when either is missing.
VagueGroup make_vague_group(VagueOperation op);

/// min(mu(a,b,u), mu(a,c,u)) <= E(b,c) and the mirrored right-hand form.
PropertyReport check_vague_group_cancellation(const VagueGroup& g, const SearchBudget& budget = {});

}  // namespace fuzznorm

#endif  // FUZZNORM_VAGUE_HPP_
