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

#ifndef FUZZNORM_FUZZY_HPP_
#define FUZZNORM_FUZZY_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzznorm/connective.hpp"
#include "fuzznorm/domain.hpp"
#include "fuzznorm/report.hpp"

namespace fuzznorm {

/// An element of a finite carrier, by position in the carrier's label list.
struct FiniteElement {
  std::uint32_t index = 0;

  friend auto operator<=>(const FiniteElement&, const FiniteElement&) = default;
};

/**
 * A set with a binary operation: a groupoid, optionally with an identity
 * (a monoid) and inverses (a group).
 *
 * E is UnitScalar for subsets of [0,1], whose products may leave the
 * quantified point set, or FiniteElement for finite tables.
 */
template <class E>
struct Carrier {
  std::string name;
  /// The points every check quantifies over.
  std::vector<E> elements;
  std::function<E(const E&, const E&)> op;
  std::optional<E> identity;
  std::function<E(const E&)> inverse;
  /// How an element appears in witnesses.
  std::function<Datum(const E&)> datum;
};

/// ([0,1], c) restricted to the domain's points; the identity is the one
/// the connective declares.
Carrier<UnitScalar> interval_carrier(const Connective& c, const Domain& d);

/**
 * A finite carrier from an operation table over labels. When an identity is
 * named, it is validated and the table must be associative; DomainError
 * otherwise.
 */
Carrier<FiniteElement> finite_carrier(std::string name, std::vector<std::string> labels,
                                      const std::vector<std::vector<std::uint32_t>>& table,
                                      std::optional<std::string> identity = std::nullopt);

/// The cyclic group Z_n with labels "0".."n-1".
Carrier<FiniteElement> cyclic_group(std::uint32_t n);

/// Attaches inverses; DomainError if some element has none.
Carrier<FiniteElement> with_inverses(Carrier<FiniteElement> monoid);

/// Position of a label in a finite carrier; ConfigurationError if absent.
FiniteElement element_of(const Carrier<FiniteElement>& c, std::string_view label);

/**
 * A membership function. Closed forms are total; table forms throw
 * NotTotalError when evaluated off their table.
 */
template <class E>
class FuzzySubset {
 public:
  using Fn = std::function<UnitScalar(const E&)>;

  FuzzySubset(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const { return name_; }
  UnitScalar operator()(const E& x) const { return fn_(x); }

 private:
  std::string name_;
  Fn fn_;
};

namespace subsets {

FuzzySubset<UnitScalar> identity();
FuzzySubset<UnitScalar> one();
FuzzySubset<UnitScalar> constant(const UnitScalar& c);
FuzzySubset<UnitScalar> complement();
/// x on [0,e], 1 on [e,1].
FuzzySubset<UnitScalar> step(const UnitScalar& e);
/// 1 on the listed points, 0 elsewhere.
FuzzySubset<UnitScalar> indicator(std::vector<UnitScalar> members);
FuzzySubset<UnitScalar> table(std::string name, std::vector<std::pair<UnitScalar, UnitScalar>> entries);

FuzzySubset<FiniteElement> constant_on(const UnitScalar& c);
FuzzySubset<FiniteElement> indicator_on(std::vector<FiniteElement> members);
FuzzySubset<FiniteElement> table_on(std::string name, std::vector<UnitScalar> values);

/// Builtin forms by name: "identity", "one", "zero", "complement", "step(1/2)".
FuzzySubset<UnitScalar> builtin(std::string_view name);

}  // namespace subsets

/// Pointwise infimum; the empty family gives the constant 1.
template <class E>
FuzzySubset<E> intersect(const std::vector<FuzzySubset<E>>& family);

/// Every value of mu on the carrier's elements lies in [0,1]; evaluation
/// errors (a table off its domain) propagate.
template <class E>
void require_total(const FuzzySubset<E>& mu, const Carrier<E>& c);

enum class Substructure {
  kSubgroupoid,
  kSubgroup,
  kSubmonoid,
  kTSubnorm,
  kTSubconorm,
  kASubmonoid,
  kUSubmonoid,
  kFSubmonoid,
};

std::string_view to_string(Substructure s);
Substructure parse_substructure(std::string_view name);

/**
 * Which substructure to check and the operator that replaces the minimum:
 * none for the min-based kinds, an aggregation function for A-, a uninorm
 * for U- and a nullnorm for F-submonoids.
 */
struct SubstructureKind {
  Substructure tag;
  std::optional<Connective> combiner;

  /// Validates that the combiner's role matches the tag.
  SubstructureKind(Substructure tag, std::optional<Connective> combiner = std::nullopt);
};

template <class E>
PropertyReport check_fuzzy_subgroupoid(const FuzzySubset<E>& mu, const Carrier<E>& c,
                                       const SearchBudget& budget = {});

/// Requires inverses on the carrier (DomainError otherwise).
template <class E>
PropertyReport check_fuzzy_subgroup(const FuzzySubset<E>& mu, const Carrier<E>& c, const SearchBudget& budget = {});

/**
 * The closure inequality with the kind's combiner together with mu(e) = 1.
 * A-submonoids check every arity from 2 up to budget.arity_cap.
 */
template <class E>
PropertyReport check_fuzzy_submonoid(const FuzzySubset<E>& mu, const Carrier<E>& c, const SubstructureKind& kind,
                                     const SearchBudget& budget = {});

template <class E>
struct CoreReport {
  std::vector<E> core;
  /// Closure of the core under the operation and membership of e.
  PropertyReport report;
};

/// The crisp set {x | mu(x) = 1} among the carrier's elements.
template <class E>
CoreReport<E> extract_core(const FuzzySubset<E>& mu, const Carrier<E>& c, const SearchBudget& budget = {});

/// Closure of a finite point set containing 0 and 1 under a connective.
PropertyReport check_discrete_subalgebra(const std::vector<UnitScalar>& points, const Connective& c,
                                         const SearchBudget& budget = {});

/// L_{n,m} = {0, e/n, ..., e, e + (1-e)/m, ..., 1}.
std::vector<UnitScalar> discrete_chain(const UnitScalar& e, std::int64_t n, std::int64_t m);

enum class FuzzyProperty { kStrict, kCancel, kConditionalCancel, kArchimedean, kLimit };

std::string_view to_string(FuzzyProperty p);
FuzzyProperty parse_fuzzy_property(std::string_view name);

/// min(mu(x),mu(y)) <= mu(T(x,y)) and mu(1) = 1 on the domain.
PropertyReport check_fuzzy_subnorm(const FuzzySubset<UnitScalar>& mu, const Connective& t, const Domain& d,
                                   const SearchBudget& budget = {});

/**
 * One of the fuzzified t-norm properties of a fuzzy t-subnorm mu of T.
 *
 *   FSTRICT      mu(T(x,y)) > mu(T(x,z)) for 0 < x < 1, y < z
 *   FCANCEL      mu(T(x,y)) = mu(T(x,z)) implies x = 0 or y = z
 *   FCONDCANCEL  mu(T(x,y)) = mu(T(x,z)) > mu(0) implies mu(y) = mu(z)
 *   FARCH        for interior x, y some n has mu(x^(n)) < mu(y)
 *   FLIMIT       mu(x^(n)) tends to mu(0) for interior x
 *
 * The property is evaluated even when mu is not a subnorm of T; such
 * reports carry the tag NOT_A_SUBNORM. FCONDCANCEL also records whether the
 * stronger conclusion y = z held ("strong_form" note).
 */
PropertyReport check_fuzzy_property(const FuzzySubset<UnitScalar>& mu, const Connective& t, FuzzyProperty prop,
                                    const Domain& d, const SearchBudget& budget = {});

/**
 * When T is strictly monotone on the domain and mu is a fuzzy t-subnorm of
 * T, mu is not strictly decreasing. Holds whenever that is consistent; the
 * notes say which premises held and give a non-decreasing pair.
 */
PropertyReport check_not_strictly_decreasing(const FuzzySubset<UnitScalar>& mu, const Connective& t, const Domain& d,
                                             const SearchBudget& budget = {});

/**
 * Characterizations of special submonoids, each evaluated from both sides:
 *
 *   "prop17"          A_min-submonoid of ([0,1],T_M)  iff mu(1) = 1
 *   "prop18"          A_min-submonoid of ([0,1],S_M)  iff mu(0) = 1
 *   "disjunctive"     U-submonoid (U disjunctive)     iff mu = 1
 *   "prop20"          U-submonoid of ([0,1],T_M), U with max above e and min
 *                     on the mixed region             iff mu non-increasing on
 *                                                         {mu >= e} and mu(1) = 1
 *   "prop24"          F-submonoid                     implies mu >= k
 *   "prop25"          F_M-submonoid of ([0,1],T_M)    iff mu(1) = 1, mu >= k
 *   "prop25-conorm"   F_M-submonoid of ([0,1],S_M)    iff mu(0) = 1, mu >= k
 *
 * `c` is the combiner (T_M or S_M itself for the first two). The carrier
 * defaults to the case's monoid: T_M, S_M, or for "disjunctive" and
 * "prop24" the combiner's own ([0,1],U) / ([0,1],T_M). A mismatch between
 * the case and the connective raises DomainError. FAILS means the two sides
 * disagree; the witness names the side that held.
 */
PropertyReport characterize_special_cases(std::string_view case_id, const FuzzySubset<UnitScalar>& mu,
                                          const Connective& c, const Domain& d,
                                          const std::optional<Connective>& carrier = std::nullopt,
                                          const SearchBudget& budget = {});

const std::vector<std::string>& known_characterization_cases();

struct RefutationMember {
  std::string uninorm;
  /// The submonoid check for this member; expected to fail.
  PropertyReport submonoid;
  /// The pair (e, y > e), or (1 - e, y < 1 - e) for t-conorm carriers, and
  /// its two sides, when that pair violates the inequality.
  std::optional<Witness> contradiction;

  bool refuted() const { return submonoid.fails(); }
};

struct RefutationReport {
  std::string subset;
  std::string carrier;
  std::vector<RefutationMember> members;

  bool all_refuted() const;
  PropertyReport to_report(const Domain& d) const;
};

/**
 * Checks that mu is a U-fuzzy submonoid of ([0,1],carrier) for no member U
 * of the family. Each member is checked on the domain augmented with e and
 * 1 - e, so the distinguished pair is always present.
 */
RefutationReport refute_uninorm_existence(const FuzzySubset<UnitScalar>& mu, const Connective& carrier,
                                          const std::vector<Connective>& family, const Domain& d,
                                          const SearchBudget& budget = {});

/// Every construct_uninorm_min/max instance with e from `identities`, T from
/// `tnorms` and S from `tconorms`, in that nesting order.
std::vector<Connective> uninorm_family(const std::vector<UnitScalar>& identities,
                                       const std::vector<Connective>& tnorms, const std::vector<Connective>& tconorms);

/// All maps from the listed points into the alphabet, in lexicographic order.
std::vector<FuzzySubset<UnitScalar>> enumerate_subsets(const std::vector<UnitScalar>& points,
                                                       const std::vector<UnitScalar>& alphabet,
                                                       const SearchBudget& budget = {});

}  // namespace fuzznorm

#endif  // FUZZNORM_FUZZY_HPP_
