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

#ifndef FUZZNORM_LATTICE_HPP_
#define FUZZNORM_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzznorm/connective.hpp"
#include "fuzznorm/fuzzy.hpp"
#include "fuzznorm/report.hpp"
#include "fuzznorm/vague.hpp"

namespace fuzznorm {

/**
 * A finite bounded lattice. Elements are addressed by index; the order,
 * meets and joins are materialized at construction.
 */
class FiniteLattice {
 public:
  /**
   * Builds the lattice generated by a cover relation (pairs "lower, upper").
   * Throws NotALatticeError for a cyclic relation or a pair without a unique
   * meet or join, and UnboundedError when the top or bottom is missing.
   */
  static FiniteLattice from_covers(std::string name, std::vector<std::string> labels,
                                   const std::vector<std::pair<std::string, std::string>>& covers);
  /// The chain 0 < 1/(n-1) < ... < 1, labelled by those fractions.
  static FiniteLattice chain(std::size_t n);
  /// M_2 = {0, a, b, 1} with a and b incomparable.
  static FiniteLattice diamond();

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// ConfigurationError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return leq_[a][b] || leq_[b][a]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  /// Every pair comparable.
  bool is_chain() const;

 private:
  friend struct LatticeInterval;
  static FiniteLattice from_order(std::string name, std::vector<std::string> labels,
                                  std::vector<std::vector<bool>> leq);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> meet_;
  std::vector<std::vector<std::size_t>> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// [a,b] as a bounded lattice of its own, with the map back to the parent.
struct LatticeInterval {
  FiniteLattice lattice;
  std::vector<std::size_t> parent;

  /// DomainError unless a <= b.
  static LatticeInterval of(const FiniteLattice& l, std::size_t a, std::size_t b);
};

/// A binary operation table on a finite lattice, by element index.
struct LatticeTNorm {
  std::string name;
  std::vector<std::vector<std::size_t>> table;

  std::size_t operator()(std::size_t x, std::size_t y) const { return table[x][y]; }
};

LatticeTNorm meet_tnorm(const FiniteLattice& l);

/// Commutativity, associativity, monotonicity and T(x,1) = x.
PropertyReport check_lattice_tnorm(const LatticeTNorm& t, const FiniteLattice& l, const SearchBudget& budget = {});

/// The restriction to an interval, or nullopt when the interval is not
/// closed under the table.
std::optional<LatticeTNorm> restrict_tnorm(const LatticeTNorm& t, const LatticeInterval& interval);

/**
 * Every lattice t-norm on l, in a fixed order, stopping after `cap` tables
 * when cap > 0. Lattices with more than six elements are refused with
 * BudgetError.
 */
std::vector<LatticeTNorm> enumerate_lattice_tnorms(const FiniteLattice& l, std::size_t cap = 0);

/// A chain t-norm as a connective on the points i/(n-1) of [0,1].
Connective as_connective(const LatticeTNorm& t, const FiniteLattice& chain);

/// An L-subset of L itself: element index to element index.
using LSubset = std::vector<std::size_t>;

/// All maps L -> L in lexicographic order.
std::vector<LSubset> enumerate_lsubsets(const FiniteLattice& l, const SearchBudget& budget = {});

std::string describe(const LSubset& mu, const FiniteLattice& l);

/// mu(x) meet mu(y) <= mu(T(x,y)) and mu(1) = 1.
PropertyReport check_lattice_fuzzy_subnorm(const LSubset& mu, const LatticeTNorm& t, const FiniteLattice& l,
                                           const SearchBudget& budget = {});

/**
 * The fuzzified properties with lattice-valued mu. Where the definition
 * writes y < z, only comparable pairs are quantified; the number of skipped
 * incomparable pairs is noted. FARCH and FLIMIT follow each power sequence
 * to its stationary value. Outcomes whose mu-values are incomparable count
 * as not satisfying and add the tag INCOMPARABLE_OUTCOME.
 */
PropertyReport check_lattice_fuzzy_property(const LSubset& mu, const LatticeTNorm& t, const FiniteLattice& l,
                                            FuzzyProperty prop, const SearchBudget& budget = {});

/// An L-valued equality on the lattice's own elements.
struct LatticeEquality {
  std::string name;
  std::vector<std::vector<std::size_t>> degree;
};

LatticeEquality crisp_lattice_equality(const FiniteLattice& l);

/// Every symmetric table with top on the diagonal.
std::vector<LatticeEquality> enumerate_lattice_equalities(const FiniteLattice& l, const SearchBudget& budget = {});

/// Reflexivity, symmetry and T-transitivity with lattice degrees.
PropertyReport validate_lattice_equality(const LatticeEquality& e, const LatticeTNorm& t, const FiniteLattice& l,
                                         const SearchBudget& budget = {});

/// mu(x,y,z) = E(T(x,y), z).
struct LatticeVagueTNorm {
  std::string name;
  LatticeEquality eq;
  LatticeTNorm t;
  std::vector<std::size_t> mu;
  std::size_t n = 0;

  std::size_t operator()(std::size_t x, std::size_t y, std::size_t z) const { return mu[(x * n + y) * n + z]; }
};

/// DomainError unless E validates against T; refuses lattices with more
/// than five elements.
LatticeVagueTNorm induce_lattice_vague_tnorm(const LatticeEquality& e, const LatticeTNorm& t, const FiniteLattice& l,
                                             const SearchBudget& budget = {});

/// Extensionality, functionality, totality, the 7-tuple monoid inequality,
/// identity search and commutativity, one sub-check each.
PropertyReport check_lattice_vague_structures(const LatticeVagueTNorm& v, const FiniteLattice& l,
                                              const SearchBudget& budget = {});

/// x < y (comparable) and mu(x,z,a) = mu(y,z,b) imply a < b.
PropertyReport check_lattice_vague_strict_monotone(const LatticeVagueTNorm& v, const FiniteLattice& l,
                                                   VagueReading reading, const SearchBudget& budget = {});

/// mu(a,x,c) = mu(b,x,c) implies a = b.
PropertyReport check_lattice_vague_cancellation(const LatticeVagueTNorm& v, const FiniteLattice& l,
                                                VagueReading reading, const SearchBudget& budget = {});

}  // namespace fuzznorm

#endif  // FUZZNORM_LATTICE_HPP_
