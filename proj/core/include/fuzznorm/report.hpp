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

#ifndef FUZZNORM_REPORT_HPP_
#define FUZZNORM_REPORT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuzznorm/scalar.hpp"

namespace fuzznorm {

enum class Verdict { kHolds, kFails, kVacuous };

/// "HOLDS_ON_DOMAIN", "FAILS", "VACUOUS".
std::string_view to_string(Verdict v);

/// Meet in the order FAILS < VACUOUS < HOLDS_ON_DOMAIN.
Verdict meet(Verdict a, Verdict b);

/// One coordinate of a witness: a degree, an element label, or an integer
/// such as an exponent.
using Datum = std::variant<UnitScalar, std::string, std::int64_t>;

std::string to_string(const Datum& d);

struct Witness {
  std::vector<Datum> inputs;
  std::vector<Datum> values;

  friend bool operator<(const Witness& a, const Witness& b);
  friend bool operator==(const Witness& a, const Witness& b);
};

/// Limits for every search the engine runs.
struct SearchBudget {
  /// Cap on the exponent searched for Archimedean witnesses.
  std::int64_t n_max = 64;
  /// Cap on power iterations for limit properties.
  std::int64_t iter_cap = 128;
  /// Threshold below which an exact trajectory counts as having reached 0.
  UnitScalar epsilon{1, 1024};
  /// Same threshold for float-mode trajectories.
  double float_epsilon = 1e-9;
  /// Witnesses retained per report (lexicographically smallest); 0 keeps all.
  std::size_t max_witnesses = 8;
  /// Refusal threshold for exhaustive tuple loops and enumeration universes.
  std::uint64_t max_tuples = 4'000'000;
  /// Largest arity checked for n-ary aggregation conditions.
  int arity_cap = 3;

  void validate() const;
};

struct DomainInfo {
  std::string kind;
  std::int64_t resolution = 0;
};

/**
 * Outcome of one property check.
 *
 * HOLDS_ON_DOMAIN is always qualified by the domain recorded here, never a
 * claim about the continuum. A FAILS report always carries at least one
 * witness. Sub-checks (one per axiom, say) live in `checks`; the top-level
 * verdict is their meet.
 */
struct PropertyReport {
  std::string property_id;
  Verdict verdict = Verdict::kHolds;
  DomainInfo domain;
  std::vector<Witness> witnesses;
  std::uint64_t violations = 0;
  std::uint64_t instances = 0;
  SearchBudget budget;
  std::vector<PropertyReport> checks;
  std::vector<std::string> tags;
  std::map<std::string, std::string> notes;

  bool holds() const { return verdict == Verdict::kHolds; }
  bool fails() const { return verdict == Verdict::kFails; }

  /// Records a violating instance: verdict becomes FAILS and the witness is
  /// kept if it is among the budget's lexicographically smallest.
  void add_violation(Witness w);
  /// Records an inconclusive instance; never overrides FAILS.
  void mark_vacuous(std::string reason = {});
  void add_tag(std::string tag);
  bool has_tag(std::string_view tag) const;
  /// Appends a sub-check, folding its verdict and witnesses into this one.
  void add_check(PropertyReport sub);
  /// Union of witnesses and meet of verdicts; associative and commutative.
  void merge(const PropertyReport& other);
  const PropertyReport* find_check(std::string_view id) const;
  bool contains_witness(const std::vector<Datum>& inputs) const;
};

PropertyReport make_report(std::string property_id, DomainInfo domain, const SearchBudget& budget);

nlohmann::ordered_json to_json(const PropertyReport& report);
nlohmann::ordered_json to_json(const SearchBudget& budget);
std::string to_text(const PropertyReport& report, int indent = 0);

/// Exit status for a set of merged verdicts: 0 all hold, 1 any fails,
/// 2 otherwise (some vacuous, none failing).
int exit_code(const std::vector<Verdict>& verdicts);

}  // namespace fuzznorm

#endif  // FUZZNORM_REPORT_HPP_
