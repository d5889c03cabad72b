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

#ifndef FUZZNORM_IMPLICATION_HPP_
#define FUZZNORM_IMPLICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuzznorm/connective.hpp"
#include "fuzznorm/domain.hpp"
#include "fuzznorm/error.hpp"
#include "fuzznorm/report.hpp"

namespace fuzznorm {

/// Result of checking "premise holds => conclusion holds" on every element
/// of a finite universe.
struct ImplicationReport {
  std::string premise;
  std::string conclusion;
  std::string universe;
  std::uint64_t universe_size = 0;
  /// Elements on which the premise held.
  std::uint64_t premise_held = 0;
  std::uint64_t counterexample_count = 0;
  /// Labels of the first counterexamples, in universe order.
  std::vector<std::string> counterexamples;

  bool confirmed() const { return counterexample_count == 0; }
};

nlohmann::ordered_json to_json(const ImplicationReport& r);

/// Throws BudgetError when `estimate` exceeds the budget's tuple limit.
void require_within_budget(std::uint64_t estimate, const SearchBudget& budget, const std::string& what);

/**
 * Runs the implication over an explicit universe. `premise` and `conclusion`
 * map an item to a report; an item counts as a counterexample when the
 * premise report holds on its domain and the conclusion report fails.
 * `label` names an item for the counterexample list.
 */
template <class Item, class Premise, class Conclusion, class Label>
ImplicationReport verify_implication(std::string premise_id, std::string conclusion_id, std::string universe,
                                     const std::vector<Item>& items, Premise premise, Conclusion conclusion,
                                     Label label, const SearchBudget& budget = {}) {
  require_within_budget(items.size(), budget, "implication universe '" + universe + "'");
  ImplicationReport r;
  r.premise = std::move(premise_id);
  r.conclusion = std::move(conclusion_id);
  r.universe = std::move(universe);
  r.universe_size = items.size();
  for (const auto& item : items) {
    if (!premise(item).holds()) continue;
    ++r.premise_held;
    if (!conclusion(item).fails()) continue;
    ++r.counterexample_count;
    if (budget.max_witnesses == 0 || r.counterexamples.size() < budget.max_witnesses) {
      r.counterexamples.push_back(label(item));
    }
  }
  return r;
}

/// The connective-level form: both sides are property ids understood by
/// check_property, evaluated on one domain.
ImplicationReport verify_implication(const std::string& premise_id, const std::string& conclusion_id,
                                     const std::string& universe, const std::vector<Connective>& connectives,
                                     const Domain& d, const SearchBudget& budget = {});

}  // namespace fuzznorm

#endif  // FUZZNORM_IMPLICATION_HPP_
