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

#include "fuzznorm/implication.hpp"

#include "fuzznorm/checker.hpp"

namespace fuzznorm {

nlohmann::ordered_json to_json(const ImplicationReport& r) {
  nlohmann::ordered_json j;
  j["premise"] = r.premise;
  j["conclusion"] = r.conclusion;
  j["universe"] = r.universe;
  j["universe_size"] = r.universe_size;
  j["premise_held"] = r.premise_held;
  j["counterexamples"] = r.counterexample_count;
  j["examples"] = r.counterexamples;
  return j;
}

void require_within_budget(std::uint64_t estimate, const SearchBudget& budget, const std::string& what) {
  if (estimate > budget.max_tuples) {
    throw BudgetError(what + " exceeds the budget of " + std::to_string(budget.max_tuples), estimate);
  }
}

ImplicationReport verify_implication(const std::string& premise_id, const std::string& conclusion_id,
                                     const std::string& universe, const std::vector<Connective>& connectives,
                                     const Domain& d, const SearchBudget& budget) {
  return verify_implication(
      premise_id, conclusion_id, universe, connectives,
      [&](const Connective& c) { return check_property(premise_id, c, d, budget); },
      [&](const Connective& c) { return check_property(conclusion_id, c, d, budget); },
      [](const Connective& c) { return c.name(); }, budget);
}

}  // namespace fuzznorm
