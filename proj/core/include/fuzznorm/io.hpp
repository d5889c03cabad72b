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

#ifndef FUZZNORM_IO_HPP_
#define FUZZNORM_IO_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "fuzznorm/fuzzy.hpp"
#include "fuzznorm/lattice.hpp"
#include "fuzznorm/report.hpp"
#include "fuzznorm/vague.hpp"

// Readers for the JSON input files. Every failure is a ParseError whose
// message names the file, the field and, for syntax errors, the position.

namespace fuzznorm::io {

/// Parses a file's text as JSON; `source` appears in diagnostics.
nlohmann::json read_json(const std::filesystem::path& path);
nlohmann::json parse_json(const std::string& text, const std::string& source);

/**
 *   {"form": "builtin:identity"}
 *   {"form": "table", "entries": [["1/2", "3/4"], ...]}
 *   {"form": "indicator", "members": ["0", "1/2", "1"]}
 */
FuzzySubset<UnitScalar> subset_from_json(const nlohmann::json& j, const std::string& source);

/// The same forms over a finite carrier, keyed by element label. Tables
/// must list every element.
FuzzySubset<FiniteElement> subset_on_carrier_from_json(const nlohmann::json& j, const Carrier<FiniteElement>& c,
                                                       const std::string& source);

/// {"elements": [...], "op": [[...], ...], "identity": "e"}; op rows hold labels.
Carrier<FiniteElement> carrier_from_json(const nlohmann::json& j, const std::string& source);

/// {"elements": [...], "covers": [["lower", "upper"], ...]}.
FiniteLattice lattice_from_json(const nlohmann::json& j, const std::string& source);

/// {"form": "table", "entries": [[x, y, degree], ...]} over the keys that
/// appear; every ordered pair must be listed.
FuzzyEquality equality_from_json(const nlohmann::json& j, const Connective& t, const std::string& source);

/// {"form": "table", "entries": [[x, y, z, degree], ...]} over the
/// equality's elements; every triple must be listed.
VagueOperation vague_operation_from_json(const nlohmann::json& j, FuzzyEquality eq, const std::string& source);

/// Overrides the fields present in a budget blob such as the value of
/// FUZZNORM_BUDGET_OVERRIDE: n_max, iter_cap, epsilon, float_epsilon,
/// max_witnesses, max_tuples, arity_cap.
SearchBudget apply_budget_override(SearchBudget base, const nlohmann::json& j, const std::string& source);

}  // namespace fuzznorm::io

#endif  // FUZZNORM_IO_HPP_
