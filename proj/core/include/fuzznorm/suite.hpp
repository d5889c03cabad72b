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

#ifndef FUZZNORM_SUITE_HPP_
#define FUZZNORM_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuzznorm/implication.hpp"
#include "fuzznorm/report.hpp"

namespace fuzznorm {

/**
 * The verification matrix: one row per mechanized claim. Each row sweeps a
 * finite universe and counts the items on which a premise held but the
 * claimed conclusion failed. A row passes with zero counterexamples.
 */
struct SuiteConfig {
  /// Resolution of the grid-based universes; heavier rows cap it.
  std::int64_t grid = 6;
  /// Row ids to run, in catalog order; empty runs every row.
  std::vector<std::string> only;
  SearchBudget budget;
  unsigned jobs = 1;
};

enum class RowStatus { kPass, kFail, kSkipped };

std::string_view to_string(RowStatus s);

struct SuiteRow {
  std::string id;
  std::string claim;
  std::string universe;
  std::uint64_t universe_size = 0;
  std::uint64_t premise_held = 0;
  std::uint64_t counterexamples = 0;
  std::vector<std::string> examples;
  RowStatus status = RowStatus::kPass;
  /// Refusal message for skipped rows.
  std::string detail;
  double runtime_ms = 0;

  /// Folds one implication sweep into the row.
  void absorb(const ImplicationReport& r, std::size_t max_examples);
};

struct SuiteResult {
  std::int64_t grid = 0;
  std::vector<SuiteRow> rows;

  /// 1 if any row failed, else 2 if any was skipped, else 0.
  int exit_code() const;
};

struct SuiteRowInfo {
  std::string id;
  std::string claim;
};

/// Every row in catalog order.
const std::vector<SuiteRowInfo>& suite_catalog();

/// ConfigurationError for an unknown id in `only`. Rows run on up to
/// `jobs` threads; the result lists them in catalog order regardless.
SuiteResult run_suite(const SuiteConfig& config);

/// Runtime appears only when `timings` is set, so that repeated runs
/// serialize identically.
nlohmann::ordered_json to_json(const SuiteResult& result, bool timings = false);
std::string to_text(const SuiteResult& result);

}  // namespace fuzznorm

#endif  // FUZZNORM_SUITE_HPP_
