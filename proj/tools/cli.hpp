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

#ifndef FUZZNORM_TOOLS_CLI_HPP_
#define FUZZNORM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace fuzznorm::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitVacuous = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNotTotal = 65;

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzznorm::cli

#endif  // FUZZNORM_TOOLS_CLI_HPP_
