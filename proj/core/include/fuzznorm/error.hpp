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

#ifndef FUZZNORM_ERROR_HPP_
#define FUZZNORM_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuzznorm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown connective id, malformed parameter, bad budget.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A construction parameter sits on the boundary where the construction
/// collapses to a plain t-norm or t-conorm (e = 0, e = 1, k = 0, k = 1).
class DegenerateParameterError : public ConfigurationError {
 public:
  using ConfigurationError::ConfigurationError;
};

/// An operation was called outside its precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A table-backed map was evaluated at a point it does not define.
class NotTotalError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotALatticeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnboundedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Refusal to run a search whose size exceeds the configured budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t estimate)
      : Error(what + " (estimated " + std::to_string(estimate) + " evaluations)"),
        estimate_(estimate) {}

  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

/// Malformed input file; the message names the offending field or position.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzznorm

#endif  // FUZZNORM_ERROR_HPP_
