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

#ifndef FUZZNORM_CONNECTIVE_HPP_
#define FUZZNORM_CONNECTIVE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzznorm/scalar.hpp"

namespace fuzznorm {

enum class Role { kTNorm, kTConorm, kUninorm, kNullnorm, kAggregation };

std::string_view to_string(Role role);

using BinaryFn = std::function<UnitScalar(const UnitScalar&, const UnitScalar&)>;
using NaryFn = std::function<UnitScalar(std::span<const UnitScalar>)>;

/**
 * A named operation on [0,1] together with the special elements it claims.
 *
 * The claims (identity for t-norms, t-conorms and uninorms, absorber for
 * nullnorms) are recorded, not trusted: the checker engine validates them.
 * Connectives are immutable and cheap to copy; evaluation is pure.
 */
class Connective {
 public:
  Connective(std::string name, Role role, BinaryFn fn,
             std::optional<UnitScalar> identity = std::nullopt,
             std::optional<UnitScalar> absorber = std::nullopt);

  /// An aggregation function given natively in n-ary form.
  static Connective aggregation(std::string name, NaryFn fn);

  const std::string& name() const { return name_; }
  Role role() const { return role_; }
  const std::optional<UnitScalar>& identity() const { return identity_; }
  const std::optional<UnitScalar>& absorber() const { return absorber_; }

  UnitScalar operator()(const UnitScalar& x, const UnitScalar& y) const { return binary_(x, y); }

  /// n-ary evaluation: native for aggregation functions, a left fold
  /// otherwise. An empty argument list yields the identity.
  UnitScalar operator()(std::span<const UnitScalar> args) const;

  Connective renamed(std::string name) const;

 private:
  std::string name_;
  Role role_;
  BinaryFn binary_;
  NaryFn nary_;
  std::optional<UnitScalar> identity_;
  std::optional<UnitScalar> absorber_;
};

enum class TNormFamily { kMinimum, kProduct, kLukasiewicz, kDrastic };
enum class TConormFamily { kMaximum, kProbabilisticSum, kLukasiewicz, kDrastic };

/// Short family names: "min", "product", "lukasiewicz", "drastic".
TNormFamily parse_tnorm_family(std::string_view name);
/// Short family names: "max", "probsum", "lukasiewicz", "drastic".
TConormFamily parse_tconorm_family(std::string_view name);
std::string_view short_name(TNormFamily family);
std::string_view short_name(TConormFamily family);

UnitScalar eval_tnorm(TNormFamily family, const UnitScalar& x, const UnitScalar& y);
UnitScalar eval_tconorm(TConormFamily family, const UnitScalar& x, const UnitScalar& y);
/// Same, with the family addressed by short name or canonical id.
UnitScalar eval_tnorm(std::string_view family, const UnitScalar& x, const UnitScalar& y);
UnitScalar eval_tconorm(std::string_view family, const UnitScalar& x, const UnitScalar& y);

Connective tnorm(TNormFamily family);
Connective tconorm(TConormFamily family);

inline const std::vector<TNormFamily>& all_tnorm_families() {
  static const std::vector<TNormFamily> kAll{TNormFamily::kMinimum, TNormFamily::kProduct,
                                             TNormFamily::kLukasiewicz, TNormFamily::kDrastic};
  return kAll;
}

inline const std::vector<TConormFamily>& all_tconorm_families() {
  static const std::vector<TConormFamily> kAll{TConormFamily::kMaximum, TConormFamily::kProbabilisticSum,
                                               TConormFamily::kLukasiewicz, TConormFamily::kDrastic};
  return kAll;
}

/// Pointwise min/max/arithmetic mean in n-ary form.
Connective aggregation_min();
Connective aggregation_max();
Connective aggregation_mean();

/// x_C^(n): 1-fold is x itself, n-fold is C(x^(n-1), x). n = 0 yields the
/// identity, which must be declared.
UnitScalar power_iterate(const Connective& c, const UnitScalar& x, std::int64_t n);

/// Uninorm with identity e built from a t-norm on [0,e]^2 and a t-conorm on
/// [e,1]^2, taking min on the mixed region (so U(0,1) = 0).
Connective construct_uninorm_min(const UnitScalar& e, const Connective& t, const Connective& s);
/// As above, with max on the mixed region (U(0,1) = 1).
Connective construct_uninorm_max(const UnitScalar& e, const Connective& t, const Connective& s);
/// Nullnorm <S,k,T>: scaled S on [0,k]^2, scaled T on (k,1]^2, k elsewhere.
Connective construct_nullnorm(const Connective& s, const UnitScalar& k, const Connective& t);

/// Standard negation duality: a t-norm becomes 1 - T(1-x, 1-y) and back.
Connective dualize(const Connective& c);

/**
 * A connective given by an operation table on a finite set of points of
 * [0,1]. Evaluating it away from those points throws NotTotalError.
 */
Connective table_connective(std::string name, Role role, std::vector<UnitScalar> points,
                            std::vector<std::vector<UnitScalar>> table,
                            std::optional<UnitScalar> identity = std::nullopt,
                            std::optional<UnitScalar> absorber = std::nullopt);

/// A connective given by a double-valued closed form; its values are float
/// mode and every comparison involving them uses kFloatTolerance.
Connective float_connective(std::string name, Role role, std::function<double(double, double)> fn,
                            std::optional<UnitScalar> identity = std::nullopt,
                            std::optional<UnitScalar> absorber = std::nullopt);

/**
 * Resolves a canonical connective id:
 *
 *   tnorm:min | tnorm:product | tnorm:lukasiewicz | tnorm:drastic
 *   tconorm:max | tconorm:probsum | tconorm:lukasiewicz | tconorm:drastic
 *   aggregation:min | aggregation:max | aggregation:mean
 *   uninorm:umin(e=1/2,T=product,S=probsum)   (keys optional, positional e,T,S)
 *   uninorm:umax(1/2,product,probsum)
 *   nullnorm:<lukasiewicz-S,1/2,lukasiewicz-T>
 *
 * Throws ConfigurationError for anything else.
 */
Connective parse_connective(std::string_view id);

}  // namespace fuzznorm

#endif  // FUZZNORM_CONNECTIVE_HPP_
