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

#ifndef FUZZNORM_SCALAR_HPP_
#define FUZZNORM_SCALAR_HPP_

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace fuzznorm {

/// Absolute tolerance used whenever a float-mode value takes part in a
/// comparison.
inline constexpr double kFloatTolerance = 1e-9;

/**
 * A membership degree.
 *
 * Exact rationals are the normal representation: every grid point i/n and
 * every value the builtin connectives produce from them is exact, so axiom
 * checks compare bit-exactly. A value may instead hold a double when it comes
 * from a user-supplied closed form that is not rational-valued; any
 * arithmetic touching such a value stays in floating point.
 *
 * Arithmetic is unrestricted (x + y - 1 may be negative); only values handed
 * out by connectives and fuzzy subsets are required to lie in [0,1].
 */
class UnitScalar {
 public:
  UnitScalar() : value_(mpq_class(0)) {}
  UnitScalar(long numerator, long denominator = 1);  // NOLINT(google-explicit-constructor)
  explicit UnitScalar(mpq_class exact);

  static UnitScalar approx(double value);

  /// Accepts "p/q", an integer, or a finite decimal such as "0.25".
  static UnitScalar parse(std::string_view text);

  static UnitScalar zero() { return UnitScalar(0); }
  static UnitScalar one() { return UnitScalar(1); }

  bool is_exact() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& exact() const;
  double to_double() const;
  bool in_unit_interval() const;
  bool is_zero() const;
  bool is_one() const;

  /// "p/q" (or "p" when the denominator is 1); floats print with 17 digits.
  std::string to_string() const;
  /// Exact decimal expansion when it terminates, otherwise a rounded
  /// expansion suffixed with "...".
  std::string to_decimal() const;

  friend UnitScalar operator+(const UnitScalar& a, const UnitScalar& b);
  friend UnitScalar operator-(const UnitScalar& a, const UnitScalar& b);
  friend UnitScalar operator*(const UnitScalar& a, const UnitScalar& b);
  friend UnitScalar operator/(const UnitScalar& a, const UnitScalar& b);
  UnitScalar operator-() const;

  /// Raw ordering of the represented values; mixed comparisons go through
  /// double. Use the tolerant helpers below inside property checks.
  friend std::weak_ordering operator<=>(const UnitScalar& a, const UnitScalar& b);
  friend bool operator==(const UnitScalar& a, const UnitScalar& b);

 private:
  std::variant<mpq_class, double> value_;
};

std::ostream& operator<<(std::ostream& os, const UnitScalar& x);

UnitScalar min(const UnitScalar& a, const UnitScalar& b);
UnitScalar max(const UnitScalar& a, const UnitScalar& b);
UnitScalar abs(const UnitScalar& a);

/// Equality used by the checkers: exact for exact operands, within
/// kFloatTolerance otherwise.
bool same(const UnitScalar& a, const UnitScalar& b);
/// a < b, with a margin of kFloatTolerance when either side is a float.
bool below(const UnitScalar& a, const UnitScalar& b);
/// a <= b, allowing a float overshoot of at most kFloatTolerance.
bool at_most(const UnitScalar& a, const UnitScalar& b);
/// True when the comparison of a and b cannot be decided in float mode: the
/// raw values differ but lie within tolerance of each other.
bool indeterminate(const UnitScalar& a, const UnitScalar& b);

}  // namespace fuzznorm

#endif  // FUZZNORM_SCALAR_HPP_
