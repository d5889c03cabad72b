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

#include "fuzznorm/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "fuzznorm/error.hpp"

namespace fuzznorm {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpq_class parse_integer(std::string_view s) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_digits(digits)) {
    throw ParseError("malformed rational '" + std::string(s) + "'");
  }
  mpz_class z(std::string(digits), 10);
  if (negative) z = -z;
  return mpq_class(z);
}

}  // namespace

UnitScalar::UnitScalar(long numerator, long denominator) {
  if (denominator == 0) throw ConfigurationError("zero denominator");
  mpq_class q{mpz_class(numerator), mpz_class(denominator)};
  q.canonicalize();
  value_ = std::move(q);
}

UnitScalar::UnitScalar(mpq_class exact) {
  exact.canonicalize();
  value_ = std::move(exact);
}

UnitScalar UnitScalar::approx(double value) {
  UnitScalar s;
  s.value_ = value;
  return s;
}

UnitScalar UnitScalar::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpq_class num = parse_integer(text.substr(0, slash));
    mpq_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return UnitScalar(mpq_class(num / den));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    if ((!whole.empty() && !is_digits(whole)) || !is_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpq_class q(digits, scale);
    if (negative) q = -q;
    return UnitScalar(q);
  }
  return UnitScalar(parse_integer(text));
}

const mpq_class& UnitScalar::exact() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw DomainError("exact value requested from a float-mode scalar");
}

double UnitScalar::to_double() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

bool UnitScalar::in_unit_interval() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) >= 0 && cmp(*q, 1) <= 0;
  double d = std::get<double>(value_);
  return d >= -kFloatTolerance && d <= 1.0 + kFloatTolerance;
}

bool UnitScalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::fabs(std::get<double>(value_)) <= kFloatTolerance;
}

bool UnitScalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return cmp(*q, 1) == 0;
  return std::fabs(std::get<double>(value_) - 1.0) <= kFloatTolerance;
}

std::string UnitScalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

std::string UnitScalar::to_decimal() const {
  if (!is_exact()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(value_));
    return buf;
  }
  const mpq_class& q = std::get<mpq_class>(value_);
  mpz_class den = q.get_den();
  // Terminating iff the denominator has no prime factors other than 2 and 5.
  mpz_class rest = den;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) rest /= 2;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) rest /= 5;
  bool terminating = rest == 1;

  mpz_class num = abs(q.get_num());
  mpz_class whole = num / den;
  mpz_class remainder = num % den;
  std::string out = (sgn(q) < 0 ? "-" : "") + whole.get_str();
  if (remainder == 0) return out;
  out += '.';
  constexpr int kMaxDigits = 12;
  int digits = 0;
  while (remainder != 0 && digits < kMaxDigits) {
    remainder *= 10;
    mpz_class d = remainder / den;
    remainder %= den;
    out += d.get_str();
    ++digits;
  }
  if (!terminating || remainder != 0) out += "...";
  return out;
}

namespace {

template <class Op>
UnitScalar combine(const std::variant<mpq_class, double>& a, const std::variant<mpq_class, double>& b,
                   Op op) {
  const auto* qa = std::get_if<mpq_class>(&a);
  const auto* qb = std::get_if<mpq_class>(&b);
  if (qa && qb) return UnitScalar(mpq_class(op(*qa, *qb)));
  double da = qa ? qa->get_d() : std::get<double>(a);
  double db = qb ? qb->get_d() : std::get<double>(b);
  return UnitScalar::approx(op(da, db));
}

}  // namespace

UnitScalar operator+(const UnitScalar& a, const UnitScalar& b) {
  return combine(a.value_, b.value_, [](const auto& x, const auto& y) { return x + y; });
}

UnitScalar operator-(const UnitScalar& a, const UnitScalar& b) {
  return combine(a.value_, b.value_, [](const auto& x, const auto& y) { return x - y; });
}

UnitScalar operator*(const UnitScalar& a, const UnitScalar& b) {
  return combine(a.value_, b.value_, [](const auto& x, const auto& y) { return x * y; });
}

UnitScalar operator/(const UnitScalar& a, const UnitScalar& b) {
  if (b.is_exact() && sgn(b.exact()) == 0) throw DomainError("division by zero");
  return combine(a.value_, b.value_, [](const auto& x, const auto& y) { return x / y; });
}

UnitScalar UnitScalar::operator-() const { return UnitScalar(0) - *this; }

std::weak_ordering operator<=>(const UnitScalar& a, const UnitScalar& b) {
  const auto* qa = std::get_if<mpq_class>(&a.value_);
  const auto* qb = std::get_if<mpq_class>(&b.value_);
  if (qa && qb) {
    int c = cmp(*qa, *qb);
    return c < 0 ? std::weak_ordering::less
                 : (c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent);
  }
  double da = a.to_double();
  double db = b.to_double();
  if (da < db) return std::weak_ordering::less;
  if (da > db) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

bool operator==(const UnitScalar& a, const UnitScalar& b) { return (a <=> b) == 0; }

std::ostream& operator<<(std::ostream& os, const UnitScalar& x) { return os << x.to_string(); }

UnitScalar min(const UnitScalar& a, const UnitScalar& b) { return b < a ? b : a; }
UnitScalar max(const UnitScalar& a, const UnitScalar& b) { return a < b ? b : a; }
UnitScalar abs(const UnitScalar& a) { return a < UnitScalar(0) ? -a : a; }

bool same(const UnitScalar& a, const UnitScalar& b) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::fabs(a.to_double() - b.to_double()) <= kFloatTolerance;
}

bool below(const UnitScalar& a, const UnitScalar& b) {
  if (a.is_exact() && b.is_exact()) return a < b;
  return a.to_double() < b.to_double() - kFloatTolerance;
}

bool at_most(const UnitScalar& a, const UnitScalar& b) { return !below(b, a); }

bool indeterminate(const UnitScalar& a, const UnitScalar& b) {
  if (a.is_exact() && b.is_exact()) return false;
  return a != b && same(a, b);
}

}  // namespace fuzznorm
