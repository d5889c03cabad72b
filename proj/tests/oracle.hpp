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

#ifndef FUZZNORM_TESTS_ORACLE_HPP_
#define FUZZNORM_TESTS_ORACLE_HPP_

// Double-precision reference formulas and seeded generators. Nothing here
// calls into the library except to convert scalars.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fuzznorm/scalar.hpp"

namespace oracle {

inline double t_min(double x, double y) { return std::min(x, y); }
inline double t_prod(double x, double y) { return x * y; }
inline double t_luk(double x, double y) { return std::max(0.0, x + y - 1.0); }
inline double t_drastic(double x, double y) {
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  return 0.0;
}
inline double s_max(double x, double y) { return std::max(x, y); }
inline double s_prob(double x, double y) { return x + y - x * y; }
inline double s_luk(double x, double y) { return std::min(1.0, x + y); }
inline double s_drastic(double x, double y) {
  if (x == 0.0) return y;
  if (y == 0.0) return x;
  return 1.0;
}

using Fn = double (*)(double, double);

/// Rescaled t-norm below e, rescaled t-conorm above e, min or max elsewhere.
inline double uninorm(double e, Fn t, Fn s, bool use_max, double x, double y) {
  if (x <= e && y <= e) return e * t(x / e, y / e);
  if (x >= e && y >= e) return e + (1 - e) * s((x - e) / (1 - e), (y - e) / (1 - e));
  return use_max ? std::max(x, y) : std::min(x, y);
}

inline double nullnorm(Fn s, double k, Fn t, double x, double y) {
  if (x <= k && y <= k) return k * s(x / k, y / k);
  if (x > k && y > k) return k + (1 - k) * t((x - k) / (1 - k), (y - k) / (1 - k));
  return k;
}

/// Random rationals p/q with q <= max_den, from a fixed-seed engine.
class Rationals {
 public:
  explicit Rationals(std::uint32_t seed, long max_den = 24) : rng_(seed), max_den_(max_den) {}
  fuzznorm::UnitScalar next() {
    std::uniform_int_distribution<long> den(1, max_den_);
    const long q = den(rng_);
    std::uniform_int_distribution<long> num(0, q);
    return {num(rng_), q};
  }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  long max_den_;
};

}  // namespace oracle

#endif  // FUZZNORM_TESTS_ORACLE_HPP_
