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

#ifndef FUZZNORM_DOMAIN_HPP_
#define FUZZNORM_DOMAIN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fuzznorm/scalar.hpp"

namespace fuzznorm {

/**
 * The finite stand-in for [0,1] a check quantifies over: either the grid
 * {0, 1/n, ..., 1} or an explicit sorted point set. Points are sorted and
 * distinct.
 */
class Domain {
 public:
  /// The grid {0, 1/n, ..., 1}; n must be at least 2.
  static Domain grid(std::int64_t resolution);
  /// An explicit point set; duplicates are dropped and the points sorted.
  static Domain from_points(std::vector<UnitScalar> points);

  const std::vector<UnitScalar>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// Points strictly between 0 and 1.
  std::vector<UnitScalar> interior() const;
  bool contains(const UnitScalar& x) const;

  /// "grid" or "points".
  const std::string& kind() const { return kind_; }
  /// Grid resolution n, or the number of points for explicit sets.
  std::int64_t resolution() const { return resolution_; }

  /// This domain plus the given points.
  Domain with_points(const std::vector<UnitScalar>& extra) const;

 private:
  Domain(std::string kind, std::int64_t resolution, std::vector<UnitScalar> points);

  std::string kind_;
  std::int64_t resolution_;
  std::vector<UnitScalar> points_;
};

}  // namespace fuzznorm

#endif  // FUZZNORM_DOMAIN_HPP_
