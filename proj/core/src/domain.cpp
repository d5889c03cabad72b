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

#include "fuzznorm/domain.hpp"

#include <algorithm>

#include "fuzznorm/error.hpp"

namespace fuzznorm {

Domain::Domain(std::string kind, std::int64_t resolution, std::vector<UnitScalar> points)
    : kind_(std::move(kind)), resolution_(resolution), points_(std::move(points)) {}

Domain Domain::grid(std::int64_t resolution) {
  if (resolution < 2) {
    throw ConfigurationError("grid resolution must be at least 2, got " + std::to_string(resolution));
  }
  std::vector<UnitScalar> points;
  points.reserve(static_cast<std::size_t>(resolution) + 1);
  for (std::int64_t i = 0; i <= resolution; ++i) points.emplace_back(static_cast<long>(i), static_cast<long>(resolution));
  return Domain("grid", resolution, std::move(points));
}

Domain Domain::from_points(std::vector<UnitScalar> points) {
  if (points.empty()) throw ConfigurationError("empty point set");
  for (const auto& p : points) {
    if (!p.in_unit_interval()) throw ConfigurationError("point " + p.to_string() + " lies outside [0,1]");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  auto n = static_cast<std::int64_t>(points.size());
  return Domain("points", n, std::move(points));
}

std::vector<UnitScalar> Domain::interior() const {
  std::vector<UnitScalar> out;
  for (const auto& p : points_) {
    if (!p.is_zero() && !p.is_one()) out.push_back(p);
  }
  return out;
}

bool Domain::contains(const UnitScalar& x) const { return std::binary_search(points_.begin(), points_.end(), x); }

Domain Domain::with_points(const std::vector<UnitScalar>& extra) const {
  std::vector<UnitScalar> merged = points_;
  merged.insert(merged.end(), extra.begin(), extra.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (merged.size() == points_.size()) return *this;
  auto n = static_cast<std::int64_t>(merged.size());
  return Domain("points", n, std::move(merged));
}

}  // namespace fuzznorm
