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

#include "fuzznorm/lattice.hpp"

#include <algorithm>
#include <functional>

#include "fuzznorm/error.hpp"
#include "fuzznorm/implication.hpp"

namespace fuzznorm {

FiniteLattice FiniteLattice::from_covers(std::string name, std::vector<std::string> labels,
                                         const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = labels.size();
  if (n == 0) throw UnboundedError("lattice '" + name + "' has no elements");
  auto index = [&](const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ConfigurationError("cover names unknown element '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ConfigurationError("lattice '" + name + "' repeats element '" + *dup + "'");
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [lo, hi] : covers) {
    const auto a = index(lo);
    const auto b = index(hi);
    if (a == b) throw NotALatticeError("cover relation has a loop at '" + lo + "'");
    leq[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i][j] && leq[j][i]) {
        throw NotALatticeError("cover relation has a cycle through '" + labels[i] + "' and '" + labels[j] + "'");
      }
    }
  }
  return from_order(std::move(name), std::move(labels), std::move(leq));
}

FiniteLattice FiniteLattice::from_order(std::string name, std::vector<std::string> labels,
                                        std::vector<std::vector<bool>> leq) {
  const std::size_t n = labels.size();
  FiniteLattice l;
  l.name_ = std::move(name);
  l.labels_ = std::move(labels);
  l.leq_ = std::move(leq);

  auto find_bound = [&](bool bottom) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < n; ++c) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = bottom ? l.leq_[c][x] : l.leq_[x][c];
      if (ok) return c;
    }
    return std::nullopt;
  };
  auto bottom = find_bound(true);
  auto top = find_bound(false);
  if (!bottom) throw UnboundedError("lattice '" + l.name_ + "' has no bottom element");
  if (!top) throw UnboundedError("lattice '" + l.name_ + "' has no top element");
  l.bottom_ = *bottom;
  l.top_ = *top;

  l.meet_.assign(n, std::vector<std::size_t>(n));
  l.join_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> glb;
      std::optional<std::size_t> lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq_[c][a] && l.leq_[c][b]) {
          bool greatest = true;
          for (std::size_t d = 0; d < n && greatest; ++d) {
            if (l.leq_[d][a] && l.leq_[d][b]) greatest = l.leq_[d][c];
          }
          if (greatest) glb = c;
        }
        if (l.leq_[a][c] && l.leq_[b][c]) {
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d) {
            if (l.leq_[a][d] && l.leq_[b][d]) least = l.leq_[c][d];
          }
          if (least) lub = c;
        }
      }
      if (!glb) {
        throw NotALatticeError("'" + l.labels_[a] + "' and '" + l.labels_[b] + "' have no unique meet in " + l.name_);
      }
      if (!lub) {
        throw NotALatticeError("'" + l.labels_[a] + "' and '" + l.labels_[b] + "' have no unique join in " + l.name_);
      }
      l.meet_[a][b] = *glb;
      l.join_[a][b] = *lub;
    }
  }
  return l;
}

FiniteLattice FiniteLattice::chain(std::size_t n) {
  if (n < 2) throw ConfigurationError("a chain needs at least two elements");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(UnitScalar(static_cast<long>(i), static_cast<long>(n - 1)).to_string());
    if (i > 0) covers.emplace_back(labels[i - 1], labels[i]);
  }
  return from_covers(std::to_string(n) + "-chain", labels, covers);
}

FiniteLattice FiniteLattice::diamond() {
  return from_covers("diamond", {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

std::size_t FiniteLattice::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ConfigurationError("'" + std::string(label) + "' is not an element of " + name_);
  return static_cast<std::size_t>(it - labels_.begin());
}

bool FiniteLattice::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!comparable(a, b)) return false;
    }
  }
  return true;
}

LatticeInterval LatticeInterval::of(const FiniteLattice& l, std::size_t a, std::size_t b) {
  if (!l.leq(a, b)) throw DomainError("[" + l.label(a) + ", " + l.label(b) + "] is empty: the ends are not ordered");
  LatticeInterval out;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.leq(a, x) && l.leq(x, b)) {
      out.parent.push_back(x);
      labels.push_back(l.label(x));
    }
  }
  const std::size_t m = out.parent.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = l.leq(out.parent[i], out.parent[j]);
  }
  out.lattice = FiniteLattice::from_order("[" + l.label(a) + ", " + l.label(b) + "] of " + l.name(),
                                          std::move(labels), std::move(leq));
  return out;
}

LatticeTNorm meet_tnorm(const FiniteLattice& l) {
  LatticeTNorm t{"meet", std::vector<std::vector<std::size_t>>(l.size(), std::vector<std::size_t>(l.size()))};
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) t.table[a][b] = l.meet(a, b);
  }
  return t;
}

namespace {

DomainInfo lattice_info(const FiniteLattice& l) { return {"lattice", static_cast<std::int64_t>(l.size())}; }

Datum lab(const FiniteLattice& l, std::size_t i) { return Datum{l.label(i)}; }

std::uint64_t power(std::size_t n, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out *= n;
  return out;
}

}  // namespace

PropertyReport check_lattice_tnorm(const LatticeTNorm& t, const FiniteLattice& l, const SearchBudget& budget) {
  const std::size_t n = l.size();
  const auto info = lattice_info(l);
  auto r = make_report("lattice-tnorm", info, budget);
  r.notes["lattice"] = l.name();
  r.notes["table"] = t.name;

  auto shape = make_report("range", info, budget);
  bool shaped = t.table.size() == n;
  for (std::size_t x = 0; x < n && shaped; ++x) {
    shaped = t.table[x].size() == n;
    for (std::size_t y = 0; y < n && shaped; ++y) {
      ++shape.instances;
      if (t.table[x][y] >= n) {
        shape.add_violation({{lab(l, x), lab(l, y)}, {static_cast<std::int64_t>(t.table[x][y])}});
      }
    }
  }
  if (!shaped) shape.add_violation({{std::string("table")}, {std::string("not n x n")}});
  const bool usable = shape.holds();
  r.add_check(std::move(shape));
  if (!usable) return r;

  auto comm = make_report("L1-commutativity", info, budget);
  auto assoc = make_report("L2-associativity", info, budget);
  auto mono = make_report("L3-monotonicity", info, budget);
  auto bound = make_report("L4-boundary", info, budget);
  for (std::size_t x = 0; x < n; ++x) {
    ++bound.instances;
    if (t(x, l.top()) != x) bound.add_violation({{lab(l, x), lab(l, l.top())}, {lab(l, t(x, l.top()))}});
    for (std::size_t y = 0; y < n; ++y) {
      if (x < y) {
        ++comm.instances;
        if (t(x, y) != t(y, x)) comm.add_violation({{lab(l, x), lab(l, y)}, {lab(l, t(x, y)), lab(l, t(y, x))}});
      }
      for (std::size_t z = 0; z < n; ++z) {
        ++assoc.instances;
        const auto lhs = t(t(x, y), z);
        const auto rhs = t(x, t(y, z));
        if (lhs != rhs) assoc.add_violation({{lab(l, x), lab(l, y), lab(l, z)}, {lab(l, lhs), lab(l, rhs)}});
        if (l.less(y, z)) {
          ++mono.instances;
          if (!l.leq(t(x, y), t(x, z))) {
            mono.add_violation({{lab(l, x), lab(l, y), lab(l, z)}, {lab(l, t(x, y)), lab(l, t(x, z))}});
          }
        }
      }
    }
  }
  r.add_check(std::move(comm));
  r.add_check(std::move(assoc));
  r.add_check(std::move(mono));
  r.add_check(std::move(bound));
  return r;
}

std::optional<LatticeTNorm> restrict_tnorm(const LatticeTNorm& t, const LatticeInterval& interval) {
  const std::size_t m = interval.parent.size();
  LatticeTNorm out{t.name + " on " + interval.lattice.name(),
                   std::vector<std::vector<std::size_t>>(m, std::vector<std::size_t>(m))};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = t(interval.parent[i], interval.parent[j]);
      auto it = std::find(interval.parent.begin(), interval.parent.end(), v);
      if (it == interval.parent.end()) return std::nullopt;
      out.table[i][j] = static_cast<std::size_t>(it - interval.parent.begin());
    }
  }
  return out;
}

std::vector<LatticeTNorm> enumerate_lattice_tnorms(const FiniteLattice& l, std::size_t cap) {
  const std::size_t n = l.size();
  if (n > 6) {
    std::uint64_t estimate = 1;
    for (std::size_t i = 0; i < (n - 2) * (n - 1) / 2 && estimate < (1ULL << 60) / n; ++i) estimate *= n;
    throw BudgetError("lattice t-norm enumeration is limited to six elements; " + l.name() + " has " +
                      std::to_string(n),
                      estimate);
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, kUnset));
  for (std::size_t x = 0; x < n; ++x) {
    table[x][l.top()] = table[l.top()][x] = x;
    table[x][l.bottom()] = table[l.bottom()][x] = l.bottom();
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (table[i][j] == kUnset) cells.emplace_back(i, j);
    }
  }

  // Monotonicity of row `row` against every cell already filled in.
  auto row_ok = [&](std::size_t row, std::size_t col, std::size_t v) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto other = table[row][k];
      if (other == kUnset || k == col) continue;
      if (l.leq(k, col) && !l.leq(other, v)) return false;
      if (l.leq(col, k) && !l.leq(v, other)) return false;
    }
    return true;
  };

  std::vector<LatticeTNorm> out;
  std::function<bool(std::size_t)> fill = [&](std::size_t c) -> bool {
    if (c == cells.size()) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (table[table[x][y]][z] != table[x][table[y][z]]) return true;
          }
        }
      }
      out.push_back({l.name() + "#" + std::to_string(out.size()), table});
      return cap == 0 || out.size() < cap;
    }
    const auto [i, j] = cells[c];
    for (std::size_t v = 0; v < n; ++v) {
      // T(x,y) <= T(x,1) = x and likewise for y.
      if (!l.leq(v, l.meet(i, j))) continue;
      if (!row_ok(i, j, v) || !row_ok(j, i, v)) continue;
      table[i][j] = table[j][i] = v;
      const bool more = fill(c + 1);
      table[i][j] = table[j][i] = kUnset;
      if (!more) return false;
    }
    return true;
  };
  fill(0);
  return out;
}

Connective as_connective(const LatticeTNorm& t, const FiniteLattice& chain) {
  const std::size_t n = chain.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!chain.less(i, i + 1)) throw DomainError(chain.name() + " is not a chain listed in increasing order");
  }
  std::vector<UnitScalar> points;
  for (std::size_t i = 0; i < n; ++i) points.emplace_back(static_cast<long>(i), static_cast<long>(n - 1));
  std::vector<std::vector<UnitScalar>> values(n, std::vector<UnitScalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) values[i][j] = points[t(i, j)];
  }
  return table_connective("table:" + t.name, Role::kTNorm, points, values, UnitScalar::one());
}

std::vector<LSubset> enumerate_lsubsets(const FiniteLattice& l, const SearchBudget& budget) {
  const std::size_t n = l.size();
  const auto count = power(n, static_cast<int>(n));
  require_within_budget(count, budget, "L-subset enumeration");
  std::vector<LSubset> out;
  out.reserve(count);
  LSubset mu(n, 0);
  for (std::uint64_t t = 0; t < count; ++t) {
    out.push_back(mu);
    for (std::size_t k = n; k-- > 0;) {
      if (++mu[k] < n) break;
      mu[k] = 0;
    }
  }
  return out;
}

std::string describe(const LSubset& mu, const FiniteLattice& l) {
  std::string out = "lsubset[";
  for (std::size_t i = 0; i < mu.size(); ++i) out += (i ? "," : "") + l.label(mu[i]);
  return out + "]";
}

PropertyReport check_lattice_fuzzy_subnorm(const LSubset& mu, const LatticeTNorm& t, const FiniteLattice& l,
                                           const SearchBudget& budget) {
  const std::size_t n = l.size();
  const auto info = lattice_info(l);
  auto r = make_report("lattice-t-subnorm", info, budget);
  r.notes["subset"] = describe(mu, l);
  r.notes["table"] = t.name;
  auto closure = make_report("closure", info, budget);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++closure.instances;
      const auto lhs = l.meet(mu[x], mu[y]);
      const auto rhs = mu[t(x, y)];
      if (!l.leq(lhs, rhs)) closure.add_violation({{lab(l, x), lab(l, y)}, {lab(l, lhs), lab(l, rhs)}});
    }
  }
  auto ident = make_report("identity", info, budget);
  ++ident.instances;
  if (mu[l.top()] != l.top()) ident.add_violation({{lab(l, l.top())}, {lab(l, mu[l.top()])}});
  r.add_check(std::move(closure));
  r.add_check(std::move(ident));
  return r;
}

PropertyReport check_lattice_fuzzy_property(const LSubset& mu, const LatticeTNorm& t, const FiniteLattice& l,
                                            FuzzyProperty prop, const SearchBudget& budget) {
  const std::size_t n = l.size();
  auto r = make_report(std::string(to_string(prop)), lattice_info(l), budget);
  r.notes["subset"] = describe(mu, l);
  r.notes["table"] = t.name;
  if (!check_lattice_fuzzy_subnorm(mu, t, l, budget).holds()) r.add_tag("NOT_A_SUBNORM");
  const std::size_t bot = l.bottom();
  const std::size_t top = l.top();
  auto interior = [&](std::size_t x) { return x != bot && x != top; };

  switch (prop) {
    case FuzzyProperty::kStrict: {
      std::uint64_t skipped = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (!interior(x)) continue;
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (y == z) continue;
            if (!l.comparable(y, z)) {
              if (y < z) ++skipped;
              continue;
            }
            if (!l.less(y, z)) continue;
            ++r.instances;
            const auto a = mu[t(x, y)];
            const auto b = mu[t(x, z)];
            if (l.less(b, a)) continue;
            if (!l.comparable(a, b)) r.add_tag("INCOMPARABLE_OUTCOME");
            r.add_violation({{lab(l, x), lab(l, y), lab(l, z)}, {lab(l, a), lab(l, b)}});
          }
        }
      }
      r.notes["excluded_incomparable"] = std::to_string(skipped);
      if (r.instances == 0) r.mark_vacuous("NO_INTERIOR_ELEMENT");
      break;
    }
    case FuzzyProperty::kCancel:
    case FuzzyProperty::kConditionalCancel: {
      std::uint64_t strong_failures = 0;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = y + 1; z < n; ++z) {
            ++r.instances;
            const auto a = mu[t(x, y)];
            if (a != mu[t(x, z)]) continue;
            if (prop == FuzzyProperty::kCancel) {
              if (x != bot) r.add_violation({{lab(l, x), lab(l, y), lab(l, z)}, {lab(l, a), lab(l, a)}});
            } else if (l.less(mu[bot], a)) {
              ++strong_failures;
              if (mu[y] != mu[z]) {
                r.add_violation({{lab(l, x), lab(l, y), lab(l, z)}, {lab(l, a), lab(l, mu[y]), lab(l, mu[z])}});
              }
            }
          }
        }
      }
      if (prop == FuzzyProperty::kConditionalCancel) {
        r.notes["strong_form"] = strong_failures == 0 ? "holds" : "fails (" + std::to_string(strong_failures) + ")";
      }
      break;
    }
    case FuzzyProperty::kArchimedean: {
      bool constant = true;
      for (std::size_t x = 0; x < n; ++x) constant = constant && mu[x] == mu[0];
      if (constant) {
        r.mark_vacuous("VACUOUS_BY_CONSTANCY");
        break;
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (!interior(x)) continue;
        // The powers decrease, so they settle after at most n steps.
        std::vector<std::size_t> powers{x};
        while (true) {
          const auto next = t(powers.back(), x);
          if (next == powers.back() || powers.size() > n) break;
          powers.push_back(next);
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (!interior(y)) continue;
          ++r.instances;
          bool hit = false;
          bool incomparable = false;
          for (auto p : powers) {
            if (l.less(mu[p], mu[y])) hit = true;
            if (!l.comparable(mu[p], mu[y])) incomparable = true;
          }
          if (hit) continue;
          if (incomparable) r.add_tag("INCOMPARABLE_OUTCOME");
          r.add_violation({{lab(l, x), lab(l, y)},
                           {lab(l, mu[powers.back()]), lab(l, mu[y]), static_cast<std::int64_t>(powers.size())}});
        }
      }
      break;
    }
    case FuzzyProperty::kLimit: {
      for (std::size_t x = 0; x < n; ++x) {
        if (!interior(x)) continue;
        ++r.instances;
        std::size_t p = x;
        std::int64_t steps = 1;
        while (t(p, x) != p && steps <= static_cast<std::int64_t>(n)) {
          p = t(p, x);
          ++steps;
        }
        if (mu[p] != mu[bot]) r.add_violation({{lab(l, x)}, {lab(l, mu[p]), lab(l, mu[bot]), steps}});
      }
      break;
    }
  }
  return r;
}

LatticeEquality crisp_lattice_equality(const FiniteLattice& l) {
  LatticeEquality e{"crisp", std::vector<std::vector<std::size_t>>(l.size(), std::vector<std::size_t>(l.size(), l.bottom()))};
  for (std::size_t i = 0; i < l.size(); ++i) e.degree[i][i] = l.top();
  return e;
}

std::vector<LatticeEquality> enumerate_lattice_equalities(const FiniteLattice& l, const SearchBudget& budget) {
  const std::size_t n = l.size();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }
  const auto count = power(n, static_cast<int>(cells.size()));
  require_within_budget(count, budget, "lattice equality enumeration");
  std::vector<LatticeEquality> out;
  std::vector<std::size_t> idx(cells.size(), 0);
  for (std::uint64_t t = 0; t < count; ++t) {
    LatticeEquality e{"E[", std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, l.top()))};
    for (std::size_t c = 0; c < cells.size(); ++c) {
      e.degree[cells[c].first][cells[c].second] = e.degree[cells[c].second][cells[c].first] = idx[c];
      e.name += (c ? "," : "") + l.label(idx[c]);
    }
    e.name += "]";
    out.push_back(std::move(e));
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  return out;
}

PropertyReport validate_lattice_equality(const LatticeEquality& e, const LatticeTNorm& t, const FiniteLattice& l,
                                         const SearchBudget& budget) {
  const std::size_t n = l.size();
  const auto info = lattice_info(l);
  auto r = make_report("lattice-fuzzy-equality", info, budget);
  r.notes["equality"] = e.name;
  r.notes["table"] = t.name;
  auto refl = make_report("reflexivity", info, budget);
  auto sym = make_report("symmetry", info, budget);
  auto trans = make_report("transitivity", info, budget);
  for (std::size_t x = 0; x < n; ++x) {
    ++refl.instances;
    if (e.degree[x][x] != l.top()) refl.add_violation({{lab(l, x)}, {lab(l, e.degree[x][x])}});
    for (std::size_t y = 0; y < n; ++y) {
      ++sym.instances;
      if (e.degree[x][y] != e.degree[y][x]) {
        sym.add_violation({{lab(l, x), lab(l, y)}, {lab(l, e.degree[x][y]), lab(l, e.degree[y][x])}});
      }
      for (std::size_t z = 0; z < n; ++z) {
        ++trans.instances;
        const auto lhs = t(e.degree[x][y], e.degree[y][z]);
        if (!l.leq(lhs, e.degree[x][z])) {
          trans.add_violation({{lab(l, x), lab(l, y), lab(l, z)}, {lab(l, lhs), lab(l, e.degree[x][z])}});
        }
      }
    }
  }
  r.add_check(std::move(refl));
  r.add_check(std::move(sym));
  r.add_check(std::move(trans));
  return r;
}

LatticeVagueTNorm induce_lattice_vague_tnorm(const LatticeEquality& e, const LatticeTNorm& t, const FiniteLattice& l,
                                             const SearchBudget& budget) {
  const std::size_t n = l.size();
  if (n > 5) {
    throw BudgetError("lattice vague structures are limited to five elements; " + l.name() + " has " +
                          std::to_string(n),
                      power(n, 7));
  }
  if (!validate_lattice_equality(e, t, l, budget).holds()) {
    throw DomainError("'" + e.name + "' is not a " + t.name + "-fuzzy equality on " + l.name());
  }
  LatticeVagueTNorm v{"vague(" + t.name + ", " + e.name + ")", e, t, {}, n};
  v.mu.reserve(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) v.mu.push_back(e.degree[t(x, y)][z]);
    }
  }
  return v;
}

PropertyReport check_lattice_vague_structures(const LatticeVagueTNorm& v, const FiniteLattice& l,
                                              const SearchBudget& budget) {
  const std::size_t n = v.n;
  require_within_budget(power(n, 7), budget, "lattice vague monoid check over 7-tuples");
  const auto info = lattice_info(l);
  const auto& E = v.eq.degree;
  const auto& T = v.t;
  const std::size_t bot = l.bottom();
  const std::size_t top = l.top();
  auto r = make_report("lattice-vague", info, budget);
  r.notes["operation"] = v.name;

  auto ext = make_report("extensionality", info, budget);
  auto fun = make_report("functionality", info, budget);
  auto tot = make_report("totality", info, budget);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++tot.instances;
      bool found = false;
      for (std::size_t z = 0; z < n; ++z) {
        if (v(x, y, z) == top) found = true;
        for (std::size_t z2 = 0; z2 < n; ++z2) {
          ++fun.instances;
          const auto lhs = T(v(x, y, z), v(x, y, z2));
          if (!l.leq(lhs, E[z][z2])) {
            fun.add_violation({{lab(l, x), lab(l, y), lab(l, z), lab(l, z2)}, {lab(l, lhs), lab(l, E[z][z2])}});
          }
        }
        if (v(x, y, z) == bot) {
          ext.instances += power(n, 3);
          continue;
        }
        for (std::size_t x2 = 0; x2 < n; ++x2) {
          for (std::size_t y2 = 0; y2 < n; ++y2) {
            for (std::size_t z2 = 0; z2 < n; ++z2) {
              ++ext.instances;
              const auto lhs = T(T(T(v(x, y, z), E[x][x2]), E[y][y2]), E[z][z2]);
              if (!l.leq(lhs, v(x2, y2, z2))) {
                ext.add_violation({{lab(l, x), lab(l, y), lab(l, z), lab(l, x2), lab(l, y2), lab(l, z2)},
                                   {lab(l, lhs), lab(l, v(x2, y2, z2))}});
              }
            }
          }
        }
      }
      if (!found) tot.add_violation({{lab(l, x), lab(l, y)}, {std::string("no z with degree 1")}});
    }
  }

  auto assoc = make_report("associativity", info, budget);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t d = 0; d < n; ++d) {
          const auto a1 = v(y, z, d);
          for (std::size_t m = 0; m < n; ++m) {
            const auto a2 = T(a1, v(x, d, m));
            for (std::size_t q = 0; q < n; ++q) {
              const auto a3 = T(a2, v(x, y, q));
              for (std::size_t w = 0; w < n; ++w) {
                ++assoc.instances;
                const auto lhs = T(a3, v(q, z, w));
                if (!l.leq(lhs, E[m][w])) {
                  assoc.add_violation(
                      {{lab(l, x), lab(l, y), lab(l, z), lab(l, d), lab(l, m), lab(l, q), lab(l, w)},
                       {lab(l, lhs), lab(l, E[m][w])}});
                }
              }
            }
          }
        }
      }
    }
  }

  auto ident = make_report("identity", info, budget);
  std::optional<std::size_t> found;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ++ident.instances;
      ok = T(v(e, a, a), v(a, e, a)) == top;
    }
    if (ok) found = e;
  }
  if (found) {
    r.notes["identity"] = l.label(*found);
  } else {
    ident.add_violation({{std::string("identity")}, {std::string("none")}});
  }

  auto comm = make_report("commutativity", info, budget);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t w = 0; w < n; ++w) {
          ++comm.instances;
          const auto lhs = T(v(a, b, m), v(b, a, w));
          if (!l.leq(lhs, E[m][w])) {
            comm.add_violation({{lab(l, a), lab(l, b), lab(l, m), lab(l, w)}, {lab(l, lhs), lab(l, E[m][w])}});
          }
        }
      }
    }
  }
  r.add_check(std::move(ext));
  r.add_check(std::move(fun));
  r.add_check(std::move(tot));
  r.add_check(std::move(assoc));
  r.add_check(std::move(ident));
  r.add_check(std::move(comm));
  return r;
}

PropertyReport check_lattice_vague_strict_monotone(const LatticeVagueTNorm& v, const FiniteLattice& l,
                                                   VagueReading reading, const SearchBudget& budget) {
  const std::size_t n = v.n;
  auto r = make_report("lattice-vague-strict-monotone", lattice_info(l), budget);
  r.notes["operation"] = v.name;
  r.notes["reading"] = std::string(to_string(reading));
  std::uint64_t premises = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!l.less(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            ++r.instances;
            const auto d = v(x, z, a);
            if (d != v(y, z, b)) continue;
            if (reading == VagueReading::kCrisp && d != l.top()) continue;
            ++premises;
            if (!l.less(a, b)) r.add_violation({{lab(l, x), lab(l, y), lab(l, z), lab(l, a), lab(l, b)}, {lab(l, d)}});
          }
        }
      }
    }
  }
  if (premises == 0) r.mark_vacuous("NO_PREMISE_INSTANCE");
  return r;
}

PropertyReport check_lattice_vague_cancellation(const LatticeVagueTNorm& v, const FiniteLattice& l,
                                                VagueReading reading, const SearchBudget& budget) {
  const std::size_t n = v.n;
  auto r = make_report("lattice-vague-cancellation", lattice_info(l), budget);
  r.notes["operation"] = v.name;
  r.notes["reading"] = std::string(to_string(reading));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < n; ++c) {
          ++r.instances;
          const auto d = v(a, x, c);
          if (d != v(b, x, c)) continue;
          if (reading == VagueReading::kCrisp && d != l.top()) continue;
          r.add_violation({{lab(l, a), lab(l, b), lab(l, x), lab(l, c)}, {lab(l, d)}});
        }
      }
    }
  }
  return r;
}

}  // namespace fuzznorm
