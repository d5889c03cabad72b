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

#include "fuzznorm/vague.hpp"

#include <algorithm>

#include "fuzznorm/checker.hpp"
#include "fuzznorm/error.hpp"
#include "fuzznorm/implication.hpp"

namespace fuzznorm {

namespace equalities {

EqualityFn crisp() {
  return [](const UnitScalar& x, const UnitScalar& y) { return same(x, y) ? UnitScalar::one() : UnitScalar::zero(); };
}

EqualityFn lukasiewicz() {
  return [](const UnitScalar& x, const UnitScalar& y) { return UnitScalar::one() - abs(x - y); };
}

EqualityFn goedel() {
  return [](const UnitScalar& x, const UnitScalar& y) { return same(x, y) ? UnitScalar::one() : min(x, y); };
}

EqualityFn product() {
  return [](const UnitScalar& x, const UnitScalar& y) {
    if (same(x, y)) return UnitScalar::one();
    return min(x, y) / max(x, y);
  };
}

EqualityFn by_name(std::string_view name) {
  if (name == "crisp") return crisp();
  if (name == "lukasiewicz") return lukasiewicz();
  if (name == "goedel") return goedel();
  if (name == "product") return product();
  throw ConfigurationError("unknown fuzzy equality '" + std::string(name) + "'");
}

}  // namespace equalities

bool FuzzyEquality::separates_points() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && same(degree[i][j], UnitScalar::one())) return false;
    }
  }
  return true;
}

FuzzyEquality tabulate_equality(std::string name, const EqualityFn& e, const Domain& d, const Connective& t) {
  FuzzyEquality eq{std::move(name), {}, t, {}};
  const auto& pts = d.points();
  for (const auto& x : pts) eq.labels.emplace_back(x);
  eq.degree.assign(pts.size(), std::vector<UnitScalar>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) eq.degree[i][j] = e(pts[i], pts[j]);
  }
  return eq;
}

FuzzyEquality equality_from_table(std::string name, std::vector<Datum> labels, const Connective& t,
                                  std::vector<std::vector<UnitScalar>> table) {
  if (table.size() != labels.size()) throw ConfigurationError("equality '" + name + "' needs one row per element");
  for (const auto& row : table) {
    if (row.size() != labels.size()) throw ConfigurationError("equality '" + name + "' has a row of the wrong length");
  }
  return {std::move(name), std::move(labels), t, std::move(table)};
}

namespace {

DomainInfo finite_info(std::size_t n) { return {"finite", static_cast<std::int64_t>(n)}; }

std::uint64_t power(std::size_t n, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out *= n;
  return out;
}

}  // namespace

PropertyReport validate_fuzzy_equality(const FuzzyEquality& eq, const SearchBudget& budget) {
  const std::size_t n = eq.size();
  require_within_budget(power(n, 3), budget, "T-transitivity check");
  const auto info = finite_info(n);
  auto r = make_report("fuzzy-equality", info, budget);
  r.notes["equality"] = eq.name;
  r.notes["connective"] = eq.t.name();
  r.notes["separates_points"] = eq.separates_points() ? "true" : "false";
  const auto& L = eq.labels;

  auto range = make_report("range", info, budget);
  auto refl = make_report("reflexivity", info, budget);
  auto sym = make_report("symmetry", info, budget);
  auto trans = make_report("transitivity", info, budget);
  for (std::size_t i = 0; i < n; ++i) {
    ++refl.instances;
    if (!same(eq(i, i), UnitScalar::one())) refl.add_violation({{L[i]}, {eq(i, i)}});
    for (std::size_t j = 0; j < n; ++j) {
      ++range.instances;
      if (!eq(i, j).in_unit_interval()) range.add_violation({{L[i], L[j]}, {eq(i, j)}});
      if (j > i) {
        ++sym.instances;
        if (!same(eq(i, j), eq(j, i))) sym.add_violation({{L[i], L[j]}, {eq(i, j), eq(j, i)}});
      }
      for (std::size_t k = 0; k < n; ++k) {
        ++trans.instances;
        UnitScalar lhs = eq.t(eq(i, j), eq(j, k));
        if (!at_most(lhs, eq(i, k))) trans.add_violation({{L[i], L[j], L[k]}, {lhs, eq(i, k)}});
      }
    }
  }
  r.add_check(std::move(range));
  r.add_check(std::move(refl));
  r.add_check(std::move(sym));
  r.add_check(std::move(trans));
  return r;
}

VagueOperation vague_operation_from_table(std::string name, FuzzyEquality eq,
                                          const std::vector<std::vector<std::vector<UnitScalar>>>& mu) {
  const std::size_t n = eq.size();
  VagueOperation v{std::move(name), std::move(eq), {}};
  if (mu.size() != n) throw ConfigurationError("vague operation '" + v.name + "' needs n x n x n entries");
  v.mu.reserve(n * n * n);
  for (const auto& plane : mu) {
    if (plane.size() != n) throw ConfigurationError("vague operation '" + v.name + "' needs n x n x n entries");
    for (const auto& row : plane) {
      if (row.size() != n) throw ConfigurationError("vague operation '" + v.name + "' needs n x n x n entries");
      for (const auto& x : row) {
        if (!x.in_unit_interval()) throw ConfigurationError("vague operation '" + v.name + "' has a degree outside [0,1]");
        v.mu.push_back(x);
      }
    }
  }
  return v;
}

PropertyReport check_vague_operation(const VagueOperation& v, const SearchBudget& budget) {
  const std::size_t n = v.size();
  require_within_budget(power(n, 6), budget, "extensionality check");
  const auto info = finite_info(n);
  const auto& E = v.eq;
  const auto& T = E.t;
  const auto& L = E.labels;
  auto r = make_report("vague-operation", info, budget);
  r.notes["operation"] = v.name;
  r.notes["equality"] = E.name;

  auto ext = make_report("extensionality", info, budget);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const UnitScalar& m = v(x, y, z);
        if (m.is_zero()) {
          ext.instances += power(n, 3);
          continue;
        }
        for (std::size_t x2 = 0; x2 < n; ++x2) {
          UnitScalar a = T(m, E(x, x2));
          for (std::size_t y2 = 0; y2 < n; ++y2) {
            UnitScalar b = T(a, E(y, y2));
            for (std::size_t z2 = 0; z2 < n; ++z2) {
              ++ext.instances;
              UnitScalar lhs = T(b, E(z, z2));
              if (!at_most(lhs, v(x2, y2, z2))) {
                ext.add_violation({{L[x], L[y], L[z], L[x2], L[y2], L[z2]}, {lhs, v(x2, y2, z2)}});
              }
            }
          }
        }
      }
    }
  }

  auto fun = make_report("functionality", info, budget);
  auto tot = make_report("totality", info, budget);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++tot.instances;
      bool found = false;
      for (std::size_t z = 0; z < n; ++z) {
        if (same(v(x, y, z), UnitScalar::one())) found = true;
        for (std::size_t z2 = 0; z2 < n; ++z2) {
          ++fun.instances;
          UnitScalar lhs = T(v(x, y, z), v(x, y, z2));
          if (!at_most(lhs, E(z, z2))) fun.add_violation({{L[x], L[y], L[z], L[z2]}, {lhs, E(z, z2)}});
        }
      }
      if (!found) tot.add_violation({{L[x], L[y]}, {std::string("no z with degree 1")}});
    }
  }
  r.add_check(std::move(ext));
  r.add_check(std::move(fun));
  r.add_check(std::move(tot));
  return r;
}

VagueTNorm induce_vague_tnorm(const std::string& equality_name, const EqualityFn& e, const Connective& t,
                              const Domain& d, const SearchBudget& budget) {
  if (t.role() != Role::kTNorm) throw DomainError("vague t-norms need a t-norm, got " + t.name());
  FuzzyEquality eq = tabulate_equality(equality_name, e, d, t);
  if (!validate_fuzzy_equality(eq, budget).holds()) {
    throw DomainError("'" + equality_name + "' is not a " + t.name() + "-fuzzy equality on this domain");
  }
  const auto& pts = d.points();
  const std::size_t n = pts.size();
  VagueOperation op{"vague(" + t.name() + ", " + equality_name + ")", std::move(eq), {}};
  op.mu.reserve(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const UnitScalar p = t(pts[x], pts[y]);
      for (std::size_t z = 0; z < n; ++z) op.mu.push_back(e(p, pts[z]));
    }
  }
  return {std::move(op), t};
}

PropertyReport check_vague_monoid(const VagueOperation& v, const SearchBudget& budget) {
  const std::size_t n = v.size();
  require_within_budget(power(n, 7), budget, "vague monoid check over 7-tuples");
  const auto info = finite_info(n);
  const auto& E = v.eq;
  const auto& T = E.t;
  const auto& L = E.labels;
  auto r = make_report("vague-monoid", info, budget);
  r.notes["operation"] = v.name;

  auto op = check_vague_operation(v, budget);
  if (!op.holds()) {
    r.add_tag("NOT_VAGUE_OP");
    r.add_check(std::move(op));
    return r;
  }

  auto assoc = make_report("associativity", info, budget);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t d = 0; d < n; ++d) {
          const UnitScalar& a1 = v(y, z, d);
          if (a1.is_zero()) {
            assoc.instances += power(n, 3);
            continue;
          }
          for (std::size_t m = 0; m < n; ++m) {
            UnitScalar a2 = T(a1, v(x, d, m));
            if (a2.is_zero()) {
              assoc.instances += power(n, 2);
              continue;
            }
            for (std::size_t q = 0; q < n; ++q) {
              UnitScalar a3 = T(a2, v(x, y, q));
              if (a3.is_zero()) {
                assoc.instances += n;
                continue;
              }
              for (std::size_t w = 0; w < n; ++w) {
                ++assoc.instances;
                UnitScalar lhs = T(a3, v(q, z, w));
                if (!at_most(lhs, E(m, w))) {
                  assoc.add_violation({{L[x], L[y], L[z], L[d], L[m], L[q], L[w]}, {lhs, E(m, w)}});
                }
              }
            }
          }
        }
      }
    }
  }
  r.add_check(std::move(assoc));

  auto ident = make_report("identity", info, budget);
  std::optional<std::size_t> found;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ++ident.instances;
      ok = same(T(v(e, a, a), v(a, e, a)), UnitScalar::one());
    }
    if (ok) found = e;
  }
  if (found) {
    r.notes["identity"] = to_string(L[*found]);
  } else {
    ident.add_violation({{std::string("identity")}, {std::string("none")}});
  }
  r.add_check(std::move(ident));
  return r;
}

PropertyReport check_vague_commutativity(const VagueOperation& v, const SearchBudget& budget) {
  const std::size_t n = v.size();
  require_within_budget(power(n, 4), budget, "vague commutativity check");
  const auto& E = v.eq;
  const auto& L = E.labels;
  auto r = make_report("vague-commutativity", finite_info(n), budget);
  r.notes["operation"] = v.name;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t w = 0; w < n; ++w) {
          ++r.instances;
          UnitScalar lhs = E.t(v(a, b, m), v(b, a, w));
          if (!at_most(lhs, E(m, w))) r.add_violation({{L[a], L[b], L[m], L[w]}, {lhs, E(m, w)}});
        }
      }
    }
  }
  return r;
}

std::string_view to_string(VagueReading r) { return r == VagueReading::kLiteral ? "literal" : "crisp"; }

namespace {

bool premise_matches(const UnitScalar& a, const UnitScalar& b, VagueReading reading) {
  if (!same(a, b)) return false;
  return reading == VagueReading::kLiteral || same(a, UnitScalar::one());
}

}  // namespace

PropertyReport check_vague_strict_monotone(const VagueOperation& v, VagueReading reading,
                                           const SearchBudget& budget) {
  const std::size_t n = v.size();
  require_within_budget(power(n, 5), budget, "vague strict monotonicity check");
  const auto& L = v.eq.labels;
  auto r = make_report("vague-strict-monotone", finite_info(n), budget);
  r.notes["operation"] = v.name;
  r.notes["reading"] = std::string(to_string(reading));
  std::uint64_t premises = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            ++r.instances;
            if (!premise_matches(v(x, z, a), v(y, z, b), reading)) continue;
            ++premises;
            if (!(a < b)) r.add_violation({{L[x], L[y], L[z], L[a], L[b]}, {v(x, z, a)}});
          }
        }
      }
    }
  }
  if (premises == 0) r.mark_vacuous("NO_PREMISE_INSTANCE");
  return r;
}

PropertyReport check_vague_cancellation(const VagueOperation& v, VagueReading reading, const SearchBudget& budget) {
  const std::size_t n = v.size();
  require_within_budget(power(n, 4), budget, "vague cancellation check");
  const auto& L = v.eq.labels;
  auto r = make_report("vague-cancellation", finite_info(n), budget);
  r.notes["operation"] = v.name;
  r.notes["reading"] = std::string(to_string(reading));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < n; ++c) {
          ++r.instances;
          if (premise_matches(v(a, x, c), v(b, x, c), reading)) {
            r.add_violation({{L[a], L[b], L[x], L[c]}, {v(a, x, c)}});
          }
        }
      }
    }
  }
  return r;
}

VagueOperation crisp_vague_operation(const Carrier<FiniteElement>& c) {
  const std::size_t n = c.elements.size();
  FuzzyEquality eq{"crisp", {}, tnorm(TNormFamily::kMinimum), {}};
  for (const auto& x : c.elements) eq.labels.push_back(c.datum(x));
  eq.degree.assign(n, std::vector<UnitScalar>(n, UnitScalar::zero()));
  for (std::size_t i = 0; i < n; ++i) eq.degree[i][i] = UnitScalar::one();
  VagueOperation op{"crisp(" + c.name + ")", std::move(eq), {}};
  op.mu.reserve(n * n * n);
  for (const auto& x : c.elements) {
    for (const auto& y : c.elements) {
      const FiniteElement p = c.op(x, y);
      for (const auto& z : c.elements) op.mu.push_back(p == z ? UnitScalar::one() : UnitScalar::zero());
    }
  }
  return op;
}

VagueGroup make_vague_group(VagueOperation op) {
  const std::size_t n = op.size();
  const UnitScalar one = UnitScalar::one();
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = same(op(e, a, a), one) && same(op(a, e, a), one);
    if (ok) identity = e;
  }
  if (!identity) throw DomainError(op.name + " has no element with identity degree 1");
  VagueGroup g{std::move(op), *identity, {}};
  for (std::size_t a = 0; a < n; ++a) {
    std::optional<std::size_t> inv;
    for (std::size_t b = 0; b < n && !inv; ++b) {
      if (same(g.op(b, a, g.identity), one) && same(g.op(a, b, g.identity), one)) inv = b;
    }
    if (!inv) {
      throw DomainError("element " + to_string(g.op.eq.labels[a]) + " of " + g.op.name +
                        " has no inverse of degree 1");
    }
    g.inverse.push_back(*inv);
  }
  return g;
}

PropertyReport check_vague_group_cancellation(const VagueGroup& g, const SearchBudget& budget) {
  const auto& v = g.op;
  const std::size_t n = v.size();
  require_within_budget(power(n, 4), budget, "vague group cancellation check");
  const auto info = finite_info(n);
  const auto& E = v.eq;
  const auto& L = E.labels;
  auto r = make_report("vague-group-cancellation", info, budget);
  r.notes["operation"] = v.name;
  auto left = make_report("left", info, budget);
  auto right = make_report("right", info, budget);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t u = 0; u < n; ++u) {
          ++left.instances;
          ++right.instances;
          UnitScalar l = min(v(a, b, u), v(a, c, u));
          if (!at_most(l, E(b, c))) left.add_violation({{L[a], L[b], L[c], L[u]}, {l, E(b, c)}});
          UnitScalar rr = min(v(b, a, u), v(c, a, u));
          if (!at_most(rr, E(b, c))) right.add_violation({{L[a], L[b], L[c], L[u]}, {rr, E(b, c)}});
        }
      }
    }
  }
  r.add_check(std::move(left));
  r.add_check(std::move(right));
  return r;
}

}  // namespace fuzznorm
