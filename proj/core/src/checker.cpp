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

#include "fuzznorm/checker.hpp"

#include <algorithm>

#include "fuzznorm/error.hpp"

namespace fuzznorm {

DomainInfo describe(const Domain& d) { return {d.kind(), d.resolution()}; }

namespace {

using Table = std::vector<std::vector<UnitScalar>>;

Table tabulate(const Connective& c, const std::vector<UnitScalar>& pts) {
  Table t(pts.size(), std::vector<UnitScalar>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) t[i][j] = c(pts[i], pts[j]);
  }
  return t;
}

PropertyReport range_check(const Table& t, const std::vector<UnitScalar>& pts, const Domain& d,
                           const SearchBudget& budget) {
  auto r = make_report("range", describe(d), budget);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      ++r.instances;
      if (!t[i][j].in_unit_interval()) r.add_violation({{pts[i], pts[j]}, {t[i][j]}});
    }
  }
  return r;
}

PropertyReport commutativity(std::string id, const Table& t, const std::vector<UnitScalar>& pts, const Domain& d,
                             const SearchBudget& budget) {
  auto r = make_report(std::move(id), describe(d), budget);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      ++r.instances;
      if (!same(t[i][j], t[j][i])) r.add_violation({{pts[i], pts[j]}, {t[i][j], t[j][i]}});
    }
  }
  return r;
}

PropertyReport associativity(std::string id, const Connective& c, const Table& t, const std::vector<UnitScalar>& pts,
                             const Domain& d, const SearchBudget& budget) {
  auto r = make_report(std::move(id), describe(d), budget);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      for (std::size_t k = 0; k < pts.size(); ++k) {
        ++r.instances;
        UnitScalar lhs = c(t[i][j], pts[k]);
        UnitScalar rhs = c(pts[i], t[j][k]);
        if (!same(lhs, rhs)) r.add_violation({{pts[i], pts[j], pts[k]}, {lhs, rhs}});
      }
    }
  }
  return r;
}

// Second argument: C(x,y) <= C(x,z) for y < z. With first_argument set the
// roles swap: C(y,x) <= C(z,x).
PropertyReport monotonicity(std::string id, const Table& t, const std::vector<UnitScalar>& pts, const Domain& d,
                            const SearchBudget& budget, bool first_argument) {
  auto r = make_report(std::move(id), describe(d), budget);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        ++r.instances;
        const UnitScalar& lo = first_argument ? t[j][i] : t[i][j];
        const UnitScalar& hi = first_argument ? t[k][i] : t[i][k];
        if (!at_most(lo, hi)) r.add_violation({{pts[i], pts[j], pts[k]}, {lo, hi}});
      }
    }
  }
  return r;
}

PropertyReport neutral_element(std::string id, const Connective& c, const UnitScalar& e,
                               const std::vector<UnitScalar>& pts, const Domain& d, const SearchBudget& budget) {
  auto r = make_report(std::move(id), describe(d), budget);
  r.notes["element"] = e.to_string();
  for (const auto& x : pts) {
    ++r.instances;
    UnitScalar right = c(x, e);
    UnitScalar left = c(e, x);
    if (!same(right, x) || !same(left, x)) r.add_violation({{x}, {right, left}});
  }
  return r;
}

PropertyReport absorbing_element(std::string id, const Connective& c, const UnitScalar& k,
                                 const std::vector<UnitScalar>& pts, const Domain& d, const SearchBudget& budget) {
  auto r = make_report(std::move(id), describe(d), budget);
  r.notes["absorber"] = k.to_string();
  const UnitScalar zero = UnitScalar::zero();
  const UnitScalar one = UnitScalar::one();
  for (const auto& x : pts) {
    ++r.instances;
    UnitScalar v = c(k, x);
    if (!same(v, k)) r.add_violation({{k, x}, {v}});
    if (x <= k) {
      UnitScalar v0 = c(zero, x);
      if (!same(v0, x)) r.add_violation({{zero, x}, {v0}});
    }
    if (k <= x) {
      UnitScalar v1 = c(one, x);
      if (!same(v1, x)) r.add_violation({{one, x}, {v1}});
    }
  }
  return r;
}

std::string axiom_prefix(Role role) {
  switch (role) {
    case Role::kTNorm: return "T";
    case Role::kTConorm: return "S";
    case Role::kUninorm: return "U";
    case Role::kNullnorm: return "F";
    case Role::kAggregation: return "A";
  }
  return "?";
}

void require_tnorm(const Connective& t, std::string_view what) {
  if (t.role() != Role::kTNorm) {
    throw DomainError(std::string(what) + " is defined for t-norms; '" + t.name() + "' has role " +
                      std::string(to_string(t.role())));
  }
}

}  // namespace

PropertyReport check_axioms(const Connective& c, const Domain& d, const SearchBudget& budget) {
  budget.validate();
  const auto& pts = d.points();
  const Table t = tabulate(c, pts);
  auto report = make_report("axioms", describe(d), budget);
  report.notes["connective"] = c.name();
  report.notes["role"] = std::string(to_string(c.role()));
  report.add_check(range_check(t, pts, d, budget));

  const std::string p = axiom_prefix(c.role());
  if (c.role() == Role::kAggregation) {
    report.add_check(monotonicity("A1-monotonicity", t, pts, d, budget, false));
    report.add_check(monotonicity("A1-monotonicity-first", t, pts, d, budget, true));
    auto bounds = make_report("A2-boundary", describe(d), budget);
    const UnitScalar zero = UnitScalar::zero();
    const UnitScalar one = UnitScalar::one();
    for (int arity = 2; arity <= budget.arity_cap; ++arity) {
      std::vector<UnitScalar> zeros(static_cast<std::size_t>(arity), zero);
      std::vector<UnitScalar> ones(static_cast<std::size_t>(arity), one);
      bounds.instances += 2;
      UnitScalar lo = c(zeros);
      UnitScalar hi = c(ones);
      if (!same(lo, zero)) bounds.add_violation({{std::int64_t{arity}, zero}, {lo}});
      if (!same(hi, one)) bounds.add_violation({{std::int64_t{arity}, one}, {hi}});
    }
    report.add_check(std::move(bounds));
    return report;
  }

  auto comm = commutativity(p + "1-commutativity", t, pts, d, budget);
  const bool commutative = comm.holds();
  report.add_check(std::move(comm));
  report.add_check(associativity(p + "2-associativity", c, t, pts, d, budget));
  report.add_check(monotonicity(p + "3-monotonicity", t, pts, d, budget, false));
  if (!commutative) report.add_check(monotonicity(p + "3-monotonicity-first", t, pts, d, budget, true));

  switch (c.role()) {
    case Role::kTNorm:
      report.add_check(neutral_element("T4-boundary", c, UnitScalar::one(), pts, d, budget));
      break;
    case Role::kTConorm:
      report.add_check(neutral_element("S4-boundary", c, UnitScalar::zero(), pts, d, budget));
      break;
    case Role::kUninorm:
      if (c.identity()) {
        report.add_check(neutral_element("U4-identity", c, *c.identity(), pts, d, budget));
      } else {
        auto r = make_report("U4-identity", describe(d), budget);
        r.mark_vacuous("NO_DECLARED_IDENTITY");
        report.add_check(std::move(r));
      }
      break;
    case Role::kNullnorm: {
      // An undeclared absorber is read off as F(0,1).
      UnitScalar k = c.absorber() ? *c.absorber() : c(UnitScalar::zero(), UnitScalar::one());
      report.add_check(absorbing_element("F4-absorbing", c, k, pts, d, budget));
      break;
    }
    case Role::kAggregation:
      break;
  }
  return report;
}

PropertyReport check_strict_monotonicity(const Connective& t, const Domain& d, const SearchBudget& budget) {
  require_tnorm(t, "strict monotonicity");
  budget.validate();
  const auto& pts = d.points();
  const Table tab = tabulate(t, pts);
  auto r = make_report("strict-monotone", describe(d), budget);
  r.notes["connective"] = t.name();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].is_zero()) continue;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        ++r.instances;
        if (below(tab[i][j], tab[i][k])) continue;
        if (indeterminate(tab[i][j], tab[i][k])) {
          r.mark_vacuous("FLOAT_INDETERMINATE");
        } else {
          r.add_violation({{pts[i], pts[j], pts[k]}, {tab[i][j], tab[i][k]}});
        }
      }
    }
  }
  return r;
}

PropertyReport check_cancellation(const Connective& t, const Domain& d, Cancellation kind,
                                  const SearchBudget& budget) {
  require_tnorm(t, "cancellation");
  budget.validate();
  const auto& pts = d.points();
  const Table tab = tabulate(t, pts);
  const bool conditional = kind == Cancellation::kConditional;
  auto r = make_report(conditional ? "conditional-cancellation" : "cancellation", describe(d), budget);
  r.notes["connective"] = t.name();
  const UnitScalar zero = UnitScalar::zero();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        ++r.instances;
        if (!same(tab[i][j], tab[i][k])) continue;
        if (conditional) {
          if (below(zero, tab[i][j])) r.add_violation({{pts[i], pts[j], pts[k]}, {tab[i][j], tab[i][k]}});
        } else if (!pts[i].is_zero()) {
          r.add_violation({{pts[i], pts[j], pts[k]}, {tab[i][j], tab[i][k]}});
        }
      }
    }
  }
  return r;
}

PropertyReport check_archimedean(const Connective& t, const Domain& d, const SearchBudget& budget) {
  require_tnorm(t, "the Archimedean property");
  budget.validate();
  auto r = make_report("archimedean", describe(d), budget);
  r.notes["connective"] = t.name();
  const auto interior = d.interior();
  for (const auto& x : interior) {
    // powers[n-1] = x^(n), computed once per x.
    std::vector<UnitScalar> powers{x};
    bool stationary = false;
    while (static_cast<std::int64_t>(powers.size()) < budget.n_max) {
      UnitScalar next = t(powers.back(), x);
      if (same(next, powers.back())) {
        stationary = true;
        break;
      }
      powers.push_back(std::move(next));
    }
    for (const auto& y : interior) {
      ++r.instances;
      auto hit = std::find_if(powers.begin(), powers.end(), [&](const UnitScalar& p) { return below(p, y); });
      if (hit != powers.end()) continue;
      if (stationary) {
        r.add_violation({{x, y}, {powers.back(), static_cast<std::int64_t>(powers.size())}});
      } else {
        r.mark_vacuous("N_MAX_EXHAUSTED");
      }
    }
  }
  return r;
}

std::string_view to_string(Trajectory::Outcome o) {
  switch (o) {
    case Trajectory::Outcome::kReachedZero: return "reached-zero";
    case Trajectory::Outcome::kBelowEpsilon: return "below-epsilon";
    case Trajectory::Outcome::kStationary: return "stationary";
    case Trajectory::Outcome::kExhausted: return "exhausted";
  }
  return "?";
}

Trajectory limit_trajectory(const Connective& t, const UnitScalar& x, const SearchBudget& budget) {
  UnitScalar p = x;
  for (std::int64_t n = 1;; ++n) {
    if (p.is_exact() ? p.is_zero() : p.to_double() == 0.0) return {Trajectory::Outcome::kReachedZero, n, p};
    bool small = p.is_exact() ? p < budget.epsilon : p.to_double() < budget.float_epsilon;
    if (small) return {Trajectory::Outcome::kBelowEpsilon, n, p};
    if (n >= budget.iter_cap) return {Trajectory::Outcome::kExhausted, n, p};
    UnitScalar next = t(p, x);
    if (same(next, p)) return {Trajectory::Outcome::kStationary, n, p};
    p = std::move(next);
  }
}

PropertyReport check_limit_property(const Connective& t, const Domain& d, const SearchBudget& budget) {
  require_tnorm(t, "the limit property");
  budget.validate();
  auto r = make_report("limit", describe(d), budget);
  r.notes["connective"] = t.name();
  for (const auto& x : d.interior()) {
    ++r.instances;
    Trajectory tr = limit_trajectory(t, x, budget);
    switch (tr.outcome) {
      case Trajectory::Outcome::kReachedZero:
      case Trajectory::Outcome::kBelowEpsilon:
        break;
      case Trajectory::Outcome::kStationary:
        r.add_violation({{x}, {tr.value, tr.steps}});
        break;
      case Trajectory::Outcome::kExhausted:
        r.mark_vacuous("ITER_CAP_EXHAUSTED");
        break;
    }
  }
  return r;
}

PropertyReport UninormClassification::to_report(const Domain& d) const {
  auto r = make_report("classify", describe(d), SearchBudget{});
  r.notes["connective"] = name;
  r.notes["identity"] = identity.to_string();
  r.notes["type"] = conjunctive ? "conjunctive" : (disjunctive ? "disjunctive" : "neither");
  r.notes["locally_internal_on_boundary"] = locally_internal ? "true" : "false";
  r.notes["idempotent_diagonal"] = idempotent_diagonal ? "true" : "false";
  r.notes["mixed_region"] = mixed_region;
  return r;
}

UninormClassification classify_uninorm(const Connective& u, const Domain& d) {
  if (!u.identity()) throw DomainError("classification needs a declared identity; '" + u.name() + "' has none");
  const UnitScalar zero = UnitScalar::zero();
  const UnitScalar one = UnitScalar::one();
  const UnitScalar& e = *u.identity();

  UninormClassification c;
  c.name = u.name();
  c.identity = e;
  const UnitScalar corner = u(one, zero);
  c.conjunctive = same(corner, zero);
  c.disjunctive = same(corner, one);

  const auto& pts = d.points();
  if (c.conjunctive || c.disjunctive) {
    const UnitScalar& edge = c.conjunctive ? one : zero;
    c.locally_internal = std::all_of(pts.begin(), pts.end(), [&](const UnitScalar& x) {
      UnitScalar v = u(edge, x);
      return same(v, edge) || same(v, x);
    });
  }
  c.idempotent_diagonal = std::all_of(pts.begin(), pts.end(), [&](const UnitScalar& x) { return same(u(x, x), x); });

  bool any = false;
  bool is_min = true;
  bool is_max = true;
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      // A(e) = [0,e) x (e,1] together with its mirror image.
      bool mixed = (x < e && e < y) || (y < e && e < x);
      if (!mixed) continue;
      any = true;
      UnitScalar v = u(x, y);
      if (!same(v, min(x, y))) is_min = false;
      if (!same(v, max(x, y))) is_max = false;
    }
  }
  c.mixed_region = !any ? "empty" : (is_min ? "min" : (is_max ? "max" : "other"));
  return c;
}

const std::vector<std::string>& known_property_ids() {
  static const std::vector<std::string> kIds{"axioms",      "strict-monotone", "cancellation", "conditional-cancellation",
                                             "archimedean", "limit",           "classify"};
  return kIds;
}

PropertyReport check_property(std::string_view id, const Connective& c, const Domain& d, const SearchBudget& budget) {
  if (id == "axioms") return check_axioms(c, d, budget);
  if (id == "strict-monotone") return check_strict_monotonicity(c, d, budget);
  if (id == "cancellation") return check_cancellation(c, d, Cancellation::kPlain, budget);
  if (id == "conditional-cancellation") return check_cancellation(c, d, Cancellation::kConditional, budget);
  if (id == "archimedean") return check_archimedean(c, d, budget);
  if (id == "limit") return check_limit_property(c, d, budget);
  if (id == "classify") return classify_uninorm(c, d).to_report(d);
  throw ConfigurationError("unknown property id '" + std::string(id) + "'");
}

}  // namespace fuzznorm
