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

#include "fuzznorm/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "fuzznorm/checker.hpp"
#include "fuzznorm/error.hpp"
#include "fuzznorm/fuzzy.hpp"
#include "fuzznorm/lattice.hpp"
#include "fuzznorm/vague.hpp"

namespace fuzznorm {

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kPass:
      return "PASS";
    case RowStatus::kFail:
      return "FAIL";
    case RowStatus::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

void SuiteRow::absorb(const ImplicationReport& r, std::size_t max_examples) {
  universe += (universe.empty() ? "" : "; ") + r.universe;
  universe_size += r.universe_size;
  premise_held += r.premise_held;
  counterexamples += r.counterexample_count;
  for (const auto& c : r.counterexamples) {
    if (max_examples == 0 || examples.size() < max_examples) examples.push_back(c);
  }
}

int SuiteResult::exit_code() const {
  bool skipped = false;
  for (const auto& row : rows) {
    if (row.status == RowStatus::kFail) return 1;
    skipped = skipped || row.status == RowStatus::kSkipped;
  }
  return skipped ? 2 : 0;
}

namespace {

using Subset = FuzzySubset<UnitScalar>;

struct Context {
  std::int64_t grid;
  SearchBudget budget;

  std::int64_t capped(std::int64_t cap) const { return std::min(grid, cap); }
};

using RowFn = std::function<void(const Context&, SuiteRow&)>;

PropertyReport verdict(bool ok, const std::string& id = "claim") {
  PropertyReport r = make_report(id, {"suite", 0}, SearchBudget{});
  if (!ok) r.add_violation({{id}, {}});
  return r;
}

PropertyReport always() { return verdict(true, "true"); }

UnitScalar q(long p, long d = 1) { return UnitScalar(p, d); }

std::vector<UnitScalar> half_alphabet() { return {q(0), q(1, 2), q(1)}; }

std::string grid_name(std::int64_t n) { return std::to_string(n + 1) + "-point grid"; }

Connective t_m() { return tnorm(TNormFamily::kMinimum); }
Connective t_p() { return tnorm(TNormFamily::kProduct); }
Connective t_l() { return tnorm(TNormFamily::kLukasiewicz); }
Connective t_d() { return tnorm(TNormFamily::kDrastic); }
Connective s_m() { return tconorm(TConormFamily::kMaximum); }
Connective s_p() { return tconorm(TConormFamily::kProbabilisticSum); }
Connective s_l() { return tconorm(TConormFamily::kLukasiewicz); }
Connective s_d() { return tconorm(TConormFamily::kDrastic); }

std::vector<Connective> builtin_tnorms() { return {t_m(), t_p(), t_l(), t_d()}; }

template <class Item, class P, class C, class L>
void sweep(SuiteRow& row, const Context& ctx, std::string premise, std::string conclusion, std::string universe,
           const std::vector<Item>& items, P p, C c, L l) {
  row.absorb(verify_implication(std::move(premise), std::move(conclusion), std::move(universe), items, p, c, l,
                                ctx.budget),
             ctx.budget.max_witnesses);
}

std::vector<FiniteLattice> small_lattices() {
  return {FiniteLattice::chain(2), FiniteLattice::chain(3), FiniteLattice::chain(4), FiniteLattice::diamond()};
}

/// ([0,1]-points of a chain, t-norm) for every t-norm on the 4-chain.
struct ChainUniverse {
  Domain domain;
  std::vector<Connective> tnorms;
  std::vector<Subset> subsets;
};

ChainUniverse four_chain(const SearchBudget& budget) {
  const auto l = FiniteLattice::chain(4);
  ChainUniverse u{Domain::grid(3), {}, {}};
  for (const auto& t : enumerate_lattice_tnorms(l)) u.tnorms.push_back(as_connective(t, l));
  u.subsets = enumerate_subsets(u.domain.points(), half_alphabet(), budget);
  return u;
}

using ChainItem = std::pair<std::size_t, std::size_t>;

std::vector<ChainItem> product_items(std::size_t a, std::size_t b) {
  std::vector<ChainItem> out;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) out.emplace_back(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Connective rows.

void row_axioms(const Context& ctx, SuiteRow& row) {
  const Domain d = Domain::grid(ctx.grid);
  std::vector<Connective> cs = builtin_tnorms();
  for (auto s : {s_m(), s_p(), s_l(), s_d()}) cs.push_back(s);
  for (auto a : {aggregation_min(), aggregation_max(), aggregation_mean()}) cs.push_back(a);
  sweep(row, ctx, "builtin", "axioms", "builtin t-norms, t-conorms and aggregations on the " + grid_name(ctx.grid), cs,
        [](const Connective&) { return always(); },
        [&](const Connective& c) { return check_axioms(c, d, ctx.budget); },
        [](const Connective& c) { return c.name(); });
}

void row_archimedean(const Context& ctx, SuiteRow& row) {
  const Domain d = Domain::grid(ctx.grid);
  struct Item {
    Connective t;
    std::string property;
    bool expected;
  };
  std::vector<Item> items;
  for (const auto& t : builtin_tnorms()) {
    const bool archimedean = t.name() != t_m().name();
    items.push_back({t, "archimedean", archimedean});
    items.push_back({t, "limit", archimedean});
  }
  const auto interior = d.interior().size();
  sweep(row, ctx, "builtin", "classification", "builtin t-norms on the " + grid_name(ctx.grid), items,
        [](const Item&) { return always(); },
        [&](const Item& it) {
          const auto r = check_property(it.property, it.t, d, ctx.budget);
          if (it.expected) return verdict(r.holds());
          // The minimum is stationary everywhere: every interior point is a witness.
          if (it.property == "limit") return verdict(r.fails() && r.violations == interior);
          return verdict(r.fails());
        },
        [](const Item& it) { return it.t.name() + " " + it.property; });
}

bool bounded_on_mixed_region(const Connective& u, const UnitScalar& e, const Domain& d) {
  for (const auto& x : d.points()) {
    for (const auto& y : d.points()) {
      if (!((x < e && e < y) || (y < e && e < x))) continue;
      const auto v = u(x, y);
      if (!at_most(min(x, y), v) || !at_most(v, max(x, y))) return false;
    }
  }
  return true;
}

void row_uninorm_structure(const Context& ctx, SuiteRow& row) {
  struct Item {
    Connective u;
    UnitScalar e;
    bool conjunctive;
  };
  std::vector<Item> items;
  for (const auto& e : {q(1, 4), q(1, 2), q(3, 4)}) {
    for (const auto& [t, s] : {std::pair{t_p(), s_p()}, std::pair{t_l(), s_l()}, std::pair{t_m(), s_m()}}) {
      items.push_back({construct_uninorm_min(e, t, s), e, true});
      items.push_back({construct_uninorm_max(e, t, s), e, false});
    }
  }
  sweep(row, ctx, "constructed", "uninorm axioms, min <= U <= max on A(e), classification",
        "constructed uninorms on the " + grid_name(ctx.grid) + " with e added", items,
        [](const Item&) { return always(); },
        [&](const Item& it) {
          const Domain d = Domain::grid(ctx.grid).with_points({it.e});
          const auto c = classify_uninorm(it.u, d);
          return verdict(check_axioms(it.u, d, ctx.budget).holds() && bounded_on_mixed_region(it.u, it.e, d) &&
                         (it.conjunctive ? c.conjunctive : c.disjunctive));
        },
        [](const Item& it) { return it.u.name(); });
}

void row_nullnorm_structure(const Context& ctx, SuiteRow& row) {
  std::vector<std::pair<Connective, UnitScalar>> items;
  for (const auto& k : {q(1, 4), q(1, 2), q(3, 4)}) {
    for (const auto& [s, t] : {std::pair{s_l(), t_l()}, std::pair{s_p(), t_p()}, std::pair{s_m(), t_m()}}) {
      items.emplace_back(construct_nullnorm(s, k, t), k);
    }
  }
  sweep(row, ctx, "constructed", "nullnorm axioms, F(0,x) = x below k, F(1,x) = x above k",
        "constructed nullnorms on the " + grid_name(ctx.grid) + " with k added", items,
        [](const auto&) { return always(); },
        [&](const std::pair<Connective, UnitScalar>& it) {
          const auto& [f, k] = it;
          const Domain d = Domain::grid(ctx.grid).with_points({k});
          bool ok = check_axioms(f, d, ctx.budget).holds();
          for (const auto& x : d.points()) {
            if (x <= k) ok = ok && same(f(q(0), x), x);
            if (k <= x) ok = ok && same(f(q(1), x), x);
          }
          return verdict(ok);
        },
        [](const auto& it) { return it.first.name(); });
}

void row_discrete(const Context& ctx, SuiteRow& row, const Connective& c, const std::string& what) {
  std::vector<std::pair<std::int64_t, std::int64_t>> items;
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t m = 1; m <= 3; ++m) items.emplace_back(n, m);
  }
  sweep(row, ctx, "L_{n,m}", "closed under " + what, "L_{n,m} with e = 1/2, 1 <= n,m <= 3", items,
        [](const auto&) { return always(); },
        [&](const std::pair<std::int64_t, std::int64_t>& nm) {
          return check_discrete_subalgebra(discrete_chain(q(1, 2), nm.first, nm.second), c, ctx.budget);
        },
        [](const auto& nm) { return "L_{" + std::to_string(nm.first) + "," + std::to_string(nm.second) + "}"; });
}

void row_discrete_uninorm(const Context& ctx, SuiteRow& row) {
  row_discrete(ctx, row, construct_uninorm_min(q(1, 2), t_l(), s_l()), "the Lukasiewicz uninorm");
}

void row_discrete_nullnorm(const Context& ctx, SuiteRow& row) {
  row_discrete(ctx, row, construct_nullnorm(s_l(), q(1, 2), t_l()), "the Lukasiewicz nullnorm");
}

// ---------------------------------------------------------------------------
// Fuzzy substructures.

void row_subnorm_examples(const Context& ctx, SuiteRow& row) {
  const Domain d = Domain::grid(ctx.grid).with_points({q(1, 2)});
  SearchBudget all = ctx.budget;
  all.max_witnesses = 0;
  struct Item {
    std::string label;
    std::function<PropertyReport()> check;
  };
  std::vector<Item> items;
  items.push_back({"identity subnorm of T_M",
                   [&] { return verdict(check_fuzzy_subnorm(subsets::identity(), t_m(), d, all).holds()); }});
  items.push_back({"identity fails for T_P at (1/2,1/2)", [&] {
                     const auto r = check_fuzzy_subnorm(subsets::identity(), t_p(), d, all);
                     return verdict(r.fails() && r.contains_witness({q(1, 2), q(1, 2)}));
                   }});
  for (const auto& t : builtin_tnorms()) {
    items.push_back({"one subnorm of " + t.name(),
                     [&, t] { return verdict(check_fuzzy_subnorm(subsets::one(), t, d, all).holds()); }});
    items.push_back({"zero subgroupoid of " + t.name(), [&, t] {
                       return check_fuzzy_subgroupoid(subsets::constant(q(0)), interval_carrier(t, d), all);
                     }});
  }
  sweep(row, ctx, "example", "stated verdict", "subnorm examples on the " + grid_name(ctx.grid), items,
        [](const Item&) { return always(); }, [](const Item& it) { return it.check(); },
        [](const Item& it) { return it.label; });
}

std::vector<Carrier<FiniteElement>> small_monoids() {
  std::vector<Carrier<FiniteElement>> out{cyclic_group(4), cyclic_group(6)};
  const auto l = FiniteLattice::chain(4);
  for (const auto& t : enumerate_lattice_tnorms(l)) {
    std::vector<std::vector<std::uint32_t>> table(l.size(), std::vector<std::uint32_t>(l.size()));
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = 0; j < l.size(); ++j) table[i][j] = static_cast<std::uint32_t>(t(i, j));
    }
    out.push_back(finite_carrier(t.name, l.labels(), table, l.label(l.top())));
  }
  return out;
}

using MaskItem = std::pair<std::size_t, std::uint32_t>;

std::vector<FiniteElement> members_of(std::uint32_t mask, std::size_t n) {
  std::vector<FiniteElement> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (mask & (1U << i)) out.push_back({i});
  }
  return out;
}

bool closed(const Carrier<FiniteElement>& c, std::uint32_t mask) {
  for (const auto& x : members_of(mask, c.elements.size())) {
    for (const auto& y : members_of(mask, c.elements.size())) {
      if (!(mask & (1U << c.op(x, y).index))) return false;
    }
  }
  return true;
}

std::string mask_label(const Carrier<FiniteElement>& c, std::uint32_t mask) {
  std::string out = c.name + " {";
  bool first = true;
  for (const auto& x : members_of(mask, c.elements.size())) {
    out += (first ? "" : ",") + to_string(c.datum(x));
    first = false;
  }
  return out + "}";
}

void row_subgroupoid_indicator(const Context& ctx, SuiteRow& row) {
  const auto carriers = small_monoids();
  std::vector<MaskItem> items;
  for (std::size_t c = 0; c < carriers.size(); ++c) {
    for (std::uint32_t m = 0; m < (1U << carriers[c].elements.size()); ++m) items.emplace_back(c, m);
  }
  sweep(row, ctx, "indicator", "fuzzy subgroupoid iff closed", "indicators of all subsets of Z_4, Z_6 and 4-chain t-norm monoids",
        items, [](const MaskItem&) { return always(); },
        [&](const MaskItem& it) {
          const auto& c = carriers[it.first];
          const auto mu = subsets::indicator_on(members_of(it.second, c.elements.size()));
          return verdict(check_fuzzy_subgroupoid(mu, c, ctx.budget).holds() == closed(c, it.second));
        },
        [&](const MaskItem& it) { return mask_label(carriers[it.first], it.second); });
}

void row_subgroup_indicator(const Context& ctx, SuiteRow& row) {
  const std::vector<Carrier<FiniteElement>> groups{cyclic_group(4), cyclic_group(6)};
  std::vector<MaskItem> items;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    for (std::uint32_t m = 1; m < (1U << groups[c].elements.size()); ++m) items.emplace_back(c, m);
  }
  sweep(row, ctx, "indicator", "fuzzy subgroup iff subgroup", "indicators of non-empty subsets of Z_4 and Z_6", items,
        [](const MaskItem&) { return always(); },
        [&](const MaskItem& it) {
          const auto& g = groups[it.first];
          bool subgroup = closed(g, it.second);
          for (const auto& x : members_of(it.second, g.elements.size())) {
            subgroup = subgroup && (it.second & (1U << g.inverse(x).index));
          }
          const auto mu = subsets::indicator_on(members_of(it.second, g.elements.size()));
          return verdict(check_fuzzy_subgroup(mu, g, ctx.budget).holds() == subgroup);
        },
        [&](const MaskItem& it) { return mask_label(groups[it.first], it.second); });
}

void row_intersection(const Context& ctx, SuiteRow& row) {
  const auto g = cyclic_group(4);
  std::vector<FuzzySubset<FiniteElement>> tables;
  std::vector<bool> good;
  const auto alpha = half_alphabet();
  for (std::size_t code = 0; code < 81; ++code) {
    std::vector<UnitScalar> values;
    std::string name = "[";
    for (std::size_t i = 0, c = code; i < 4; ++i, c /= 3) {
      values.push_back(alpha[c % 3]);
      name += (i ? "," : "") + alpha[c % 3].to_string();
    }
    tables.push_back(subsets::table_on(name + "]", values));
    good.push_back(check_fuzzy_subgroupoid(tables.back(), g, ctx.budget).holds());
  }
  const auto items = product_items(tables.size(), tables.size());
  sweep(row, ctx, "both subgroupoids", "intersection subgroupoid", "pairs of {0,1/2,1}-tables on Z_4", items,
        [&](const ChainItem& it) { return verdict(good[it.first] && good[it.second]); },
        [&](const ChainItem& it) {
          return check_fuzzy_subgroupoid(intersect<FiniteElement>({tables[it.first], tables[it.second]}), g,
                                         ctx.budget);
        },
        [&](const ChainItem& it) { return tables[it.first].name() + " & " + tables[it.second].name(); });
}

void row_chain_implication(const Context& ctx, SuiteRow& row, FuzzyProperty premise, FuzzyProperty conclusion) {
  const auto u = four_chain(ctx.budget);
  const auto items = product_items(u.tnorms.size(), u.subsets.size());
  sweep(row, ctx, std::string(to_string(premise)), std::string(to_string(conclusion)),
        "{0,1/2,1}-tables on the 4-chain x its t-norms", items,
        [&](const ChainItem& it) {
          return check_fuzzy_property(u.subsets[it.second], u.tnorms[it.first], premise, u.domain, ctx.budget);
        },
        [&](const ChainItem& it) {
          return check_fuzzy_property(u.subsets[it.second], u.tnorms[it.first], conclusion, u.domain, ctx.budget);
        },
        [&](const ChainItem& it) { return u.tnorms[it.first].name() + " / " + u.subsets[it.second].name(); });
}

void row_prop36(const Context& ctx, SuiteRow& row) {
  row_chain_implication(ctx, row, FuzzyProperty::kStrict, FuzzyProperty::kCancel);
}

void row_prop37(const Context& ctx, SuiteRow& row) {
  row_chain_implication(ctx, row, FuzzyProperty::kCancel, FuzzyProperty::kConditionalCancel);
}

std::vector<Subset> builtin_subsets() {
  return {subsets::identity(), subsets::one(), subsets::constant(q(0)), subsets::complement(), subsets::step(q(1, 2))};
}

bool closed_on(const Connective& t, const Domain& d);

void row_not_strictly_decreasing(const Context& ctx, SuiteRow& row) {
  const Domain coarse = Domain::grid(3);
  const Domain fine = Domain::grid(ctx.grid).with_points({q(1, 2)});
  auto tables = enumerate_subsets(coarse.points(), {q(0), q(1, 3), q(2, 3), q(1)}, ctx.budget);
  const auto ts = builtin_tnorms();
  struct Item {
    std::size_t t;
    const Subset* mu;
    const Domain* d;
  };
  const auto builtins = builtin_subsets();
  std::vector<Item> items;
  for (std::size_t t = 0; t < ts.size(); ++t) {
    // Tables are only defined on the coarse grid, so T must stay on it.
    if (closed_on(ts[t], coarse)) {
      for (const auto& mu : tables) items.push_back({t, &mu, &coarse});
    }
    for (const auto& mu : builtins) items.push_back({t, &mu, &fine});
  }
  sweep(row, ctx, "true", "not-strictly-decreasing", "grid-closed builtin t-norms x {0,1/3,2/3,1}-tables on the 4-point grid and builtin subsets", items,
        [](const Item&) { return always(); },
        [&](const Item& it) { return check_not_strictly_decreasing(*it.mu, ts[it.t], *it.d, ctx.budget); },
        [&](const Item& it) { return ts[it.t].name() + " / " + it.mu->name(); });
}

void row_non_strict(const Context& ctx, SuiteRow& row) {
  const auto u = four_chain(ctx.budget);
  std::vector<bool> strict;
  for (const auto& t : u.tnorms) strict.push_back(check_strict_monotonicity(t, u.domain, ctx.budget).holds());
  const auto items = product_items(u.tnorms.size(), u.subsets.size());
  sweep(row, ctx, "T not strictly monotone", "FSTRICT fails", "{0,1/2,1}-tables on the 4-chain x its t-norms", items,
        [&](const ChainItem& it) { return verdict(!strict[it.first]); },
        [&](const ChainItem& it) {
          return verdict(check_fuzzy_property(u.subsets[it.second], u.tnorms[it.first], FuzzyProperty::kStrict,
                                              u.domain, ctx.budget)
                             .fails());
        },
        [&](const ChainItem& it) { return u.tnorms[it.first].name() + " / " + u.subsets[it.second].name(); });

  const Domain d = Domain::grid(ctx.grid);
  const auto builtins = builtin_subsets();
  const std::vector<Connective> ts{t_m(), t_l(), t_d()};
  const auto more = product_items(ts.size(), builtins.size());
  sweep(row, ctx, "T not strictly monotone", "FSTRICT fails", "T_M, T_L, T_D x builtin subsets on the " + grid_name(ctx.grid),
        more, [&](const ChainItem& it) { return verdict(!check_strict_monotonicity(ts[it.first], d, ctx.budget).holds()); },
        [&](const ChainItem& it) {
          return verdict(
              check_fuzzy_property(builtins[it.second], ts[it.first], FuzzyProperty::kStrict, d, ctx.budget).fails());
        },
        [&](const ChainItem& it) { return ts[it.first].name() + " / " + builtins[it.second].name(); });
}

struct CoreCase {
  Connective carrier;
  std::optional<Connective> combiner;
  Substructure kind;
};

void row_cores(const Context& ctx, SuiteRow& row, Substructure kind, const std::vector<Connective>& combiners) {
  const Domain d = Domain::grid(ctx.capped(4));
  const auto tables = enumerate_subsets(d.points(), half_alphabet(), ctx.budget);
  std::vector<Connective> carriers{t_m(), s_m(), t_l(), s_l()};
  struct Item {
    std::size_t carrier;
    std::size_t combiner;
    std::size_t mu;
  };
  std::vector<Item> items;
  for (std::size_t c = 0; c < carriers.size(); ++c) {
    for (std::size_t k = 0; k < combiners.size(); ++k) {
      for (std::size_t m = 0; m < tables.size(); ++m) items.push_back({c, k, m});
    }
  }
  std::vector<Carrier<UnitScalar>> monoids;
  for (const auto& c : carriers) monoids.push_back(interval_carrier(c, d));
  sweep(row, ctx, std::string(to_string(kind)), "core is a submonoid",
        "{0,1/2,1}-tables on the " + grid_name(ctx.capped(4)) + " over T_M, S_M, T_L, S_L", items,
        [&](const Item& it) {
          return check_fuzzy_submonoid(tables[it.mu], monoids[it.carrier], SubstructureKind(kind, combiners[it.combiner]),
                                       ctx.budget);
        },
        [&](const Item& it) { return extract_core(tables[it.mu], monoids[it.carrier], ctx.budget).report; },
        [&](const Item& it) {
          return carriers[it.carrier].name() + " / " + combiners[it.combiner].name() + " / " + tables[it.mu].name();
        });
}

void row_prop16(const Context& ctx, SuiteRow& row) {
  row_cores(ctx, row, Substructure::kASubmonoid, {aggregation_min(), aggregation_max(), aggregation_mean(), t_l()});
}

void row_prop19(const Context& ctx, SuiteRow& row) {
  row_cores(ctx, row, Substructure::kUSubmonoid,
            {construct_uninorm_min(q(1, 2), t_l(), s_l()), construct_uninorm_max(q(1, 2), t_p(), s_p()), t_m()});
}

void row_prop23(const Context& ctx, SuiteRow& row) {
  row_cores(ctx, row, Substructure::kFSubmonoid,
            {construct_nullnorm(s_l(), q(1, 2), t_l()), construct_nullnorm(s_m(), q(1, 2), t_m())});
}

/// characterize_special_cases over every {0,1/2,1}-table on the listed grids.
void row_characterize(const Context& ctx, SuiteRow& row, const std::string& case_id,
                      const std::vector<Connective>& connectives, const std::vector<std::int64_t>& grids) {
  for (const auto n : grids) {
    const Domain d = Domain::grid(n);
    const auto tables = enumerate_subsets(d.points(), half_alphabet(), ctx.budget);
    const auto items = product_items(connectives.size(), tables.size());
    sweep(row, ctx, "true", "characterize:" + case_id,
          "{0,1/2,1}-tables on the " + grid_name(n) + " x " + std::to_string(connectives.size()) + " connectives",
          items, [](const ChainItem&) { return always(); },
          [&](const ChainItem& it) {
            return characterize_special_cases(case_id, tables[it.second], connectives[it.first], d, std::nullopt,
                                              ctx.budget);
          },
          [&](const ChainItem& it) { return connectives[it.first].name() + " / " + tables[it.second].name(); });
  }
}

std::vector<std::int64_t> characterization_grids(const Context& ctx) {
  std::vector<std::int64_t> out{2};
  if (ctx.capped(4) > 2) out.push_back(ctx.capped(4));
  return out;
}

void row_prop17(const Context& ctx, SuiteRow& row) {
  row_characterize(ctx, row, "prop17", {t_m()}, characterization_grids(ctx));
}

void row_prop18(const Context& ctx, SuiteRow& row) {
  row_characterize(ctx, row, "prop18", {s_m()}, characterization_grids(ctx));
}

void row_disjunctive(const Context& ctx, SuiteRow& row) {
  // The carrier is ([0,1],U) itself, so only grids closed under U qualify.
  row_characterize(ctx, row, "disjunctive",
                   {construct_uninorm_max(q(1, 2), t_p(), s_p()), construct_uninorm_max(q(1, 2), t_l(), s_l()),
                    construct_uninorm_max(q(1, 2), t_m(), s_m())},
                   {2});
}

void row_prop20(const Context& ctx, SuiteRow& row) {
  std::vector<Connective> us;
  for (const auto& e : {q(1, 4), q(1, 2), q(3, 4)}) {
    for (const auto& t : {t_m(), t_p(), t_l()}) us.push_back(construct_uninorm_min(e, t, s_m()));
  }
  row_characterize(ctx, row, "prop20", us, characterization_grids(ctx));
}

void row_prop24(const Context& ctx, SuiteRow& row) {
  std::vector<Connective> fs;
  for (const auto& k : {q(1, 4), q(1, 2), q(3, 4)}) {
    for (const auto& [s, t] : {std::pair{s_l(), t_l()}, std::pair{s_p(), t_p()}, std::pair{s_m(), t_m()}}) {
      fs.push_back(construct_nullnorm(s, k, t));
    }
  }
  row_characterize(ctx, row, "prop24", fs, characterization_grids(ctx));
}

std::vector<Connective> minimum_nullnorms() {
  std::vector<Connective> fs;
  for (const auto& k : {q(1, 4), q(1, 2), q(3, 4)}) fs.push_back(construct_nullnorm(s_m(), k, t_m()));
  return fs;
}

void row_prop25(const Context& ctx, SuiteRow& row) {
  row_characterize(ctx, row, "prop25", minimum_nullnorms(), characterization_grids(ctx));
}

void row_prop25_conorm(const Context& ctx, SuiteRow& row) {
  row_characterize(ctx, row, "prop25-conorm", minimum_nullnorms(), characterization_grids(ctx));
}

void row_refutation(const Context& ctx, SuiteRow& row, const Subset& mu, const std::vector<Connective>& carriers) {
  const auto family = uninorm_family({q(1, 4), q(1, 2), q(3, 4)}, {t_p(), t_l()}, {s_p(), s_l()});
  const Domain d = Domain::grid(ctx.capped(10));
  for (const auto& carrier : carriers) {
    const auto r = refute_uninorm_existence(mu, carrier, family, d, ctx.budget);
    sweep(row, ctx, "family member", "refuted with the distinguished pair",
          mu.name() + " over " + carrier.name() + " (" + std::to_string(family.size()) + " uninorms)", r.members,
          [](const RefutationMember&) { return always(); },
          [](const RefutationMember& m) { return verdict(m.refuted() && m.contradiction.has_value()); },
          [](const RefutationMember& m) { return m.uninorm; });
  }
}

void row_prop21(const Context& ctx, SuiteRow& row) {
  row_refutation(ctx, row, subsets::identity(), {t_p(), t_l(), t_m()});
}

void row_prop22(const Context& ctx, SuiteRow& row) {
  row_refutation(ctx, row, subsets::complement(), {s_p(), s_l(), s_m()});
}

// ---------------------------------------------------------------------------
// Vague rows.

struct VagueCase {
  std::string label;
  VagueTNorm v;
  bool closed;
  bool compatible;
};

bool closed_on(const Connective& t, const Domain& d) {
  for (const auto& x : d.points()) {
    for (const auto& y : d.points()) {
      if (!d.contains(t(x, y))) return false;
    }
  }
  return true;
}

/// E(x,x') * E(y,y') <= E(T(x,y), T(x',y')) on a domain closed under T.
bool compatible_with(const VagueTNorm& v, const Domain& d) {
  const auto& eq = v.op.eq;
  const auto& pts = d.points();
  const auto index = [&](const UnitScalar& x) {
    return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
  };
  for (std::size_t x = 0; x < pts.size(); ++x) {
    for (std::size_t y = 0; y < pts.size(); ++y) {
      const auto xy = index(v.underlying(pts[x], pts[y]));
      for (std::size_t x2 = 0; x2 < pts.size(); ++x2) {
        for (std::size_t y2 = 0; y2 < pts.size(); ++y2) {
          const auto rhs = eq(xy, index(v.underlying(pts[x2], pts[y2])));
          if (!at_most(eq.t(eq(x, x2), eq(y, y2)), rhs)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<Domain> vague_domains(std::int64_t n) {
  const Domain g = Domain::grid(n);
  std::vector<UnitScalar> positive(g.points().begin() + 1, g.points().end());
  return {g, Domain::from_points(positive), Domain::from_points({q(1, 3), q(2, 3), q(1)}),
          Domain::from_points({q(1, 2), q(1)})};
}

/// Every valid (equality, t-norm, domain) combination.
std::vector<VagueCase> vague_corpus(const Context& ctx, std::int64_t n) {
  std::vector<VagueCase> out;
  for (const auto& d : vague_domains(n)) {
    for (const auto& eq : {"crisp", "lukasiewicz", "goedel", "product"}) {
      for (const auto& t : builtin_tnorms()) {
        try {
          auto v = induce_vague_tnorm(eq, equalities::by_name(eq), t, d, ctx.budget);
          std::ostringstream label;
          label << v.op.name << " on {";
          for (std::size_t i = 0; i < d.size(); ++i) label << (i ? "," : "") << d.points()[i].to_string();
          label << "}";
          const bool closed = closed_on(t, d);
          const bool compatible = closed && compatible_with(v, d);
          out.push_back({label.str(), std::move(v), closed, compatible});
        } catch (const DomainError&) {
          // Not a T-equality on this domain: outside the corpus.
        }
      }
    }
  }
  return out;
}

void row_prop12(const Context& ctx, SuiteRow& row) {
  const auto corpus = vague_corpus(ctx, ctx.capped(6));
  for (const auto reading : {VagueReading::kLiteral, VagueReading::kCrisp}) {
    sweep(row, ctx, "vague-strict-monotone", "vague-cancellation",
          "induced vague t-norms (" + std::string(to_string(reading)) + " reading)", corpus,
          [&](const VagueCase& c) { return check_vague_strict_monotone(c.v.op, reading, ctx.budget); },
          [&](const VagueCase& c) { return check_vague_cancellation(c.v.op, reading, ctx.budget); },
          [](const VagueCase& c) { return c.label; });
  }
}

void row_vague_commutativity(const Context& ctx, SuiteRow& row) {
  const auto corpus = vague_corpus(ctx, ctx.capped(6));
  sweep(row, ctx, "induced", "vague-commutativity", "induced vague t-norms", corpus,
        [](const VagueCase&) { return always(); },
        [&](const VagueCase& c) { return check_vague_commutativity(c.v.op, ctx.budget); },
        [](const VagueCase& c) { return c.label; });
}

void row_vague_operation(const Context& ctx, SuiteRow& row) {
  const auto corpus = vague_corpus(ctx, ctx.capped(6));
  sweep(row, ctx, "T closed on the domain and E-compatible", "vague-operation", "induced vague t-norms", corpus,
        [](const VagueCase& c) { return verdict(c.compatible); },
        [&](const VagueCase& c) { return check_vague_operation(c.v.op, ctx.budget); },
        [](const VagueCase& c) { return c.label; });
}

void row_vague_degeneration(const Context& ctx, SuiteRow& row) {
  const auto corpus = vague_corpus(ctx, ctx.capped(4));
  std::vector<const VagueCase*> crisp;
  for (const auto& c : corpus) {
    if (c.v.op.eq.name == "crisp") crisp.push_back(&c);
  }
  sweep(row, ctx, "crisp equality", "vague verdicts equal classical ones", "crisp induced vague t-norms", crisp,
        [](const VagueCase*) { return always(); },
        [&](const VagueCase* c) {
          std::vector<UnitScalar> pts;
          for (const auto& l : c->v.op.eq.labels) pts.push_back(std::get<UnitScalar>(l));
          const Domain d = Domain::from_points(pts);
          const auto& t = c->v.underlying;
          const auto axioms = check_axioms(t, d, ctx.budget);
          const auto* assoc = axioms.find_check("T2-associativity");
          const auto* comm = axioms.find_check("T1-commutativity");
          const bool has_identity = d.contains(q(1));
          bool ok = check_vague_operation(c->v.op, ctx.budget).holds() == c->closed;
          ok = ok && check_vague_monoid(c->v.op, ctx.budget).holds() == (c->closed && assoc->holds() && has_identity);
          ok = ok && check_vague_commutativity(c->v.op, ctx.budget).holds() == comm->holds();
          if (c->closed && !d.contains(q(0))) {
            ok = ok && check_vague_strict_monotone(c->v.op, VagueReading::kCrisp, ctx.budget).fails() ==
                           check_strict_monotonicity(t, d, ctx.budget).fails();
            ok = ok && check_vague_cancellation(c->v.op, VagueReading::kCrisp, ctx.budget).fails() ==
                           check_cancellation(t, d, Cancellation::kPlain, ctx.budget).fails();
          }
          return verdict(ok);
        },
        [](const VagueCase* c) { return c->label; });
}

Carrier<FiniteElement> klein_group() {
  return with_inverses(finite_carrier("V_4", {"e", "a", "b", "c"}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, "e"));
}

void row_vague_group(const Context& ctx, SuiteRow& row) {
  std::vector<Carrier<FiniteElement>> groups;
  for (std::uint32_t n = 2; n <= 6; ++n) groups.push_back(cyclic_group(n));
  groups.push_back(klein_group());
  sweep(row, ctx, "crisp vague group", "vague-group-cancellation", "Z_2 to Z_6 and V_4", groups,
        [](const auto&) { return always(); },
        [&](const Carrier<FiniteElement>& g) {
          return check_vague_group_cancellation(make_vague_group(crisp_vague_operation(g)), ctx.budget);
        },
        [](const Carrier<FiniteElement>& g) { return g.name; });
}

// ---------------------------------------------------------------------------
// Lattice rows.

struct LatticeItem {
  const FiniteLattice* l;
  const LatticeTNorm* t;
  LSubset mu;
};

void row_lattice_implication(const Context& ctx, SuiteRow& row, FuzzyProperty premise, FuzzyProperty conclusion) {
  const auto lattices = small_lattices();
  std::vector<std::vector<LatticeTNorm>> tnorms;
  for (const auto& l : lattices) tnorms.push_back(enumerate_lattice_tnorms(l));
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    const auto& l = lattices[i];
    const auto subsets = enumerate_lsubsets(l, ctx.budget);
    std::vector<LatticeItem> items;
    for (const auto& t : tnorms[i]) {
      for (const auto& mu : subsets) items.push_back({&l, &t, mu});
    }
    sweep(row, ctx, std::string(to_string(premise)), std::string(to_string(conclusion)),
          "L-subsets of " + l.name() + " x its " + std::to_string(tnorms[i].size()) + " t-norms", items,
          [&](const LatticeItem& it) { return check_lattice_fuzzy_property(it.mu, *it.t, *it.l, premise, ctx.budget); },
          [&](const LatticeItem& it) {
            return check_lattice_fuzzy_property(it.mu, *it.t, *it.l, conclusion, ctx.budget);
          },
          [](const LatticeItem& it) { return it.t->name + " / " + describe(it.mu, *it.l); });
  }
}

void row_prop13(const Context& ctx, SuiteRow& row) {
  row_lattice_implication(ctx, row, FuzzyProperty::kStrict, FuzzyProperty::kCancel);
}

void row_prop14(const Context& ctx, SuiteRow& row) {
  row_lattice_implication(ctx, row, FuzzyProperty::kCancel, FuzzyProperty::kConditionalCancel);
}

void row_prop15(const Context& ctx, SuiteRow& row) {
  const auto l = FiniteLattice::chain(3);
  const auto tnorms = enumerate_lattice_tnorms(l);
  std::vector<LatticeVagueTNorm> corpus;
  for (const auto& t : tnorms) {
    for (const auto& e : enumerate_lattice_equalities(l, ctx.budget)) {
      if (validate_lattice_equality(e, t, l, ctx.budget).holds()) {
        corpus.push_back(induce_lattice_vague_tnorm(e, t, l, ctx.budget));
      }
    }
  }
  for (const auto reading : {VagueReading::kLiteral, VagueReading::kCrisp}) {
    sweep(row, ctx, "lattice-vague-strict-monotone", "lattice-vague-cancellation",
          "valid equalities x t-norms on the 3-chain (" + std::string(to_string(reading)) + " reading)", corpus,
          [&](const LatticeVagueTNorm& v) { return check_lattice_vague_strict_monotone(v, l, reading, ctx.budget); },
          [&](const LatticeVagueTNorm& v) { return check_lattice_vague_cancellation(v, l, reading, ctx.budget); },
          [](const LatticeVagueTNorm& v) { return v.name; });
  }
}

void row_lattice_crisp_vague(const Context& ctx, SuiteRow& row) {
  for (const auto& l : small_lattices()) {
    const auto tnorms = enumerate_lattice_tnorms(l);
    const auto e = crisp_lattice_equality(l);
    sweep(row, ctx, "crisp equality", "lattice-vague", "t-norms on " + l.name(), tnorms,
          [](const LatticeTNorm&) { return always(); },
          [&](const LatticeTNorm& t) {
            return check_lattice_vague_structures(induce_lattice_vague_tnorm(e, t, l, ctx.budget), l, ctx.budget);
          },
          [](const LatticeTNorm& t) { return t.name; });
  }
}

void row_lattice_restriction(const Context& ctx, SuiteRow& row) {
  std::vector<FiniteLattice> lattices = small_lattices();
  lattices.push_back(FiniteLattice::chain(5));
  for (const auto& l : lattices) {
    const auto tnorms = enumerate_lattice_tnorms(l);
    std::vector<std::pair<const LatticeTNorm*, std::size_t>> items;
    for (const auto& t : tnorms) {
      for (std::size_t a = 0; a < l.size(); ++a) items.emplace_back(&t, a);
    }
    sweep(row, ctx, "restriction to [a,1] closed", "lattice-tnorm on [a,1]", "t-norms of " + l.name() + " x intervals [a,1]",
          items,
          [&](const auto& it) {
            return verdict(restrict_tnorm(*it.first, LatticeInterval::of(l, it.second, l.top())).has_value());
          },
          [&](const auto& it) {
            const auto interval = LatticeInterval::of(l, it.second, l.top());
            return check_lattice_tnorm(*restrict_tnorm(*it.first, interval), interval.lattice, ctx.budget);
          },
          [&](const auto& it) { return it.first->name + " on [" + l.label(it.second) + ", 1]"; });
  }
}

struct RowDef {
  const char* id;
  const char* claim;
  RowFn fn;
};

const std::vector<RowDef>& rows() {
  static const std::vector<RowDef> kRows{
      {"axioms", "builtin connectives satisfy their axioms", row_axioms},
      {"archimedean-classification", "T_L, T_P, T_D Archimedean with the limit property; T_M neither",
       row_archimedean},
      {"uninorm-structure", "constructed uninorms are uninorms bounded by min and max on A(e)", row_uninorm_structure},
      {"nullnorm-structure", "constructed nullnorms are nullnorms", row_nullnorm_structure},
      {"subnorm-examples", "identity is the subnorm of T_M but not T_P; 1 is a subnorm of every t-norm",
       row_subnorm_examples},
      {"subgroupoid-indicator", "an indicator is a fuzzy subgroupoid iff its set is closed", row_subgroupoid_indicator},
      {"subgroup-indicator", "an indicator is a fuzzy subgroup iff its set is a subgroup", row_subgroup_indicator},
      {"subgroupoid-intersection", "intersections of fuzzy subgroupoids are fuzzy subgroupoids", row_intersection},
      {"prop3.6", "FSTRICT implies FCANCEL", row_prop36},
      {"prop3.7", "FCANCEL implies FCONDCANCEL", row_prop37},
      {"not-strictly-decreasing", "subnorms of strictly monotone t-norms are not strictly decreasing",
       row_not_strictly_decreasing},
      {"non-strict-t", "no subnorm of a non-strict t-norm satisfies FSTRICT", row_non_strict},
      {"vague-operation", "induced vague t-norms are vague operations", row_vague_operation},
      {"vague-commutativity", "induced vague t-norms are vague commutative", row_vague_commutativity},
      {"vague-degeneration", "with crisp equality vague verdicts equal classical verdicts", row_vague_degeneration},
      {"vague-group-cancellation", "vague groups are cancellative", row_vague_group},
      {"prop12", "vague strict monotonicity implies vague cancellation", row_prop12},
      {"prop13", "lattice FSTRICT implies FCANCEL", row_prop13},
      {"prop14", "lattice FCANCEL implies FCONDCANCEL", row_prop14},
      {"prop15", "lattice vague strict monotonicity implies vague cancellation", row_prop15},
      {"lattice-vague-crisp", "crisp lattice equalities induce vague monoids", row_lattice_crisp_vague},
      {"lattice-restriction", "closed restrictions of lattice t-norms are t-norms", row_lattice_restriction},
      {"prop16", "cores of A-fuzzy submonoids are submonoids", row_prop16},
      {"prop17", "A_min-submonoid of T_M iff mu(1) = 1", row_prop17},
      {"prop18", "A_min-submonoid of S_M iff mu(0) = 1", row_prop18},
      {"prop19", "cores of U-fuzzy submonoids are submonoids", row_prop19},
      {"prop20", "U-submonoid iff non-increasing on B and mu(1) = 1", row_prop20},
      {"prop21", "mu(x) = x is a U-fuzzy t-subnorm for no uninorm", row_prop21},
      {"prop22", "mu(x) = 1 - x is a U-fuzzy t-subconorm for no uninorm", row_prop22},
      {"disjunctive-theorem", "U-submonoid of a disjunctive U iff mu = 1", row_disjunctive},
      {"prop23", "cores of F-fuzzy submonoids are submonoids", row_prop23},
      {"prop24", "F-submonoids satisfy mu >= k", row_prop24},
      {"prop25", "F_M-submonoid of T_M iff mu(1) = 1 and mu >= k", row_prop25},
      {"prop25-conorm", "F_M-submonoid of S_M iff mu(0) = 1 and mu >= k", row_prop25_conorm},
      {"discrete-uninorm", "L_{n,m} is closed under the Lukasiewicz uninorm", row_discrete_uninorm},
      {"discrete-nullnorm", "L_{n,m} is closed under the Lukasiewicz nullnorm", row_discrete_nullnorm},
  };
  return kRows;
}

SuiteRow run_row(const RowDef& def, const Context& ctx) {
  SuiteRow row;
  row.id = def.id;
  row.claim = def.claim;
  const auto start = std::chrono::steady_clock::now();
  try {
    def.fn(ctx, row);
    row.status = row.counterexamples == 0 ? RowStatus::kPass : RowStatus::kFail;
  } catch (const BudgetError& e) {
    row.status = RowStatus::kSkipped;
    row.detail = e.what();
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

const std::vector<SuiteRowInfo>& suite_catalog() {
  static const std::vector<SuiteRowInfo> kCatalog = [] {
    std::vector<SuiteRowInfo> out;
    for (const auto& r : rows()) out.push_back({r.id, r.claim});
    return out;
  }();
  return kCatalog;
}

SuiteResult run_suite(const SuiteConfig& config) {
  if (config.grid < 2) throw ConfigurationError("grid resolution must be at least 2");
  config.budget.validate();
  std::vector<const RowDef*> selected;
  for (const auto& id : config.only) {
    auto it = std::find_if(rows().begin(), rows().end(), [&](const RowDef& r) { return id == r.id; });
    if (it == rows().end()) throw ConfigurationError("unknown suite row '" + id + "'");
  }
  for (const auto& r : rows()) {
    if (config.only.empty() || std::find(config.only.begin(), config.only.end(), r.id) != config.only.end()) {
      selected.push_back(&r);
    }
  }
  const Context ctx{config.grid, config.budget};
  SuiteResult result;
  result.grid = config.grid;
  result.rows.resize(selected.size());
  const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(selected.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) result.rows[i] = run_row(*selected[i], ctx);
    return result;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < selected.size(); i = next++) result.rows[i] = run_row(*selected[i], ctx);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

nlohmann::ordered_json to_json(const SuiteResult& result, bool timings) {
  nlohmann::ordered_json j;
  j["grid"] = result.grid;
  j["rows"] = nlohmann::ordered_json::array();
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& row : result.rows) {
    nlohmann::ordered_json r;
    r["id"] = row.id;
    r["claim"] = row.claim;
    r["status"] = std::string(to_string(row.status));
    r["universe"] = row.universe;
    r["universe_size"] = row.universe_size;
    r["premise_held"] = row.premise_held;
    r["counterexamples"] = row.counterexamples;
    if (!row.examples.empty()) r["examples"] = row.examples;
    if (!row.detail.empty()) r["detail"] = row.detail;
    if (timings) r["runtime_ms"] = row.runtime_ms;
    j["rows"].push_back(std::move(r));
    failed += row.status == RowStatus::kFail;
    skipped += row.status == RowStatus::kSkipped;
  }
  j["summary"] = {{"rows", result.rows.size()}, {"failed", failed}, {"skipped", skipped},
                  {"exit_code", result.exit_code()}};
  return j;
}

std::string to_text(const SuiteResult& result) {
  std::ostringstream out;
  out << std::left << std::setw(28) << "row" << std::setw(9) << "status" << std::right << std::setw(10) << "universe"
      << std::setw(10) << "premise" << std::setw(9) << "counter" << std::setw(11) << "ms" << "\n";
  for (const auto& row : result.rows) {
    out << std::left << std::setw(28) << row.id << std::setw(9) << to_string(row.status) << std::right
        << std::setw(10) << row.universe_size << std::setw(10) << row.premise_held << std::setw(9)
        << row.counterexamples << std::setw(11) << std::fixed << std::setprecision(1) << row.runtime_ms << "\n";
    for (const auto& e : row.examples) out << "    counterexample: " << e << "\n";
    if (!row.detail.empty()) out << "    " << row.detail << "\n";
  }
  return out.str();
}

}  // namespace fuzznorm
