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

#include "fuzznorm/fuzzy.hpp"

#include <algorithm>
#include <cctype>
#include <type_traits>

#include "fuzznorm/checker.hpp"
#include "fuzznorm/error.hpp"
#include "fuzznorm/implication.hpp"

namespace fuzznorm {

Carrier<UnitScalar> interval_carrier(const Connective& c, const Domain& d) {
  Carrier<UnitScalar> carrier;
  carrier.name = "([0,1], " + c.name() + ")";
  carrier.elements = d.points();
  carrier.op = [c](const UnitScalar& x, const UnitScalar& y) { return c(x, y); };
  carrier.identity = c.identity();
  carrier.datum = [](const UnitScalar& x) { return Datum{x}; };
  return carrier;
}

Carrier<FiniteElement> finite_carrier(std::string name, std::vector<std::string> labels,
                                      const std::vector<std::vector<std::uint32_t>>& table,
                                      std::optional<std::string> identity) {
  const auto n = static_cast<std::uint32_t>(labels.size());
  if (n == 0) throw ConfigurationError("finite carrier '" + name + "' has no elements");
  if (table.size() != n) throw ConfigurationError("operation table of '" + name + "' must have one row per element");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw ConfigurationError("row " + std::to_string(i) + " of the operation table of '" + name +
                               "' has the wrong length");
    }
    for (auto v : table[i]) {
      if (v >= n) throw ConfigurationError("operation table of '" + name + "' names an unknown element");
    }
  }
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ConfigurationError("finite carrier '" + name + "' repeats a label");
    }
  }

  Carrier<FiniteElement> c;
  c.name = std::move(name);
  for (std::uint32_t i = 0; i < n; ++i) c.elements.push_back({i});
  c.op = [table](const FiniteElement& a, const FiniteElement& b) { return FiniteElement{table[a.index][b.index]}; };
  c.datum = [labels](const FiniteElement& a) { return Datum{labels[a.index]}; };

  if (identity) {
    auto it = std::find(labels.begin(), labels.end(), *identity);
    if (it == labels.end()) throw ConfigurationError("identity '" + *identity + "' is not an element of " + c.name);
    const auto e = static_cast<std::uint32_t>(it - labels.begin());
    for (std::uint32_t a = 0; a < n; ++a) {
      if (table[e][a] != a || table[a][e] != a) {
        throw DomainError("'" + *identity + "' is not an identity of " + c.name + " (fails at '" + labels[a] + "')");
      }
    }
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        for (std::uint32_t x = 0; x < n; ++x) {
          if (table[table[a][b]][x] != table[a][table[b][x]]) {
            throw DomainError(c.name + " is not associative at ('" + labels[a] + "', '" + labels[b] + "', '" +
                              labels[x] + "')");
          }
        }
      }
    }
    c.identity = FiniteElement{e};
  }
  return c;
}

Carrier<FiniteElement> cyclic_group(std::uint32_t n) {
  if (n == 0) throw ConfigurationError("Z_0 is not a group");
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::uint32_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return with_inverses(finite_carrier("Z_" + std::to_string(n), labels, table, "0"));
}

Carrier<FiniteElement> with_inverses(Carrier<FiniteElement> monoid) {
  if (!monoid.identity) throw DomainError(monoid.name + " has no identity, so no inverses");
  const FiniteElement e = *monoid.identity;
  std::vector<FiniteElement> inv(monoid.elements.size());
  for (const auto& a : monoid.elements) {
    auto it = std::find_if(monoid.elements.begin(), monoid.elements.end(), [&](const FiniteElement& b) {
      return monoid.op(a, b) == e && monoid.op(b, a) == e;
    });
    if (it == monoid.elements.end()) {
      throw DomainError("element " + to_string(monoid.datum(a)) + " of " + monoid.name + " has no inverse");
    }
    inv[a.index] = *it;
  }
  monoid.inverse = [inv](const FiniteElement& a) { return inv[a.index]; };
  return monoid;
}

FiniteElement element_of(const Carrier<FiniteElement>& c, std::string_view label) {
  for (const auto& x : c.elements) {
    if (to_string(c.datum(x)) == label) return x;
  }
  throw ConfigurationError("'" + std::string(label) + "' is not an element of " + c.name);
}

namespace subsets {

FuzzySubset<UnitScalar> identity() {
  return {"builtin:identity", [](const UnitScalar& x) { return x; }};
}

FuzzySubset<UnitScalar> one() {
  return {"builtin:one", [](const UnitScalar&) { return UnitScalar::one(); }};
}

FuzzySubset<UnitScalar> constant(const UnitScalar& c) {
  if (!c.in_unit_interval()) throw ConfigurationError("constant " + c.to_string() + " lies outside [0,1]");
  std::string name = c.is_one() ? "builtin:one" : (c.is_zero() ? "builtin:zero" : "constant(" + c.to_string() + ")");
  return {std::move(name), [c](const UnitScalar&) { return c; }};
}

FuzzySubset<UnitScalar> complement() {
  return {"builtin:complement", [](const UnitScalar& x) { return UnitScalar::one() - x; }};
}

FuzzySubset<UnitScalar> step(const UnitScalar& e) {
  if (!e.in_unit_interval()) throw ConfigurationError("step point " + e.to_string() + " lies outside [0,1]");
  return {"builtin:step(" + e.to_string() + ")",
          [e](const UnitScalar& x) { return x <= e ? x : UnitScalar::one(); }};
}

FuzzySubset<UnitScalar> indicator(std::vector<UnitScalar> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::string name = "indicator{";
  for (std::size_t i = 0; i < members.size(); ++i) name += (i ? "," : "") + members[i].to_string();
  name += "}";
  return {std::move(name), [members](const UnitScalar& x) {
            return std::binary_search(members.begin(), members.end(), x) ? UnitScalar::one() : UnitScalar::zero();
          }};
}

FuzzySubset<UnitScalar> table(std::string name, std::vector<std::pair<UnitScalar, UnitScalar>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first) {
      throw ConfigurationError("table '" + name + "' lists " + entries[i].first.to_string() + " twice");
    }
    if (!entries[i].second.in_unit_interval()) {
      throw ConfigurationError("table '" + name + "' maps " + entries[i].first.to_string() + " outside [0,1]");
    }
  }
  return {name, [entries, name](const UnitScalar& x) {
            auto it = std::lower_bound(entries.begin(), entries.end(), x,
                                       [](const auto& entry, const UnitScalar& v) { return entry.first < v; });
            if (it == entries.end() || !(it->first == x)) {
              throw NotTotalError("fuzzy subset '" + name + "' is not defined at " + x.to_string());
            }
            return it->second;
          }};
}

FuzzySubset<FiniteElement> constant_on(const UnitScalar& c) {
  if (!c.in_unit_interval()) throw ConfigurationError("constant " + c.to_string() + " lies outside [0,1]");
  std::string name = c.is_one() ? "builtin:one" : (c.is_zero() ? "builtin:zero" : "constant(" + c.to_string() + ")");
  return {std::move(name), [c](const FiniteElement&) { return c; }};
}

FuzzySubset<FiniteElement> indicator_on(std::vector<FiniteElement> members) {
  std::sort(members.begin(), members.end());
  std::string name = "indicator{";
  for (std::size_t i = 0; i < members.size(); ++i) name += (i ? "," : "") + std::to_string(members[i].index);
  name += "}";
  return {std::move(name), [members](const FiniteElement& x) {
            return std::binary_search(members.begin(), members.end(), x) ? UnitScalar::one() : UnitScalar::zero();
          }};
}

FuzzySubset<FiniteElement> table_on(std::string name, std::vector<UnitScalar> values) {
  for (const auto& v : values) {
    if (!v.in_unit_interval()) throw ConfigurationError("table '" + name + "' has a value outside [0,1]");
  }
  return {name, [values, name](const FiniteElement& x) {
            if (x.index >= values.size()) {
              throw NotTotalError("fuzzy subset '" + name + "' is not defined at element " + std::to_string(x.index));
            }
            return values[x.index];
          }};
}

FuzzySubset<UnitScalar> builtin(std::string_view name) {
  if (name.rfind("builtin:", 0) == 0) name.remove_prefix(8);
  if (name == "identity") return identity();
  if (name == "one") return one();
  if (name == "zero") return constant(UnitScalar::zero());
  if (name == "complement") return complement();
  if (name.rfind("step(", 0) == 0 && name.back() == ')') {
    return step(UnitScalar::parse(name.substr(5, name.size() - 6)));
  }
  throw ConfigurationError("unknown builtin fuzzy subset '" + std::string(name) + "'");
}

}  // namespace subsets

template <class E>
FuzzySubset<E> intersect(const std::vector<FuzzySubset<E>>& family) {
  if (family.empty()) return {"builtin:one", [](const E&) { return UnitScalar::one(); }};
  if (family.size() == 1) return family.front();
  std::string name = "intersect(";
  for (std::size_t i = 0; i < family.size(); ++i) name += (i ? "," : "") + family[i].name();
  name += ")";
  return {std::move(name), [family](const E& x) {
            UnitScalar v = family.front()(x);
            for (std::size_t i = 1; i < family.size(); ++i) v = min(v, family[i](x));
            return v;
          }};
}

template <class E>
void require_total(const FuzzySubset<E>& mu, const Carrier<E>& c) {
  for (const auto& x : c.elements) {
    UnitScalar v = mu(x);
    if (!v.in_unit_interval()) {
      throw NotTotalError("fuzzy subset '" + mu.name() + "' maps " + to_string(c.datum(x)) + " to " + v.to_string() +
                          ", outside [0,1]");
    }
  }
}

std::string_view to_string(Substructure s) {
  switch (s) {
    case Substructure::kSubgroupoid: return "subgroupoid";
    case Substructure::kSubgroup: return "subgroup";
    case Substructure::kSubmonoid: return "submonoid";
    case Substructure::kTSubnorm: return "t-subnorm";
    case Substructure::kTSubconorm: return "t-subconorm";
    case Substructure::kASubmonoid: return "a-submonoid";
    case Substructure::kUSubmonoid: return "u-submonoid";
    case Substructure::kFSubmonoid: return "f-submonoid";
  }
  return "?";
}

Substructure parse_substructure(std::string_view name) {
  for (auto s : {Substructure::kSubgroupoid, Substructure::kSubgroup, Substructure::kSubmonoid,
                 Substructure::kTSubnorm, Substructure::kTSubconorm, Substructure::kASubmonoid,
                 Substructure::kUSubmonoid, Substructure::kFSubmonoid}) {
    if (to_string(s) == name) return s;
  }
  throw ConfigurationError("unknown substructure kind '" + std::string(name) + "'");
}

SubstructureKind::SubstructureKind(Substructure t, std::optional<Connective> c) : tag(t), combiner(std::move(c)) {
  auto role_error = [&](std::string_view wanted) {
    return ConfigurationError(std::string(fuzznorm::to_string(tag)) + " needs " + std::string(wanted) +
                              " as combiner" + (combiner ? ", got '" + combiner->name() + "'" : std::string()));
  };
  switch (tag) {
    case Substructure::kSubgroupoid:
    case Substructure::kSubgroup:
    case Substructure::kSubmonoid:
    case Substructure::kTSubnorm:
    case Substructure::kTSubconorm:
      if (combiner) throw role_error("no explicit operator (the minimum is built in)");
      break;
    case Substructure::kASubmonoid:
      if (!combiner || (combiner->role() != Role::kAggregation && combiner->role() != Role::kTNorm &&
                        combiner->role() != Role::kTConorm)) {
        throw role_error("an aggregation function");
      }
      break;
    case Substructure::kUSubmonoid:
      if (!combiner || (combiner->role() != Role::kUninorm && combiner->role() != Role::kTNorm &&
                        combiner->role() != Role::kTConorm)) {
        throw role_error("a uninorm");
      }
      break;
    case Substructure::kFSubmonoid:
      if (!combiner || combiner->role() != Role::kNullnorm) throw role_error("a nullnorm");
      break;
  }
}

namespace {

template <class E>
DomainInfo carrier_info(const Carrier<E>& c) {
  if constexpr (std::is_same_v<E, UnitScalar>) {
    // Grid carriers report their resolution when the points are i/n.
    const auto n = static_cast<std::int64_t>(c.elements.size()) - 1;
    if (n >= 2) {
      bool grid = true;
      for (std::int64_t i = 0; i <= n && grid; ++i) {
        grid = c.elements[static_cast<std::size_t>(i)] == UnitScalar(static_cast<long>(i), static_cast<long>(n));
      }
      if (grid) return {"grid", n};
    }
    return {"points", static_cast<std::int64_t>(c.elements.size())};
  } else {
    return {"finite", static_cast<std::int64_t>(c.elements.size())};
  }
}

template <class E>
std::vector<UnitScalar> values_on(const FuzzySubset<E>& mu, const Carrier<E>& c) {
  std::vector<UnitScalar> out;
  out.reserve(c.elements.size());
  for (const auto& x : c.elements) out.push_back(mu(x));
  return out;
}

template <class E>
PropertyReport closure_check(const FuzzySubset<E>& mu, const Carrier<E>& c, const std::optional<Connective>& combiner,
                             const SearchBudget& budget) {
  const std::size_t n = c.elements.size();
  auto r = make_report("closure", carrier_info(c), budget);
  const auto mus = values_on(mu, c);
  const bool nary = combiner && combiner->role() == Role::kAggregation;
  const int max_arity = nary ? budget.arity_cap : 2;
  for (int arity = 2; arity <= max_arity; ++arity) {
    std::uint64_t count = 1;
    for (int i = 0; i < arity; ++i) count *= n;
    require_within_budget(count, budget, "closure check over " + std::to_string(arity) + "-tuples");
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    for (std::uint64_t t = 0; t < count; ++t) {
      ++r.instances;
      E product = c.elements[idx[0]];
      std::vector<UnitScalar> degrees{mus[idx[0]]};
      for (std::size_t k = 1; k < idx.size(); ++k) {
        product = c.op(product, c.elements[idx[k]]);
        degrees.push_back(mus[idx[k]]);
      }
      UnitScalar lhs;
      if (!combiner) {
        lhs = *std::min_element(degrees.begin(), degrees.end());
      } else if (nary) {
        lhs = (*combiner)(std::span<const UnitScalar>(degrees));
      } else {
        lhs = (*combiner)(degrees[0], degrees[1]);
      }
      UnitScalar rhs = mu(product);
      if (!at_most(lhs, rhs)) {
        Witness w;
        for (auto i : idx) w.inputs.push_back(c.datum(c.elements[i]));
        w.values = {lhs, rhs};
        r.add_violation(std::move(w));
      }
      for (std::size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < n) break;
        idx[k] = 0;
      }
    }
  }
  return r;
}

template <class E>
PropertyReport identity_check(const FuzzySubset<E>& mu, const Carrier<E>& c, const SearchBudget& budget) {
  auto r = make_report("identity", carrier_info(c), budget);
  ++r.instances;
  UnitScalar v = mu(*c.identity);
  if (!same(v, UnitScalar::one())) r.add_violation({{c.datum(*c.identity)}, {v}});
  return r;
}

}  // namespace

template <class E>
PropertyReport check_fuzzy_subgroupoid(const FuzzySubset<E>& mu, const Carrier<E>& c, const SearchBudget& budget) {
  budget.validate();
  auto r = make_report("subgroupoid", carrier_info(c), budget);
  r.notes["subset"] = mu.name();
  r.notes["carrier"] = c.name;
  r.add_check(closure_check(mu, c, std::nullopt, budget));
  return r;
}

template <class E>
PropertyReport check_fuzzy_subgroup(const FuzzySubset<E>& mu, const Carrier<E>& c, const SearchBudget& budget) {
  if (!c.inverse) throw DomainError(c.name + " is not a group: no inverses");
  budget.validate();
  auto r = make_report("subgroup", carrier_info(c), budget);
  r.notes["subset"] = mu.name();
  r.notes["carrier"] = c.name;
  r.add_check(closure_check(mu, c, std::nullopt, budget));
  auto inv = make_report("inverse", carrier_info(c), budget);
  for (const auto& x : c.elements) {
    ++inv.instances;
    UnitScalar a = mu(c.inverse(x));
    UnitScalar b = mu(x);
    if (!at_most(b, a)) inv.add_violation({{c.datum(x)}, {a, b}});
  }
  r.add_check(std::move(inv));
  return r;
}

template <class E>
PropertyReport check_fuzzy_submonoid(const FuzzySubset<E>& mu, const Carrier<E>& c, const SubstructureKind& kind,
                                     const SearchBudget& budget) {
  if (kind.tag == Substructure::kSubgroupoid) return check_fuzzy_subgroupoid(mu, c, budget);
  if (kind.tag == Substructure::kSubgroup) return check_fuzzy_subgroup(mu, c, budget);
  if (!c.identity) throw DomainError(c.name + " is not a monoid: no identity");
  if constexpr (std::is_same_v<E, UnitScalar>) {
    if (kind.tag == Substructure::kTSubnorm && !c.identity->is_one()) {
      throw ConfigurationError("t-subnorms live on a t-norm carrier; " + c.name + " has identity " +
                               c.identity->to_string());
    }
    if (kind.tag == Substructure::kTSubconorm && !c.identity->is_zero()) {
      throw ConfigurationError("t-subconorms live on a t-conorm carrier; " + c.name + " has identity " +
                               c.identity->to_string());
    }
  }
  budget.validate();
  auto r = make_report(std::string(to_string(kind.tag)), carrier_info(c), budget);
  r.notes["subset"] = mu.name();
  r.notes["carrier"] = c.name;
  r.notes["combiner"] = kind.combiner ? kind.combiner->name() : "min";
  r.add_check(closure_check(mu, c, kind.combiner, budget));
  r.add_check(identity_check(mu, c, budget));
  return r;
}

template <class E>
CoreReport<E> extract_core(const FuzzySubset<E>& mu, const Carrier<E>& c, const SearchBudget& budget) {
  CoreReport<E> out;
  for (const auto& x : c.elements) {
    if (same(mu(x), UnitScalar::one())) out.core.push_back(x);
  }
  require_within_budget(static_cast<std::uint64_t>(out.core.size()) * out.core.size(), budget, "core closure");
  out.report = make_report("core", carrier_info(c), budget);
  out.report.notes["subset"] = mu.name();
  out.report.notes["carrier"] = c.name;
  out.report.notes["size"] = std::to_string(out.core.size());
  if (c.identity) {
    auto id = make_report("core-identity", carrier_info(c), budget);
    ++id.instances;
    UnitScalar v = mu(*c.identity);
    if (!same(v, UnitScalar::one())) id.add_violation({{c.datum(*c.identity)}, {v}});
    out.report.add_check(std::move(id));
  }
  auto closed = make_report("core-closure", carrier_info(c), budget);
  for (const auto& x : out.core) {
    for (const auto& y : out.core) {
      ++closed.instances;
      UnitScalar v = mu(c.op(x, y));
      if (!same(v, UnitScalar::one())) closed.add_violation({{c.datum(x), c.datum(y)}, {v}});
    }
  }
  out.report.add_check(std::move(closed));
  return out;
}

PropertyReport check_discrete_subalgebra(const std::vector<UnitScalar>& points, const Connective& c,
                                         const SearchBudget& budget) {
  Domain d = Domain::from_points(points);
  const auto& pts = d.points();
  if (!pts.front().is_zero() || !pts.back().is_one()) {
    throw ConfigurationError("a discrete subalgebra must contain 0 and 1");
  }
  require_within_budget(static_cast<std::uint64_t>(pts.size()) * pts.size(), budget, "discrete closure");
  auto r = make_report("discrete-subalgebra", describe(d), budget);
  r.notes["connective"] = c.name();
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      ++r.instances;
      UnitScalar v = c(x, y);
      if (!d.contains(v)) r.add_violation({{x, y}, {v}});
    }
  }
  return r;
}

std::vector<UnitScalar> discrete_chain(const UnitScalar& e, std::int64_t n, std::int64_t m) {
  if (!(UnitScalar::zero() < e && e < UnitScalar::one())) {
    throw DegenerateParameterError("L_{n,m} needs 0 < e < 1, got " + e.to_string());
  }
  if (n < 1 || m < 1) throw ConfigurationError("L_{n,m} needs n, m >= 1");
  std::vector<UnitScalar> out;
  for (std::int64_t i = 0; i <= n; ++i) out.push_back(e * UnitScalar(static_cast<long>(i), static_cast<long>(n)));
  const UnitScalar rest = UnitScalar::one() - e;
  for (std::int64_t j = 1; j <= m; ++j) {
    out.push_back(e + rest * UnitScalar(static_cast<long>(j), static_cast<long>(m)));
  }
  return out;
}

std::string_view to_string(FuzzyProperty p) {
  switch (p) {
    case FuzzyProperty::kStrict: return "FSTRICT";
    case FuzzyProperty::kCancel: return "FCANCEL";
    case FuzzyProperty::kConditionalCancel: return "FCONDCANCEL";
    case FuzzyProperty::kArchimedean: return "FARCH";
    case FuzzyProperty::kLimit: return "FLIMIT";
  }
  return "?";
}

FuzzyProperty parse_fuzzy_property(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (auto p : {FuzzyProperty::kStrict, FuzzyProperty::kCancel, FuzzyProperty::kConditionalCancel,
                 FuzzyProperty::kArchimedean, FuzzyProperty::kLimit}) {
    if (to_string(p) == upper) return p;
  }
  throw ConfigurationError("unknown fuzzy property '" + std::string(name) + "'");
}

PropertyReport check_fuzzy_subnorm(const FuzzySubset<UnitScalar>& mu, const Connective& t, const Domain& d,
                                   const SearchBudget& budget) {
  return check_fuzzy_submonoid(mu, interval_carrier(t, d), SubstructureKind(Substructure::kTSubnorm), budget);
}

PropertyReport check_fuzzy_property(const FuzzySubset<UnitScalar>& mu, const Connective& t, FuzzyProperty prop,
                                    const Domain& d, const SearchBudget& budget) {
  if (t.role() != Role::kTNorm) throw DomainError("fuzzified properties are stated for t-norms; got " + t.name());
  budget.validate();
  auto r = make_report(std::string(to_string(prop)), describe(d), budget);
  r.notes["subset"] = mu.name();
  r.notes["connective"] = t.name();
  if (!check_fuzzy_subnorm(mu, t, d, budget).holds()) r.add_tag("NOT_A_SUBNORM");

  const auto& pts = d.points();
  const std::size_t n = pts.size();
  const UnitScalar mu0 = mu(UnitScalar::zero());
  std::vector<UnitScalar> mu_at;
  for (const auto& x : pts) mu_at.push_back(mu(x));

  if (prop == FuzzyProperty::kStrict || prop == FuzzyProperty::kCancel ||
      prop == FuzzyProperty::kConditionalCancel) {
    std::vector<std::vector<UnitScalar>> mt(n, std::vector<UnitScalar>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mt[i][j] = mu(t(pts[i], pts[j]));
    }
    std::uint64_t strong_failures = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const UnitScalar& x = pts[i];
      if (prop == FuzzyProperty::kStrict && (x.is_zero() || x.is_one())) continue;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          ++r.instances;
          const UnitScalar& a = mt[i][j];
          const UnitScalar& b = mt[i][k];
          switch (prop) {
            case FuzzyProperty::kStrict:
              if (below(b, a)) break;
              if (indeterminate(a, b)) {
                r.mark_vacuous("FLOAT_INDETERMINATE");
              } else {
                r.add_violation({{x, pts[j], pts[k]}, {a, b}});
              }
              break;
            case FuzzyProperty::kCancel:
              if (same(a, b) && !x.is_zero()) r.add_violation({{x, pts[j], pts[k]}, {a, b}});
              break;
            case FuzzyProperty::kConditionalCancel:
              if (same(a, b) && below(mu0, a)) {
                // The premise held with y != z, so the stronger form fails here.
                ++strong_failures;
                if (!same(mu_at[j], mu_at[k])) r.add_violation({{x, pts[j], pts[k]}, {a, mu_at[j], mu_at[k]}});
              }
              break;
            default:
              break;
          }
        }
      }
    }
    if (prop == FuzzyProperty::kStrict && r.instances == 0) r.mark_vacuous("NO_INTERIOR_ELEMENT");
    if (prop == FuzzyProperty::kConditionalCancel) {
      r.notes["strong_form"] = strong_failures == 0 ? "holds" : "fails (" + std::to_string(strong_failures) + ")";
    }
    return r;
  }

  const auto interior = d.interior();
  if (prop == FuzzyProperty::kArchimedean) {
    const bool constant =
        std::all_of(mu_at.begin(), mu_at.end(), [&](const UnitScalar& v) { return same(v, mu_at.front()); });
    if (constant) {
      r.instances = interior.size() * interior.size();
      r.mark_vacuous("VACUOUS_BY_CONSTANCY");
      return r;
    }
    for (const auto& x : interior) {
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
      std::vector<UnitScalar> mu_powers;
      for (const auto& p : powers) mu_powers.push_back(mu(p));
      for (const auto& y : interior) {
        ++r.instances;
        const UnitScalar my = mu(y);
        auto hit = std::find_if(mu_powers.begin(), mu_powers.end(), [&](const UnitScalar& v) { return below(v, my); });
        if (hit != mu_powers.end()) continue;
        if (stationary) {
          r.add_violation({{x, y}, {mu_powers.back(), my, static_cast<std::int64_t>(powers.size())}});
        } else {
          r.mark_vacuous("N_MAX_EXHAUSTED");
        }
      }
    }
    return r;
  }

  // FLIMIT
  for (const auto& x : interior) {
    ++r.instances;
    Trajectory tr = limit_trajectory(t, x, budget);
    const UnitScalar m = mu(tr.value);
    switch (tr.outcome) {
      case Trajectory::Outcome::kReachedZero:
      case Trajectory::Outcome::kStationary:
        if (!same(m, mu0)) r.add_violation({{x}, {m, mu0, tr.steps}});
        break;
      case Trajectory::Outcome::kBelowEpsilon:
        if (!(abs(m - mu0) < budget.epsilon)) r.add_violation({{x}, {m, mu0, tr.steps}});
        break;
      case Trajectory::Outcome::kExhausted:
        r.mark_vacuous("ITER_CAP_EXHAUSTED");
        break;
    }
  }
  return r;
}

PropertyReport check_not_strictly_decreasing(const FuzzySubset<UnitScalar>& mu, const Connective& t, const Domain& d,
                                             const SearchBudget& budget) {
  const bool strict = check_strict_monotonicity(t, d, budget).holds();
  const bool subnorm = check_fuzzy_subnorm(mu, t, d, budget).holds();
  auto r = make_report("not-strictly-decreasing", describe(d), budget);
  r.notes["subset"] = mu.name();
  r.notes["connective"] = t.name();
  r.notes["t_strictly_monotone"] = strict ? "true" : "false";
  r.notes["subnorm"] = subnorm ? "true" : "false";
  const auto& pts = d.points();
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t i = 0; i < pts.size() && !pair; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && !pair; ++j) {
      ++r.instances;
      if (at_most(mu(pts[i]), mu(pts[j]))) pair = std::make_pair(i, j);
    }
  }
  if (pair) {
    r.notes["non_decreasing_pair"] = "(" + pts[pair->first].to_string() + ", " + pts[pair->second].to_string() + ")";
  }
  if (!strict || !subnorm) r.add_tag("PREMISE_NOT_MET");
  if (strict && subnorm && !pair) {
    r.add_violation({{pts.front(), pts.back()}, {mu(pts.front()), mu(pts.back())}});
  }
  return r;
}

namespace {

bool agrees_everywhere(const Connective& c, const Domain& d,
                       const std::function<UnitScalar(const UnitScalar&, const UnitScalar&)>& reference) {
  for (const auto& x : d.points()) {
    for (const auto& y : d.points()) {
      if (!same(c(x, y), reference(x, y))) return false;
    }
  }
  return true;
}

UnitScalar absorber_of(const Connective& f) {
  return f.absorber() ? *f.absorber() : f(UnitScalar::zero(), UnitScalar::one());
}

bool at_least_everywhere(const FuzzySubset<UnitScalar>& mu, const Domain& d, const UnitScalar& k) {
  return std::all_of(d.points().begin(), d.points().end(), [&](const UnitScalar& x) { return at_most(k, mu(x)); });
}

}  // namespace

const std::vector<std::string>& known_characterization_cases() {
  static const std::vector<std::string> kCases{"prop17", "prop18", "disjunctive", "prop20",
                                               "prop24", "prop25", "prop25-conorm"};
  return kCases;
}

PropertyReport characterize_special_cases(std::string_view case_id, const FuzzySubset<UnitScalar>& mu,
                                          const Connective& c, const Domain& d,
                                          const std::optional<Connective>& carrier, const SearchBudget& budget) {
  const std::string id(case_id);
  const UnitScalar zero = UnitScalar::zero();
  const UnitScalar one = UnitScalar::one();
  auto mismatch = [&](const std::string& why) {
    return DomainError("case '" + id + "' does not apply to " + c.name() + ": " + why);
  };

  std::optional<Connective> monoid = carrier;
  std::optional<SubstructureKind> kind;
  std::function<bool(const Domain&)> right;
  bool equivalence = true;

  if (id == "prop17" || id == "prop18") {
    const bool norm = id == "prop17";
    if (c.role() != (norm ? Role::kTNorm : Role::kTConorm)) throw mismatch(norm ? "needs T_M" : "needs S_M");
    auto reference = [norm](const UnitScalar& x, const UnitScalar& y) { return norm ? min(x, y) : max(x, y); };
    if (!agrees_everywhere(c, d, reference)) throw mismatch(norm ? "not the minimum" : "not the maximum");
    if (!monoid) monoid = c;
    kind.emplace(Substructure::kASubmonoid, aggregation_min());
    right = [&mu, norm](const Domain&) { return same(mu(norm ? UnitScalar::one() : UnitScalar::zero()), UnitScalar::one()); };
  } else if (id == "disjunctive") {
    if (c.role() != Role::kUninorm || !c.identity()) throw mismatch("needs a uninorm with declared identity");
    if (!same(c(one, zero), one)) throw mismatch("U(1,0) != 1, so U is not disjunctive");
    if (!monoid) monoid = c;
    kind.emplace(Substructure::kUSubmonoid, c);
    right = [&mu](const Domain& dom) {
      return std::all_of(dom.points().begin(), dom.points().end(),
                         [&](const UnitScalar& x) { return same(mu(x), UnitScalar::one()); });
    };
  } else if (id == "prop20") {
    if (c.role() != Role::kUninorm || !c.identity()) throw mismatch("needs a uninorm with declared identity");
    const UnitScalar e = *c.identity();
    const Domain de = d.with_points({e});
    for (const auto& x : de.points()) {
      for (const auto& y : de.points()) {
        const bool upper = e <= x && e <= y;
        const bool mixed = (x < e && e < y) || (y < e && e < x);
        if (upper && !same(c(x, y), max(x, y))) throw mismatch("not the maximum above e");
        if (mixed && !same(c(x, y), min(x, y))) throw mismatch("not the minimum on the mixed region");
      }
    }
    if (!monoid) monoid = tnorm(TNormFamily::kMinimum);
    kind.emplace(Substructure::kUSubmonoid, c);
    right = [&mu, e](const Domain& dom) {
      if (!same(mu(UnitScalar::one()), UnitScalar::one())) return false;
      std::vector<UnitScalar> b;
      for (const auto& x : dom.points()) {
        if (at_most(e, mu(x))) b.push_back(x);
      }
      for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (!at_most(mu(b[i + 1]), mu(b[i]))) return false;
      }
      return true;
    };
  } else if (id == "prop24" || id == "prop25" || id == "prop25-conorm") {
    if (c.role() != Role::kNullnorm) throw mismatch("needs a nullnorm");
    const UnitScalar k = absorber_of(c);
    if (id != "prop24") {
      // F_M: the minimum above k.
      for (const auto& x : d.points()) {
        for (const auto& y : d.points()) {
          if (k < x && k < y && !same(c(x, y), min(x, y))) throw mismatch("not the minimum above k");
        }
      }
    }
    if (!monoid) monoid = id == "prop25-conorm" ? tconorm(TConormFamily::kMaximum) : tnorm(TNormFamily::kMinimum);
    kind.emplace(Substructure::kFSubmonoid, c);
    equivalence = id != "prop24";
    const bool norm = id == "prop25";
    const bool conorm = id == "prop25-conorm";
    right = [&mu, k, norm, conorm](const Domain& dom) {
      if (norm && !same(mu(UnitScalar::one()), UnitScalar::one())) return false;
      if (conorm && !same(mu(UnitScalar::zero()), UnitScalar::one())) return false;
      return at_least_everywhere(mu, dom, k);
    };
  } else {
    throw ConfigurationError("unknown characterization case '" + id + "'");
  }

  if (!monoid->identity()) throw mismatch("the carrier " + monoid->name() + " declares no identity");
  const Domain dom = d.with_points({*monoid->identity()});
  const auto left_report = check_fuzzy_submonoid(mu, interval_carrier(*monoid, dom), *kind, budget);
  const bool left = left_report.holds();
  const bool rhs = right(dom);

  auto r = make_report("characterize:" + id, describe(dom), budget);
  r.notes["subset"] = mu.name();
  r.notes["connective"] = c.name();
  r.notes["carrier"] = monoid->name();
  r.notes["form"] = equivalence ? "iff" : "implies";
  r.notes["left"] = left ? "holds" : "fails";
  r.notes["right"] = rhs ? "holds" : "fails";
  r.instances = left_report.instances + 1;
  const bool consistent = equivalence ? left == rhs : (!left || rhs);
  if (!consistent) {
    r.add_violation({{std::string(left ? "left" : "right")}, {std::string("holds"), std::string("other side fails")}});
  }
  return r;
}

bool RefutationReport::all_refuted() const {
  return std::all_of(members.begin(), members.end(), [](const RefutationMember& m) { return m.refuted(); });
}

PropertyReport RefutationReport::to_report(const Domain& d) const {
  auto r = make_report("refute-uninorm", describe(d), SearchBudget{});
  r.notes["subset"] = subset;
  r.notes["carrier"] = carrier;
  r.notes["family_size"] = std::to_string(members.size());
  for (const auto& m : members) {
    auto sub = make_report(m.uninorm, m.submonoid.domain, m.submonoid.budget);
    sub.instances = m.submonoid.instances;
    sub.notes["submonoid"] = std::string(fuzznorm::to_string(m.submonoid.verdict));
    if (m.contradiction) {
      const auto& w = *m.contradiction;
      sub.notes["contradiction"] = "(" + fuzznorm::to_string(w.inputs[0]) + ", " + fuzznorm::to_string(w.inputs[1]) +
                                   ") -> (" + fuzznorm::to_string(w.values[0]) + ", " +
                                   fuzznorm::to_string(w.values[1]) + ")";
    }
    if (!m.refuted()) sub.add_violation({{m.uninorm}, {std::string("is a submonoid")}});
    r.add_check(std::move(sub));
  }
  return r;
}

RefutationReport refute_uninorm_existence(const FuzzySubset<UnitScalar>& mu, const Connective& carrier,
                                          const std::vector<Connective>& family, const Domain& d,
                                          const SearchBudget& budget) {
  if (carrier.role() != Role::kTNorm && carrier.role() != Role::kTConorm) {
    throw DomainError("refutation needs a t-norm or t-conorm carrier, got " + carrier.name());
  }
  const bool norm = carrier.role() == Role::kTNorm;
  RefutationReport out;
  out.subset = mu.name();
  out.carrier = carrier.name();
  for (const auto& u : family) {
    if (!u.identity()) throw DomainError("family member " + u.name() + " declares no identity");
    const UnitScalar e = *u.identity();
    const Domain de = d.with_points({e, UnitScalar::one() - e});
    RefutationMember m;
    m.uninorm = u.name();
    m.submonoid =
        check_fuzzy_submonoid(mu, interval_carrier(carrier, de), SubstructureKind(Substructure::kUSubmonoid, u), budget);
    const UnitScalar x = norm ? e : UnitScalar::one() - e;
    for (const auto& y : de.points()) {
      if (norm ? !(x < y) : !(y < x)) continue;
      UnitScalar lhs = u(mu(x), mu(y));
      UnitScalar rhs = mu(carrier(x, y));
      if (!at_most(lhs, rhs)) {
        m.contradiction = Witness{{x, y}, {lhs, rhs}};
        break;
      }
    }
    out.members.push_back(std::move(m));
  }
  return out;
}

std::vector<Connective> uninorm_family(const std::vector<UnitScalar>& identities,
                                       const std::vector<Connective>& tnorms,
                                       const std::vector<Connective>& tconorms) {
  std::vector<Connective> out;
  for (const auto& e : identities) {
    for (const auto& t : tnorms) {
      for (const auto& s : tconorms) {
        out.push_back(construct_uninorm_min(e, t, s));
        out.push_back(construct_uninorm_max(e, t, s));
      }
    }
  }
  return out;
}

std::vector<FuzzySubset<UnitScalar>> enumerate_subsets(const std::vector<UnitScalar>& points,
                                                       const std::vector<UnitScalar>& alphabet,
                                                       const SearchBudget& budget) {
  if (alphabet.empty()) throw ConfigurationError("empty value alphabet");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    count *= alphabet.size();
    require_within_budget(count, budget, "fuzzy subset enumeration");
  }
  std::vector<FuzzySubset<UnitScalar>> out;
  out.reserve(count);
  std::vector<std::size_t> idx(points.size(), 0);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<std::pair<UnitScalar, UnitScalar>> entries;
    std::string name = "table[";
    for (std::size_t i = 0; i < points.size(); ++i) {
      entries.emplace_back(points[i], alphabet[idx[i]]);
      name += (i ? "," : "") + alphabet[idx[i]].to_string();
    }
    name += "]";
    out.push_back(subsets::table(std::move(name), std::move(entries)));
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < alphabet.size()) break;
      idx[k] = 0;
    }
  }
  return out;
}

#define FUZZNORM_INSTANTIATE(E)                                                                                \
  template FuzzySubset<E> intersect(const std::vector<FuzzySubset<E>>&);                                       \
  template void require_total(const FuzzySubset<E>&, const Carrier<E>&);                                       \
  template PropertyReport check_fuzzy_subgroupoid(const FuzzySubset<E>&, const Carrier<E>&,                    \
                                                  const SearchBudget&);                                        \
  template PropertyReport check_fuzzy_subgroup(const FuzzySubset<E>&, const Carrier<E>&, const SearchBudget&); \
  template PropertyReport check_fuzzy_submonoid(const FuzzySubset<E>&, const Carrier<E>&,                      \
                                                const SubstructureKind&, const SearchBudget&);                 \
  template CoreReport<E> extract_core(const FuzzySubset<E>&, const Carrier<E>&, const SearchBudget&);

FUZZNORM_INSTANTIATE(UnitScalar)
FUZZNORM_INSTANTIATE(FiniteElement)

#undef FUZZNORM_INSTANTIATE

}  // namespace fuzznorm
