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

#include "fuzznorm/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "fuzznorm/error.hpp"

namespace fuzznorm::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw ParseError(source + ": field '" + field + "': " + what);
}

const json& member(const json& j, const char* key, const std::string& source, const std::string& where = {}) {
  if (!j.is_object()) fail(source, where.empty() ? "<root>" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(source, where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string text_of(const json& j, const std::string& source, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  fail(source, field, "expected a string");
}

UnitScalar rational_of(const json& j, const std::string& source, const std::string& field) {
  if (j.is_number_integer()) return UnitScalar(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail(source, field, "expected a rational written as \"p/q\"");
  try {
    return UnitScalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(source, field, e.what());
  }
}

UnitScalar degree_of(const json& j, const std::string& source, const std::string& field) {
  UnitScalar v = rational_of(j, source, field);
  if (!v.in_unit_interval()) fail(source, field, v.to_string() + " lies outside [0,1]");
  return v;
}

const json& array_of(const json& j, const std::string& source, const std::string& field) {
  if (!j.is_array()) fail(source, field, "expected an array");
  return j;
}

std::string form_of(const json& j, const std::string& source) {
  return text_of(member(j, "form", source), source, "form");
}

std::string index_field(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

/// Table entries of a fixed arity: keys, then the degree.
std::vector<std::pair<std::vector<std::string>, UnitScalar>> entries_of(const json& j, std::size_t keys,
                                                                       const std::string& source) {
  if (form_of(j, source) != "table") fail(source, "form", "expected \"table\"");
  const auto& entries = array_of(member(j, "entries", source), source, "entries");
  std::vector<std::pair<std::vector<std::string>, UnitScalar>> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto field = index_field("entries", i);
    const auto& e = array_of(entries[i], source, field);
    if (e.size() != keys + 1) {
      fail(source, field, "expected " + std::to_string(keys + 1) + " items, got " + std::to_string(e.size()));
    }
    std::vector<std::string> k;
    for (std::size_t c = 0; c < keys; ++c) k.push_back(text_of(e[c], source, index_field(field, c)));
    out.emplace_back(std::move(k), degree_of(e[keys], source, index_field(field, keys)));
  }
  return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line for the diagnostic.
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) line += text[i] == '\n';
    throw ParseError(source + ": line " + std::to_string(line) + ": " + e.what());
  }
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

FuzzySubset<UnitScalar> subset_from_json(const json& j, const std::string& source) {
  const std::string form = form_of(j, source);
  if (form.rfind("builtin:", 0) == 0) {
    try {
      return subsets::builtin(form);
    } catch (const Error& e) {
      fail(source, "form", e.what());
    }
  }
  if (form == "table") {
    std::vector<std::pair<UnitScalar, UnitScalar>> entries;
    const auto& list = array_of(member(j, "entries", source), source, "entries");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto field = index_field("entries", i);
      const auto& e = array_of(list[i], source, field);
      if (e.size() != 2) fail(source, field, "expected [point, degree]");
      entries.emplace_back(degree_of(e[0], source, index_field(field, 0)), degree_of(e[1], source, index_field(field, 1)));
    }
    try {
      return subsets::table(source, std::move(entries));
    } catch (const ConfigurationError& e) {
      fail(source, "entries", e.what());
    }
  }
  if (form == "indicator") {
    std::vector<UnitScalar> members;
    const auto& list = array_of(member(j, "members", source), source, "members");
    for (std::size_t i = 0; i < list.size(); ++i) members.push_back(degree_of(list[i], source, index_field("members", i)));
    return subsets::indicator(std::move(members));
  }
  fail(source, "form", "unknown form '" + form + "'");
}

FuzzySubset<FiniteElement> subset_on_carrier_from_json(const json& j, const Carrier<FiniteElement>& c,
                                                       const std::string& source) {
  const std::string form = form_of(j, source);
  auto element = [&](const json& v, const std::string& field) {
    const auto label = text_of(v, source, field);
    try {
      return element_of(c, label);
    } catch (const ConfigurationError&) {
      fail(source, field, "'" + label + "' is not an element of " + c.name);
    }
  };
  if (form == "builtin:one") return subsets::constant_on(UnitScalar::one());
  if (form == "builtin:zero") return subsets::constant_on(UnitScalar::zero());
  if (form == "indicator") {
    std::vector<FiniteElement> members;
    const auto& list = array_of(member(j, "members", source), source, "members");
    for (std::size_t i = 0; i < list.size(); ++i) members.push_back(element(list[i], index_field("members", i)));
    return subsets::indicator_on(std::move(members));
  }
  if (form == "table") {
    std::vector<std::optional<UnitScalar>> values(c.elements.size());
    const auto& list = array_of(member(j, "entries", source), source, "entries");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto field = index_field("entries", i);
      const auto& e = array_of(list[i], source, field);
      if (e.size() != 2) fail(source, field, "expected [element, degree]");
      const auto x = element(e[0], index_field(field, 0));
      if (values[x.index]) fail(source, field, "element listed twice");
      values[x.index] = degree_of(e[1], source, index_field(field, 1));
    }
    std::vector<UnitScalar> flat;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i]) {
        throw NotTotalError(source + ": no degree for element '" + to_string(c.datum(c.elements[i])) + "'");
      }
      flat.push_back(*values[i]);
    }
    return subsets::table_on(source, std::move(flat));
  }
  fail(source, "form", "form '" + form + "' is not available on finite carriers");
}

Carrier<FiniteElement> carrier_from_json(const json& j, const std::string& source) {
  const auto& elements = array_of(member(j, "elements", source), source, "elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) labels.push_back(text_of(elements[i], source, index_field("elements", i)));
  if (labels.empty()) fail(source, "elements", "empty");
  auto index = [&](const json& v, const std::string& field) -> std::uint32_t {
    const auto label = text_of(v, source, field);
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) fail(source, field, "'" + label + "' is not listed in elements");
    return static_cast<std::uint32_t>(it - labels.begin());
  };
  const auto& op = array_of(member(j, "op", source), source, "op");
  if (op.size() != labels.size()) fail(source, "op", "expected " + std::to_string(labels.size()) + " rows");
  std::vector<std::vector<std::uint32_t>> table;
  for (std::size_t r = 0; r < op.size(); ++r) {
    const auto field = index_field("op", r);
    const auto& row = array_of(op[r], source, field);
    if (row.size() != labels.size()) fail(source, field, "expected " + std::to_string(labels.size()) + " entries");
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < row.size(); ++c) out.push_back(index(row[c], index_field(field, c)));
    table.push_back(std::move(out));
  }
  std::optional<std::string> identity;
  if (auto it = j.find("identity"); it != j.end()) {
    identity = text_of(*it, source, "identity");
    index(*it, "identity");
  }
  std::string name = source;
  if (auto it = j.find("name"); it != j.end()) name = text_of(*it, source, "name");
  try {
    return finite_carrier(std::move(name), std::move(labels), table, identity);
  } catch (const Error& e) {
    fail(source, identity ? "identity" : "op", e.what());
  }
}

FiniteLattice lattice_from_json(const json& j, const std::string& source) {
  const auto& elements = array_of(member(j, "elements", source), source, "elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) labels.push_back(text_of(elements[i], source, index_field("elements", i)));
  const auto& covers = array_of(member(j, "covers", source), source, "covers");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto field = index_field("covers", i);
    const auto& c = array_of(covers[i], source, field);
    if (c.size() != 2) fail(source, field, "expected [lower, upper]");
    pairs.emplace_back(text_of(c[0], source, index_field(field, 0)), text_of(c[1], source, index_field(field, 1)));
  }
  std::string name = source;
  if (auto it = j.find("name"); it != j.end()) name = text_of(*it, source, "name");
  try {
    return FiniteLattice::from_covers(std::move(name), std::move(labels), pairs);
  } catch (const ConfigurationError& e) {
    fail(source, "covers", e.what());
  }
}

namespace {

/// Labels in first-appearance order, or numeric order when every key is a
/// rational.
std::vector<std::string> collect_keys(const std::vector<std::pair<std::vector<std::string>, UnitScalar>>& entries) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : entries) {
    for (const auto& s : k) {
      if (std::find(keys.begin(), keys.end(), s) == keys.end()) keys.push_back(s);
    }
  }
  try {
    std::vector<std::pair<UnitScalar, std::string>> numeric;
    for (const auto& s : keys) numeric.emplace_back(UnitScalar::parse(s), s);
    std::stable_sort(numeric.begin(), numeric.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keys.clear();
    for (const auto& [v, s] : numeric) keys.push_back(s);
  } catch (const ParseError&) {
  }
  return keys;
}

Datum label_datum(const std::string& s) {
  try {
    return UnitScalar::parse(s);
  } catch (const ParseError&) {
    return s;
  }
}

}  // namespace

FuzzyEquality equality_from_json(const json& j, const Connective& t, const std::string& source) {
  const auto entries = entries_of(j, 2, source);
  const auto keys = collect_keys(entries);
  const std::size_t n = keys.size();
  std::vector<std::vector<std::optional<UnitScalar>>> table(n, std::vector<std::optional<UnitScalar>>(n));
  auto pos = [&](const std::string& s) { return std::find(keys.begin(), keys.end(), s) - keys.begin(); };
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& cell = table[pos(entries[i].first[0])][pos(entries[i].first[1])];
    if (cell) fail(source, index_field("entries", i), "pair listed twice");
    cell = entries[i].second;
  }
  std::vector<std::vector<UnitScalar>> degrees(n, std::vector<UnitScalar>(n));
  std::vector<Datum> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(label_datum(keys[a]));
    for (std::size_t b = 0; b < n; ++b) {
      if (!table[a][b]) fail(source, "entries", "missing pair (" + keys[a] + ", " + keys[b] + ")");
      degrees[a][b] = *table[a][b];
    }
  }
  return equality_from_table(source, std::move(labels), t, std::move(degrees));
}

VagueOperation vague_operation_from_json(const json& j, FuzzyEquality eq, const std::string& source) {
  const auto entries = entries_of(j, 3, source);
  const std::size_t n = eq.size();
  std::vector<std::string> keys;
  for (const auto& l : eq.labels) keys.push_back(to_string(l));
  auto pos = [&](const std::string& s, const std::string& field) -> std::size_t {
    auto it = std::find(keys.begin(), keys.end(), s);
    if (it == keys.end()) {
      // Rationals may be written differently from the equality file ("0.5" vs "1/2").
      try {
        const auto v = UnitScalar::parse(s).to_string();
        it = std::find(keys.begin(), keys.end(), v);
      } catch (const ParseError&) {
      }
    }
    if (it == keys.end()) fail(source, field, "'" + s + "' is not an element of the equality");
    return static_cast<std::size_t>(it - keys.begin());
  };
  std::vector<std::optional<UnitScalar>> flat(n * n * n);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto field = index_field("entries", i);
    const auto& k = entries[i].first;
    auto& cell = flat[(pos(k[0], field) * n + pos(k[1], field)) * n + pos(k[2], field)];
    if (cell) fail(source, field, "triple listed twice");
    cell = entries[i].second;
  }
  std::vector<std::vector<std::vector<UnitScalar>>> mu(n, std::vector<std::vector<UnitScalar>>(n, std::vector<UnitScalar>(n)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto& cell = flat[(x * n + y) * n + z];
        if (!cell) fail(source, "entries", "missing triple (" + keys[x] + ", " + keys[y] + ", " + keys[z] + ")");
        mu[x][y][z] = *cell;
      }
    }
  }
  return vague_operation_from_table(source, std::move(eq), mu);
}

SearchBudget apply_budget_override(SearchBudget base, const json& j, const std::string& source) {
  if (!j.is_object()) fail(source, "<root>", "expected an object");
  auto integer = [&](const char* key, auto& target) {
    auto it = j.find(key);
    if (it == j.end()) return;
    if (!it->is_number_integer()) fail(source, key, "expected an integer");
    const auto v = it->get<std::int64_t>();
    if (v < 0) fail(source, key, "must not be negative");
    target = static_cast<std::remove_reference_t<decltype(target)>>(v);
  };
  integer("n_max", base.n_max);
  integer("iter_cap", base.iter_cap);
  integer("max_witnesses", base.max_witnesses);
  integer("max_tuples", base.max_tuples);
  integer("arity_cap", base.arity_cap);
  if (auto it = j.find("epsilon"); it != j.end()) base.epsilon = rational_of(*it, source, "epsilon");
  if (auto it = j.find("float_epsilon"); it != j.end()) {
    if (!it->is_number()) fail(source, "float_epsilon", "expected a number");
    base.float_epsilon = it->get<double>();
  }
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> kKnown{"n_max",      "iter_cap",   "epsilon", "float_epsilon",
                                                 "max_witnesses", "max_tuples", "arity_cap"};
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) fail(source, key, "unknown budget field");
  }
  try {
    base.validate();
  } catch (const ConfigurationError& e) {
    fail(source, "<root>", e.what());
  }
  return base;
}

}  // namespace fuzznorm::io
