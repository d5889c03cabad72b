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

#include "fuzznorm/report.hpp"

#include <algorithm>
#include <sstream>

#include "fuzznorm/error.hpp"

namespace fuzznorm {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "HOLDS_ON_DOMAIN";
    case Verdict::kFails: return "FAILS";
    case Verdict::kVacuous: return "VACUOUS";
  }
  return "?";
}

Verdict meet(Verdict a, Verdict b) {
  if (a == Verdict::kFails || b == Verdict::kFails) return Verdict::kFails;
  if (a == Verdict::kVacuous || b == Verdict::kVacuous) return Verdict::kVacuous;
  return Verdict::kHolds;
}

std::string to_string(const Datum& d) {
  if (const auto* s = std::get_if<UnitScalar>(&d)) return s->to_string();
  if (const auto* l = std::get_if<std::string>(&d)) return *l;
  return std::to_string(std::get<std::int64_t>(d));
}

bool operator<(const Witness& a, const Witness& b) {
  if (a.inputs != b.inputs) return a.inputs < b.inputs;
  return a.values < b.values;
}

bool operator==(const Witness& a, const Witness& b) { return a.inputs == b.inputs && a.values == b.values; }

void SearchBudget::validate() const {
  if (n_max < 1) throw ConfigurationError("n_max must be at least 1");
  if (iter_cap < 1) throw ConfigurationError("iter_cap must be at least 1");
  if (!(UnitScalar::zero() < epsilon)) throw ConfigurationError("epsilon must be positive");
  if (!(float_epsilon > 0)) throw ConfigurationError("float epsilon must be positive");
  if (max_tuples < 1) throw ConfigurationError("max_tuples must be positive");
  if (arity_cap < 2) throw ConfigurationError("arity cap must be at least 2");
}

void PropertyReport::add_violation(Witness w) {
  verdict = Verdict::kFails;
  ++violations;
  auto pos = std::lower_bound(witnesses.begin(), witnesses.end(), w);
  if (pos != witnesses.end() && *pos == w) return;
  if (budget.max_witnesses != 0 && witnesses.size() >= budget.max_witnesses) {
    if (pos == witnesses.end()) return;
    witnesses.pop_back();
    pos = std::lower_bound(witnesses.begin(), witnesses.end(), w);
  }
  witnesses.insert(pos, std::move(w));
}

void PropertyReport::mark_vacuous(std::string reason) {
  verdict = meet(verdict, Verdict::kVacuous);
  if (!reason.empty()) add_tag(std::move(reason));
}

void PropertyReport::add_tag(std::string tag) {
  if (!has_tag(tag)) tags.push_back(std::move(tag));
}

bool PropertyReport::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

void PropertyReport::merge(const PropertyReport& other) {
  verdict = meet(verdict, other.verdict);
  violations += other.violations;
  instances += other.instances;
  for (const auto& w : other.witnesses) {
    // add_violation would bump the counter a second time.
    auto pos = std::lower_bound(witnesses.begin(), witnesses.end(), w);
    if (pos != witnesses.end() && *pos == w) continue;
    witnesses.insert(pos, w);
  }
  if (budget.max_witnesses != 0 && witnesses.size() > budget.max_witnesses) {
    witnesses.resize(budget.max_witnesses);
  }
  for (const auto& t : other.tags) add_tag(t);
}

void PropertyReport::add_check(PropertyReport sub) {
  verdict = meet(verdict, sub.verdict);
  for (const auto& w : sub.witnesses) {
    auto pos = std::lower_bound(witnesses.begin(), witnesses.end(), w);
    if (pos != witnesses.end() && *pos == w) continue;
    witnesses.insert(pos, w);
  }
  if (budget.max_witnesses != 0 && witnesses.size() > budget.max_witnesses) {
    witnesses.resize(budget.max_witnesses);
  }
  violations += sub.violations;
  instances += sub.instances;
  checks.push_back(std::move(sub));
}

const PropertyReport* PropertyReport::find_check(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.property_id == id) return &c;
  }
  return nullptr;
}

bool PropertyReport::contains_witness(const std::vector<Datum>& inputs) const {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const Witness& w) { return w.inputs == inputs; });
}

PropertyReport make_report(std::string property_id, DomainInfo domain, const SearchBudget& budget) {
  PropertyReport r;
  r.property_id = std::move(property_id);
  r.domain = std::move(domain);
  r.budget = budget;
  return r;
}

namespace {

nlohmann::ordered_json datum_json(const Datum& d) {
  if (const auto* n = std::get_if<std::int64_t>(&d)) return *n;
  return to_string(d);
}

}  // namespace

nlohmann::ordered_json to_json(const SearchBudget& budget) {
  nlohmann::ordered_json j;
  j["n_max"] = budget.n_max;
  j["iter_cap"] = budget.iter_cap;
  j["epsilon"] = budget.epsilon.to_string();
  j["max_witnesses"] = budget.max_witnesses;
  j["max_tuples"] = budget.max_tuples;
  j["arity_cap"] = budget.arity_cap;
  return j;
}

nlohmann::ordered_json to_json(const PropertyReport& report) {
  nlohmann::ordered_json j;
  j["property_id"] = report.property_id;
  j["verdict"] = std::string(to_string(report.verdict));
  j["domain"] = {{"kind", report.domain.kind}, {"resolution", report.domain.resolution}};
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::ordered_json jw;
    jw["inputs"] = nlohmann::ordered_json::array();
    for (const auto& d : w.inputs) jw["inputs"].push_back(datum_json(d));
    jw["values"] = nlohmann::ordered_json::array();
    for (const auto& d : w.values) jw["values"].push_back(datum_json(d));
    witnesses.push_back(std::move(jw));
  }
  j["witnesses"] = std::move(witnesses);
  j["violations"] = report.violations;
  j["instances"] = report.instances;
  j["budget"] = to_json(report.budget);
  if (!report.tags.empty()) j["tags"] = report.tags;
  if (!report.notes.empty()) {
    nlohmann::ordered_json notes;
    for (const auto& [k, v] : report.notes) notes[k] = v;
    j["notes"] = std::move(notes);
  }
  if (!report.checks.empty()) {
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) j["checks"].push_back(to_json(c));
  }
  return j;
}

namespace {

std::string datum_text(const Datum& d) {
  if (const auto* s = std::get_if<UnitScalar>(&d)) return s->to_decimal();
  return to_string(d);
}

std::string join(const std::vector<Datum>& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ", ";
    out += datum_text(ds[i]);
  }
  return out;
}

}  // namespace

std::string to_text(const PropertyReport& report, int indent) {
  std::ostringstream os;
  std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << report.property_id << ": " << to_string(report.verdict) << " on " << report.domain.kind << "("
     << report.domain.resolution << ")";
  if (report.violations) os << ", " << report.violations << " violation(s)";
  if (!report.tags.empty()) {
    os << " [";
    for (std::size_t i = 0; i < report.tags.size(); ++i) os << (i ? ", " : "") << report.tags[i];
    os << "]";
  }
  os << "\n";
  for (const auto& [k, v] : report.notes) os << pad << "  " << k << ": " << v << "\n";
  for (const auto& w : report.witnesses) {
    os << pad << "  witness (" << join(w.inputs) << ") -> (" << join(w.values) << ")\n";
  }
  for (const auto& c : report.checks) os << to_text(c, indent + 2);
  return os.str();
}

int exit_code(const std::vector<Verdict>& verdicts) {
  Verdict v = Verdict::kHolds;
  for (auto x : verdicts) v = meet(v, x);
  switch (v) {
    case Verdict::kHolds: return 0;
    case Verdict::kFails: return 1;
    case Verdict::kVacuous: return 2;
  }
  return 1;
}

}  // namespace fuzznorm
