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

// Runs the twelve release criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fuzznorm/checker.hpp"
#include "fuzznorm/error.hpp"
#include "fuzznorm/fuzzy.hpp"
#include "fuzznorm/lattice.hpp"
#include "fuzznorm/vague.hpp"

namespace {

using namespace fuzznorm;

UnitScalar q(long p, long d = 1) { return {p, d}; }

const Connective kTM = tnorm(TNormFamily::kMinimum);
const Connective kTP = tnorm(TNormFamily::kProduct);
const Connective kTL = tnorm(TNormFamily::kLukasiewicz);
const Connective kTD = tnorm(TNormFamily::kDrastic);
const Connective kSM = tconorm(TConormFamily::kMaximum);
const Connective kSP = tconorm(TConormFamily::kProbabilisticSum);
const Connective kSL = tconorm(TConormFamily::kLukasiewicz);

/// Collects failure reasons for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool stationary_witness(const PropertyReport& r) {
  for (const auto& w : r.witnesses) {
    if (std::get<UnitScalar>(w.values[0]) == std::get<UnitScalar>(w.inputs[0])) return true;
  }
  return false;
}

bool closed_on(const Connective& t, const Domain& d) {
  for (const auto& x : d.points()) {
    for (const auto& y : d.points()) {
      if (!d.contains(t(x, y))) return false;
    }
  }
  return true;
}

void axiom_suite(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto d = Domain::grid(10);
  std::vector<Connective> all;
  for (auto f : all_tnorm_families()) all.push_back(tnorm(f));
  for (auto f : all_tconorm_families()) all.push_back(tconorm(f));
  for (const auto& k : all) {
    const auto r = check_axioms(k, d);
    c.expect(r.holds(), k.name() + " fails its axioms");
    const auto* assoc = r.find_check(k.role() == Role::kTNorm ? "T2-associativity" : "S2-associativity");
    c.expect(assoc != nullptr && assoc->instances >= 11u * 11u * 11u, k.name() + " associativity skipped triples");
  }
  c.expect(seconds_since(start) < 5.0, "runtime exceeded 5 s");
}

void archimedean_classification(Criterion& c) {
  const auto d = Domain::grid(10);
  SearchBudget b;
  b.n_max = 64;
  c.expect(check_archimedean(kTL, d, b).holds(), "T_L not Archimedean");
  c.expect(check_archimedean(kTP, d, b).holds(), "T_P not Archimedean");
  c.expect(check_limit_property(kTL, d, b).holds(), "T_L lacks the limit property");
  c.expect(check_limit_property(kTP, d, b).holds(), "T_P lacks the limit property");
  const auto m = check_archimedean(kTM, d, b);
  c.expect(m.fails() && stationary_witness(m), "T_M Archimedean or no stationary witness");
  const auto lim = check_limit_property(kTM, d, b);
  c.expect(lim.fails() && lim.violations == d.interior().size(), "T_M limit failures do not cover the interior");
}

void uninorm_structure(Criterion& c) {
  const auto d = Domain::grid(10);
  const auto e = q(1, 2);
  const auto u = construct_uninorm_min(e, kTP, kSP);
  c.expect(check_axioms(u, d).holds(), "U_min fails (U1)-(U4)");
  for (const auto& x : d.points()) {
    for (const auto& y : d.points()) {
      const bool mixed = (x < e && e < y) || (y < e && e < x);
      if (mixed && !(at_most(min(x, y), u(x, y)) && at_most(u(x, y), max(x, y)))) {
        c.expect(false, "U_min leaves [min, max] at (" + x.to_string() + ", " + y.to_string() + ")");
      }
    }
  }
  const auto cls = classify_uninorm(u, d);
  c.expect(cls.conjunctive && !cls.disjunctive, "U_min not classified conjunctive");
  const auto v = construct_uninorm_max(e, kTP, kSP);
  c.expect(check_axioms(v, d).holds(), "U_max fails (U1)-(U4)");
  c.expect(classify_uninorm(v, d).disjunctive, "U_max not classified disjunctive");
}

void subnorm_examples(Criterion& c) {
  const auto d = Domain::grid(10);
  SearchBudget all;
  all.max_witnesses = 0;
  c.expect(check_fuzzy_subnorm(subsets::identity(), kTM, d).holds(), "identity is not a subnorm of T_M");
  const auto p = check_fuzzy_subnorm(subsets::identity(), kTP, d, all);
  c.expect(p.fails() && p.contains_witness({q(1, 2), q(1, 2)}), "identity under T_P lacks witness (1/2, 1/2)");
  for (const auto& t : {kTM, kTP, kTL, kTD}) {
    c.expect(check_fuzzy_subnorm(subsets::one(), t, d).holds(), "constant 1 is not a subnorm of " + t.name());
  }
}

void chain_implications(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto chain = FiniteLattice::chain(4);
  const Domain d = Domain::grid(3);
  std::vector<Connective> tnorms;
  for (const auto& t : enumerate_lattice_tnorms(chain)) tnorms.push_back(as_connective(t, chain));
  c.expect(tnorms.size() >= 2, "fewer than two t-norms on the 4-chain");
  const auto tables = enumerate_subsets(d.points(), {q(0), q(1, 2), q(1)});
  c.expect(tables.size() == 81, "expected 81 tables");
  std::uint64_t strict_not_cancel = 0;
  std::uint64_t cancel_not_cond = 0;
  for (const auto& t : tnorms) {
    for (const auto& mu : tables) {
      const bool strict = check_fuzzy_property(mu, t, FuzzyProperty::kStrict, d).holds();
      const auto cancel = check_fuzzy_property(mu, t, FuzzyProperty::kCancel, d);
      const bool cond_fails = check_fuzzy_property(mu, t, FuzzyProperty::kConditionalCancel, d).fails();
      if (strict && cancel.fails()) ++strict_not_cancel;
      if (cancel.holds() && cond_fails) ++cancel_not_cond;
    }
  }
  c.expect(strict_not_cancel == 0, std::to_string(strict_not_cancel) + " FSTRICT without FCANCEL");
  c.expect(cancel_not_cond == 0, std::to_string(cancel_not_cond) + " FCANCEL without FCONDCANCEL");
  c.expect(seconds_since(start) < 60.0, "runtime exceeded 60 s");
}

void disjunctive_sweep(Criterion& c) {
  const auto d = Domain::grid(2);
  const auto u = construct_uninorm_max(q(1, 2), kTP, kSP);
  c.expect(closed_on(u, d), "the 3-point grid is not closed under U");
  const auto carrier = interval_carrier(u, d);
  std::vector<std::string> passing;
  for (const auto& mu : enumerate_subsets(d.points(), {q(0), q(1, 2), q(1)})) {
    if (check_fuzzy_submonoid(mu, carrier, SubstructureKind(Substructure::kUSubmonoid, u)).holds()) {
      bool all_one = true;
      for (const auto& x : d.points()) all_one = all_one && mu(x) == q(1);
      passing.push_back(all_one ? "one" : mu.name());
    }
  }
  c.expect(passing.size() == 1 && passing.front() == "one", "passing tables other than the constant 1");
}

void nullnorm_lower_bound(Criterion& c) {
  const auto f = construct_nullnorm(kSL, q(1, 2), kTL);
  const auto d = Domain::grid(2);
  std::uint64_t passing = 0;
  for (const auto& monoid : {kTM, kSM}) {
    const auto carrier = interval_carrier(monoid, d);
    for (const auto& mu : enumerate_subsets(d.points(), {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)})) {
      if (!check_fuzzy_submonoid(mu, carrier, SubstructureKind(Substructure::kFSubmonoid, f)).holds()) continue;
      ++passing;
      for (const auto& x : d.points()) c.expect(at_most(q(1, 2), mu(x)), mu.name() + " dips below 1/2");
    }
  }
  c.expect(passing > 0, "no table passed, so the sweep is empty");
}

void uninorm_refutation(Criterion& c) {
  const auto family = uninorm_family({q(1, 4), q(1, 2), q(3, 4)}, {kTP, kTL}, {kSP, kSL});
  const auto d = Domain::grid(10);
  auto run = [&](const FuzzySubset<UnitScalar>& mu, const std::vector<Connective>& carriers, bool norm) {
    for (const auto& carrier : carriers) {
      const auto r = refute_uninorm_existence(mu, carrier, family, d);
      for (const auto& m : r.members) {
        const std::string where = m.uninorm + " over " + carrier.name();
        c.expect(m.refuted(), mu.name() + " passes for " + where);
        if (!m.contradiction) {
          c.expect(false, "no distinguished pair for " + where);
          continue;
        }
        const auto x = std::get<UnitScalar>(m.contradiction->inputs[0]);
        const auto y = std::get<UnitScalar>(m.contradiction->inputs[1]);
        c.expect(norm ? x < y : y < x, "pair has the wrong orientation for " + where);
      }
    }
  };
  run(subsets::identity(), {kTP, kTL, kTM}, true);
  run(subsets::complement(), {kSP, kSL, kSM}, false);
  // The distinguished pair starts at the identity (or its mirror).
  for (const auto& u : family) {
    const auto r = refute_uninorm_existence(subsets::identity(), kTP, {u}, d);
    const auto x = std::get<UnitScalar>(r.members.front().contradiction->inputs[0]);
    c.expect(x == *u.identity(), "pair does not start at e for " + u.name());
    const auto s = refute_uninorm_existence(subsets::complement(), kSP, {u}, d);
    const auto xs = std::get<UnitScalar>(s.members.front().contradiction->inputs[0]);
    c.expect(xs == q(1) - *u.identity(), "pair does not start at 1-e for " + u.name());
  }
}

void vague_layer(Criterion& c) {
  const auto seven = Domain::grid(6);
  const auto eq = tabulate_equality("lukasiewicz", equalities::lukasiewicz(), seven, kTL);
  c.expect(validate_fuzzy_equality(eq).holds(), "1-|x-y| is not a T_L-equality");
  const auto v = induce_vague_tnorm("lukasiewicz", equalities::lukasiewicz(), kTL, seven);
  c.expect(check_vague_operation(v.op).holds(), "induced operation fails the vague-operation conditions");
  c.expect(check_vague_commutativity(v.op).holds(), "induced operation not vague commutative");
  const auto v4 = induce_vague_tnorm("lukasiewicz", equalities::lukasiewicz(), kTL, Domain::grid(4));
  c.expect(check_vague_monoid(v4.op).holds(), "vague monoid inequality fails on the 4-grid");

  // Degeneration with the crisp equality.
  for (const auto& d : {Domain::grid(4), Domain::from_points({q(1, 4), q(1, 2), q(3, 4), q(1)})}) {
    for (const auto& t : {kTM, kTP, kTL, kTD}) {
      if (!closed_on(t, d)) continue;
      const auto crisp = induce_vague_tnorm("crisp", equalities::crisp(), t, d);
      const auto axioms = check_axioms(t, d);
      c.expect(check_vague_operation(crisp.op).holds(), "crisp " + t.name() + " not a vague operation");
      c.expect(check_vague_commutativity(crisp.op).holds() == axioms.find_check("T1-commutativity")->holds(),
               "commutativity verdicts differ for " + t.name());
      c.expect(check_vague_monoid(crisp.op).holds() == axioms.find_check("T2-associativity")->holds(),
               "monoid verdicts differ for " + t.name());
      c.expect(check_vague_strict_monotone(crisp.op, VagueReading::kCrisp).fails() ==
                   check_strict_monotonicity(t, d).fails(),
               "strict monotonicity verdicts differ for " + t.name());
      c.expect(check_vague_cancellation(crisp.op, VagueReading::kCrisp).fails() ==
                   check_cancellation(t, d, Cancellation::kPlain).fails(),
               "cancellation verdicts differ for " + t.name());
    }
  }

  // Strict monotonicity implies cancellation across the corpus.
  std::uint64_t counterexamples = 0;
  const auto g = Domain::grid(6);
  std::vector<UnitScalar> positive(g.points().begin() + 1, g.points().end());
  for (const auto& d : {g, Domain::from_points(positive), Domain::from_points({q(1, 3), q(2, 3), q(1)})}) {
    for (const char* name : {"crisp", "lukasiewicz", "goedel", "product"}) {
      for (const auto& t : {kTM, kTP, kTL, kTD}) {
        if (!validate_fuzzy_equality(tabulate_equality(name, equalities::by_name(name), d, t)).holds()) continue;
        const auto op = induce_vague_tnorm(name, equalities::by_name(name), t, d).op;
        for (auto reading : {VagueReading::kLiteral, VagueReading::kCrisp}) {
          if (check_vague_strict_monotone(op, reading).holds() && check_vague_cancellation(op, reading).fails()) {
            ++counterexamples;
          }
        }
      }
    }
  }
  c.expect(counterexamples == 0, std::to_string(counterexamples) + " strictly monotone but not cancellative");
}

std::set<std::vector<std::vector<std::size_t>>> tnorm_tables_by_brute_force(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::set<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> digits(n * n, 0);
  while (true) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n * n; ++i) t[i / n][i % n] = digits[i];
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = t[l.top()][x] == x;
      for (std::size_t y = 0; y < n && ok; ++y) {
        ok = t[x][y] == t[y][x];
        for (std::size_t z = 0; z < n && ok; ++z) {
          ok = t[t[x][y]][z] == t[x][t[y][z]] && (!l.leq(y, z) || l.leq(t[x][y], t[x][z]));
        }
      }
    }
    if (ok) out.insert(t);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

void lattice_layer(Criterion& c) {
  for (std::size_t n : {2u, 3u}) {
    const auto l = FiniteLattice::chain(n);
    std::set<std::vector<std::vector<std::size_t>>> found;
    for (const auto& t : enumerate_lattice_tnorms(l)) found.insert(t.table);
    const auto oracle = tnorm_tables_by_brute_force(l);
    c.expect(found == oracle, "enumeration disagrees with brute force on the " + std::to_string(n) + "-chain");
    c.expect(found.size() == (n == 2 ? 1u : 2u), "wrong t-norm count on the " + std::to_string(n) + "-chain");
  }
  std::uint64_t bad13 = 0;
  std::uint64_t bad14 = 0;
  for (const auto& l : {FiniteLattice::chain(2), FiniteLattice::chain(3), FiniteLattice::chain(4),
                        FiniteLattice::diamond()}) {
    const auto subsets = enumerate_lsubsets(l);
    for (const auto& t : enumerate_lattice_tnorms(l)) {
      for (const auto& mu : subsets) {
        const bool strict = check_lattice_fuzzy_property(mu, t, l, FuzzyProperty::kStrict).holds();
        const auto cancel = check_lattice_fuzzy_property(mu, t, l, FuzzyProperty::kCancel);
        if (strict && cancel.fails()) ++bad13;
        if (cancel.holds() && check_lattice_fuzzy_property(mu, t, l, FuzzyProperty::kConditionalCancel).fails()) {
          ++bad14;
        }
      }
    }
  }
  c.expect(bad13 == 0, std::to_string(bad13) + " lattice FSTRICT without FCANCEL");
  c.expect(bad14 == 0, std::to_string(bad14) + " lattice FCANCEL without FCONDCANCEL");
  std::uint64_t bad15 = 0;
  const auto l3 = FiniteLattice::chain(3);
  for (const auto& t : enumerate_lattice_tnorms(l3)) {
    for (const auto& e : enumerate_lattice_equalities(l3)) {
      if (!validate_lattice_equality(e, t, l3).holds()) continue;
      const auto v = induce_lattice_vague_tnorm(e, t, l3);
      for (auto reading : {VagueReading::kLiteral, VagueReading::kCrisp}) {
        if (check_lattice_vague_strict_monotone(v, l3, reading).holds() &&
            check_lattice_vague_cancellation(v, l3, reading).fails()) {
          ++bad15;
        }
      }
    }
  }
  c.expect(bad15 == 0, std::to_string(bad15) + " lattice vague counterexamples");
}

void discrete_subalgebras(Criterion& c) {
  const auto l22 = discrete_chain(q(1, 2), 2, 2);
  c.expect(l22.size() == 5, "L_{2,2} should have five points");
  c.expect(check_discrete_subalgebra(l22, construct_uninorm_min(q(1, 2), kTL, kSL)).holds(),
           "L_{2,2} not closed under U_L");
  c.expect(check_discrete_subalgebra(l22, construct_nullnorm(kSL, q(1, 2), kTL)).holds(),
           "L_{2,2} not closed under F_L");
}

void cli_determinism(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> args{"suite", "--all", "--grid", "6", "--format", "json"};
  std::ostringstream first, second, err;
  const int a = cli::run(args, first, err);
  const int b = cli::run(args, second, err);
  c.expect(first.str() == second.str(), "suite output differs between runs");
  c.expect(a == b, "exit codes differ between runs");
  c.expect(a == cli::kExitHolds, "suite exit code " + std::to_string(a) + (err.str().empty() ? "" : ": " + err.str()));
  c.expect(seconds_since(start) < 300.0, "two suite runs exceeded 5 minutes");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"axiom suite", axiom_suite},
      {"archimedean and limit classification", archimedean_classification},
      {"uninorm structure", uninorm_structure},
      {"fuzzy t-subnorm examples", subnorm_examples},
      {"strict/cancel/conditional-cancel sweep on the 4-chain", chain_implications},
      {"disjunctive uninorm sweep", disjunctive_sweep},
      {"nullnorm lower-bound sweep", nullnorm_lower_bound},
      {"uninorm subnorm refutation", uninorm_refutation},
      {"vague layer", vague_layer},
      {"lattice layer", lattice_layer},
      {"discrete subalgebras", discrete_subalgebras},
      {"cli determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("threw: ") + e.what());
    }
    const double secs = seconds_since(start);
    std::cout << (c.passed() ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << std::fixed << std::setprecision(3) << secs
              << " s)\n";
    for (const auto& f : c.failures()) std::cout << "      " << f << "\n";
    failed += c.passed() ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
