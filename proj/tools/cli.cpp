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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "fuzznorm/checker.hpp"
#include "fuzznorm/error.hpp"
#include "fuzznorm/fuzzy.hpp"
#include "fuzznorm/io.hpp"
#include "fuzznorm/lattice.hpp"
#include "fuzznorm/suite.hpp"
#include "fuzznorm/vague.hpp"

namespace fuzznorm::cli {

namespace {

using nlohmann::ordered_json;

struct Shared {
  std::optional<std::int64_t> grid;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> iter_cap;
  std::optional<std::string> epsilon;
  std::optional<std::uint64_t> max_witnesses;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
};

void add_shared(CLI::App& app, Shared& s) {
  app.add_option("--grid", s.grid, "Grid resolution n (points i/n)");
  app.add_option("--nmax", s.n_max, "Largest power searched for Archimedean witnesses");
  app.add_option("--iter-cap", s.iter_cap, "Largest power iterated for limit properties");
  app.add_option("--epsilon", s.epsilon, "Limit threshold as p/q");
  app.add_option("--max-witnesses", s.max_witnesses, "Witnesses kept per report (0 keeps all)");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", s.out, "Write the report to this path instead of standard output");
  app.add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

SearchBudget budget_of(const Shared& s) {
  SearchBudget b;
  if (const char* blob = std::getenv("FUZZNORM_BUDGET_OVERRIDE"); blob != nullptr && *blob != '\0') {
    b = io::apply_budget_override(b, io::parse_json(blob, "FUZZNORM_BUDGET_OVERRIDE"), "FUZZNORM_BUDGET_OVERRIDE");
  }
  if (s.n_max) b.n_max = *s.n_max;
  if (s.iter_cap) b.iter_cap = *s.iter_cap;
  if (s.epsilon) b.epsilon = UnitScalar::parse(*s.epsilon);
  if (s.max_witnesses) b.max_witnesses = *s.max_witnesses;
  b.validate();
  return b;
}

std::int64_t grid_of(const Shared& s, std::int64_t fallback) {
  const auto n = s.grid.value_or(fallback);
  if (n < 2) throw ConfigurationError("--grid must be at least 2");
  return n;
}

std::vector<std::string> split(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

bool looks_like_file(const std::string& text) {
  return text.size() > 5 && text.substr(text.size() - 5) == ".json";
}

/// Writes the rendered output to --out or the given stream.
void emit(const Shared& s, std::ostream& out, const std::string& text) {
  if (s.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(s.out);
  if (!file) throw ConfigurationError("cannot write " + s.out);
  file << text;
}

int emit_reports(const Shared& s, std::ostream& out, const std::string& command,
                 const std::vector<PropertyReport>& reports, ordered_json context = ordered_json::object()) {
  std::vector<Verdict> verdicts;
  for (const auto& r : reports) verdicts.push_back(r.verdict);
  const int code = exit_code(verdicts);
  if (s.format == "text") {
    std::string text;
    for (const auto& r : reports) text += to_text(r);
    text += "exit " + std::to_string(code) + "\n";
    emit(s, out, text);
  } else {
    ordered_json j;
    j["command"] = command;
    for (auto& [k, v] : context.items()) j[k] = v;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    j["exit_code"] = code;
    emit(s, out, j.dump(2) + "\n");
  }
  return code;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  Shared shared;
  std::string connective;
  std::vector<std::string> props{"axioms"};
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const auto props = split(a.props);
  const auto& known = known_property_ids();
  for (const auto& p : props) {
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      throw ConfigurationError("unknown property '" + p + "'");
    }
  }
  const Connective c = parse_connective(a.connective);
  const SearchBudget budget = budget_of(a.shared);
  std::vector<PropertyReport> reports;
  for (const auto& p : props) {
    // Pairwise scans default to a finer grid than triple loops and iterations.
    const Domain d = Domain::grid(grid_of(a.shared, p == "classify" ? 100 : 10));
    reports.push_back(check_property(p, c, d, budget));
  }
  return emit_reports(a.shared, out, "check", reports, {{"connective", c.name()}});
}

// ---------------------------------------------------------------------------

struct SubstructureArgs {
  Shared shared;
  std::string mu;
  std::string carrier;
  std::string kind;
  std::optional<std::string> combiner;
  std::vector<std::string> fuzzy;
  std::optional<std::string> characterize;
  bool core = false;
};

std::optional<Connective> default_combiner(Substructure tag, const Connective& carrier) {
  switch (tag) {
    case Substructure::kASubmonoid:
      if (carrier.role() == Role::kAggregation || carrier.role() == Role::kTNorm || carrier.role() == Role::kTConorm) {
        return carrier;
      }
      break;
    case Substructure::kUSubmonoid:
      if (carrier.role() == Role::kUninorm || carrier.role() == Role::kTNorm || carrier.role() == Role::kTConorm) {
        return carrier;
      }
      break;
    case Substructure::kFSubmonoid:
      if (carrier.role() == Role::kNullnorm) return carrier;
      break;
    default:
      break;
  }
  return std::nullopt;
}

template <class E>
PropertyReport substructure_report(Substructure tag, const FuzzySubset<E>& mu, const Carrier<E>& c,
                                   const std::optional<Connective>& combiner, const SearchBudget& budget) {
  if (tag == Substructure::kSubgroupoid) return check_fuzzy_subgroupoid(mu, c, budget);
  if (tag == Substructure::kSubgroup) return check_fuzzy_subgroup(mu, c, budget);
  return check_fuzzy_submonoid(mu, c, SubstructureKind(tag, combiner), budget);
}

int cmd_substructure(const SubstructureArgs& a, std::ostream& out) {
  const Substructure tag = parse_substructure(a.kind);
  const SearchBudget budget = budget_of(a.shared);
  std::optional<Connective> combiner;
  if (a.combiner) combiner = parse_connective(*a.combiner);
  for (const auto& f : split(a.fuzzy)) parse_fuzzy_property(f);
  std::vector<PropertyReport> reports;
  ordered_json context{{"kind", std::string(to_string(tag))}};

  if (looks_like_file(a.carrier)) {
    if (!a.fuzzy.empty() || a.characterize) {
      throw ConfigurationError("--fuzzy and --case need an interval carrier given by a connective id");
    }
    Carrier<FiniteElement> c = io::carrier_from_json(io::read_json(a.carrier), a.carrier);
    if (tag == Substructure::kSubgroup) c = with_inverses(std::move(c));
    const auto mu = a.mu.rfind("builtin:", 0) == 0
                        ? io::subset_on_carrier_from_json(ordered_json{{"form", a.mu}}, c, a.mu)
                        : io::subset_on_carrier_from_json(io::read_json(a.mu), c, a.mu);
    require_total(mu, c);
    context["carrier"] = c.name;
    reports.push_back(substructure_report(tag, mu, c, combiner, budget));
    if (a.core) reports.push_back(extract_core(mu, c, budget).report);
    return emit_reports(a.shared, out, "substructure", reports, context);
  }

  const Connective carrier = parse_connective(a.carrier);
  if (!combiner) combiner = default_combiner(tag, carrier);
  const auto mu = a.mu.rfind("builtin:", 0) == 0 ? subsets::builtin(a.mu)
                                                 : io::subset_from_json(io::read_json(a.mu), a.mu);
  // A-submonoids loop over triples; the other kinds over pairs.
  Domain d = Domain::grid(grid_of(a.shared, tag == Substructure::kASubmonoid ? 10 : 100));
  if (carrier.identity()) d = d.with_points({*carrier.identity()});
  const auto c = interval_carrier(carrier, d);
  require_total(mu, c);
  context["carrier"] = carrier.name();
  context["subset"] = mu.name();
  reports.push_back(substructure_report(tag, mu, c, combiner, budget));
  if (a.core) reports.push_back(extract_core(mu, c, budget).report);
  for (const auto& f : split(a.fuzzy)) {
    reports.push_back(check_fuzzy_property(mu, carrier, parse_fuzzy_property(f), Domain::grid(grid_of(a.shared, 10)),
                                           budget));
  }
  if (a.characterize) {
    const Connective used = a.combiner ? *combiner : carrier;
    const std::optional<Connective> monoid = a.combiner ? std::optional<Connective>(carrier) : std::nullopt;
    reports.push_back(characterize_special_cases(*a.characterize, mu, used, d, monoid, budget));
  }
  return emit_reports(a.shared, out, "substructure", reports, context);
}

// ---------------------------------------------------------------------------

struct VagueArgs {
  Shared shared;
  std::string equality = "lukasiewicz";
  std::string tnorm = "tnorm:lukasiewicz";
  std::optional<std::string> mu;
  std::vector<std::string> props{"equality,operation,commutativity"};
  std::string reading = "literal";
};

int cmd_vague(const VagueArgs& a, std::ostream& out) {
  const auto props = split(a.props);
  static const std::vector<std::string> kKnown{"equality",        "operation",    "monoid",           "commutativity",
                                               "strict-monotone", "cancellation", "group-cancellation"};
  for (const auto& p : props) {
    if (std::find(kKnown.begin(), kKnown.end(), p) == kKnown.end()) {
      throw ConfigurationError("unknown vague property '" + p + "'");
    }
  }
  const Connective t = parse_connective(a.tnorm);
  const SearchBudget budget = budget_of(a.shared);
  const VagueReading reading = a.reading == "crisp" ? VagueReading::kCrisp : VagueReading::kLiteral;
  const bool heavy = std::find(props.begin(), props.end(), "monoid") != props.end();
  const Domain d = Domain::grid(grid_of(a.shared, heavy ? 4 : 6));

  FuzzyEquality eq = looks_like_file(a.equality)
                         ? io::equality_from_json(io::read_json(a.equality), t, a.equality)
                         : tabulate_equality(a.equality, equalities::by_name(a.equality), d, t);
  std::vector<PropertyReport> reports;
  auto validity = validate_fuzzy_equality(eq, budget);
  const bool valid = validity.holds();
  if (std::find(props.begin(), props.end(), "equality") != props.end()) reports.push_back(validity);

  std::optional<VagueOperation> op;
  if (a.mu) {
    op = io::vague_operation_from_json(io::read_json(*a.mu), eq, *a.mu);
  } else if (looks_like_file(a.equality)) {
    throw ConfigurationError("an equality given as a table needs --mu");
  } else if (valid) {
    op = induce_vague_tnorm(a.equality, equalities::by_name(a.equality), t, d, budget).op;
  }
  if (!op) {
    // The induced operation is undefined for an invalid equality: report that alone.
    if (reports.empty()) reports.push_back(validity);
    return emit_reports(a.shared, out, "vague", reports, {{"equality", eq.name}, {"tnorm", t.name()}});
  }
  for (const auto& p : props) {
    if (p == "operation") reports.push_back(check_vague_operation(*op, budget));
    if (p == "monoid") reports.push_back(check_vague_monoid(*op, budget));
    if (p == "commutativity") reports.push_back(check_vague_commutativity(*op, budget));
    if (p == "strict-monotone") reports.push_back(check_vague_strict_monotone(*op, reading, budget));
    if (p == "cancellation") reports.push_back(check_vague_cancellation(*op, reading, budget));
    if (p == "group-cancellation") reports.push_back(check_vague_group_cancellation(make_vague_group(*op), budget));
  }
  return emit_reports(a.shared, out, "vague", reports,
                      {{"equality", eq.name}, {"tnorm", t.name()}, {"operation", op->name}});
}

// ---------------------------------------------------------------------------

struct LatticeArgs {
  Shared shared;
  std::string lattice = "diamond";
  std::string tnorm = "meet";
  std::string mu = "identity";
  std::vector<std::string> props{"tnorm"};
  std::string reading = "literal";
};

FiniteLattice lattice_of(const std::string& text) {
  if (text == "diamond") return FiniteLattice::diamond();
  if (text.rfind("chain:", 0) == 0) {
    try {
      return FiniteLattice::chain(std::stoul(text.substr(6)));
    } catch (const std::logic_error&) {
      throw ConfigurationError("malformed chain size in '" + text + "'");
    }
  }
  if (looks_like_file(text)) return io::lattice_from_json(io::read_json(text), text);
  throw ConfigurationError("lattice must be 'diamond', 'chain:N' or a .json file, got '" + text + "'");
}

LatticeTNorm lattice_tnorm_of(const std::string& text, const FiniteLattice& l) {
  if (text == "meet") return meet_tnorm(l);
  if (text.rfind('#', 0) == 0) {
    const auto all = enumerate_lattice_tnorms(l);
    std::size_t k = 0;
    try {
      k = std::stoul(text.substr(1));
    } catch (const std::logic_error&) {
      throw ConfigurationError("malformed t-norm index '" + text + "'");
    }
    if (k >= all.size()) {
      throw ConfigurationError(l.name() + " has " + std::to_string(all.size()) + " t-norms; no " + text);
    }
    return all[k];
  }
  throw ConfigurationError("t-norm must be 'meet' or '#k', got '" + text + "'");
}

LSubset lsubset_of(const std::string& text, const FiniteLattice& l) {
  LSubset mu(l.size());
  if (text == "identity") {
    for (std::size_t i = 0; i < l.size(); ++i) mu[i] = i;
    return mu;
  }
  if (text == "one") return LSubset(l.size(), l.top());
  const auto labels = split({text});
  if (labels.size() != l.size()) {
    throw NotTotalError("--mu lists " + std::to_string(labels.size()) + " values for " + std::to_string(l.size()) +
                        " elements");
  }
  for (std::size_t i = 0; i < l.size(); ++i) mu[i] = l.index_of(labels[i]);
  return mu;
}

int cmd_lattice(const LatticeArgs& a, std::ostream& out) {
  const FiniteLattice l = lattice_of(a.lattice);
  const SearchBudget budget = budget_of(a.shared);
  const VagueReading reading = a.reading == "crisp" ? VagueReading::kCrisp : VagueReading::kLiteral;
  const LatticeTNorm t = lattice_tnorm_of(a.tnorm, l);
  std::vector<PropertyReport> reports;
  ordered_json context{{"lattice", l.name()}, {"tnorm", t.name}};
  for (const auto& p : split(a.props)) {
    if (p == "tnorm") {
      reports.push_back(check_lattice_tnorm(t, l, budget));
    } else if (p == "enumerate") {
      const auto all = enumerate_lattice_tnorms(l);
      context["tnorm_count"] = all.size();
      for (const auto& each : all) reports.push_back(check_lattice_tnorm(each, l, budget));
    } else if (p == "subnorm") {
      reports.push_back(check_lattice_fuzzy_subnorm(lsubset_of(a.mu, l), t, l, budget));
    } else if (p == "vague" || p == "vague-strict-monotone" || p == "vague-cancellation") {
      const auto v = induce_lattice_vague_tnorm(crisp_lattice_equality(l), t, l, budget);
      if (p == "vague") reports.push_back(check_lattice_vague_structures(v, l, budget));
      if (p == "vague-strict-monotone") reports.push_back(check_lattice_vague_strict_monotone(v, l, reading, budget));
      if (p == "vague-cancellation") reports.push_back(check_lattice_vague_cancellation(v, l, reading, budget));
    } else {
      reports.push_back(check_lattice_fuzzy_property(lsubset_of(a.mu, l), t, l, parse_fuzzy_property(p), budget));
    }
  }
  return emit_reports(a.shared, out, "lattice", reports, context);
}

// ---------------------------------------------------------------------------

struct SuiteArgs {
  Shared shared;
  bool all = false;
  std::vector<std::string> only;
  bool timings = false;
};

int cmd_suite(const SuiteArgs& a, std::ostream& out) {
  SuiteConfig config;
  config.grid = grid_of(a.shared, config.grid);
  config.only = split(a.only);
  config.budget = budget_of(a.shared);
  config.jobs = a.shared.jobs;
  const auto result = run_suite(config);
  if (a.shared.format == "text") {
    emit(a.shared, out, to_text(result));
  } else {
    emit(a.shared, out, to_json(result, a.timings).dump(2) + "\n");
  }
  return result.exit_code();
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  Shared shared;
  std::string what;
  std::string lattice = "chain:3";
  std::vector<std::string> points;
  std::vector<std::string> alphabet{"0,1/2,1"};
};

std::vector<UnitScalar> scalars(const std::vector<std::string>& items) {
  std::vector<UnitScalar> out;
  for (const auto& s : split(items)) out.push_back(UnitScalar::parse(s));
  return out;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  ordered_json j;
  j["what"] = a.what;
  ordered_json items = ordered_json::array();
  if (a.what == "tnorms") {
    const auto l = lattice_of(a.lattice);
    j["lattice"] = l.name();
    for (const auto& t : enumerate_lattice_tnorms(l)) {
      ordered_json table = ordered_json::array();
      for (const auto& row : t.table) {
        ordered_json r = ordered_json::array();
        for (auto v : row) r.push_back(l.label(v));
        table.push_back(std::move(r));
      }
      items.push_back({{"name", t.name}, {"table", std::move(table)}});
    }
  } else if (a.what == "subsets") {
    const SearchBudget budget = budget_of(a.shared);
    const auto points = a.points.empty() ? Domain::grid(grid_of(a.shared, 2)).points() : scalars(a.points);
    for (const auto& mu : enumerate_subsets(points, scalars(a.alphabet), budget)) items.push_back(mu.name());
  } else if (a.what == "rows") {
    for (const auto& r : suite_catalog()) items.push_back({{"id", r.id}, {"claim", r.claim}});
  } else if (a.what == "properties") {
    for (const auto& p : known_property_ids()) items.push_back(p);
  } else if (a.what == "cases") {
    for (const auto& c : known_characterization_cases()) items.push_back(c);
  } else {
    throw ConfigurationError("cannot enumerate '" + a.what + "'");
  }
  j["count"] = items.size();
  j["items"] = std::move(items);
  if (a.shared.format == "text") {
    std::string text;
    for (const auto& item : j["items"]) text += (item.is_string() ? item.get<std::string>() : item.dump()) + "\n";
    emit(a.shared, out, text);
  } else {
    emit(a.shared, out, j.dump(2) + "\n");
  }
  return kExitHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks t-norm style connectives and their fuzzy substructures", "fuzznorm"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check properties of one connective on a grid");
  check_cmd->add_option("connective", check.connective, "Connective id, e.g. tnorm:product")->required();
  check_cmd->add_option("--props", check.props, "Comma-separated property ids");
  add_shared(*check_cmd, check.shared);

  SubstructureArgs sub;
  auto* sub_cmd = app.add_subcommand("substructure", "Check a fuzzy subset against a substructure kind");
  sub_cmd->add_option("--mu", sub.mu, "builtin:<name> or a JSON subset file")->required();
  sub_cmd->add_option("--carrier", sub.carrier, "Connective id or a JSON finite carrier file")->required();
  sub_cmd->add_option("--kind", sub.kind, "subgroupoid, subgroup, submonoid, t-subnorm, ...")->required();
  sub_cmd->add_option("--combiner", sub.combiner, "Connective replacing the minimum");
  sub_cmd->add_option("--fuzzy", sub.fuzzy, "Fuzzified properties: FSTRICT, FCANCEL, ...");
  sub_cmd->add_option("--case", sub.characterize, "Characterization case to evaluate");
  sub_cmd->add_flag("--core", sub.core, "Also extract and check the core");
  add_shared(*sub_cmd, sub.shared);

  VagueArgs vague;
  auto* vague_cmd = app.add_subcommand("vague", "Check fuzzy equalities and vague operations");
  vague_cmd->add_option("--equality", vague.equality, "crisp, lukasiewicz, goedel, product or a JSON table");
  vague_cmd->add_option("--tnorm", vague.tnorm, "Connective id of the t-norm");
  vague_cmd->add_option("--mu", vague.mu, "JSON table of the vague operation");
  vague_cmd->add_option("--props", vague.props, "Comma-separated vague checks");
  vague_cmd->add_option("--reading", vague.reading, "Premise matching")->check(CLI::IsMember({"literal", "crisp"}));
  add_shared(*vague_cmd, vague.shared);

  LatticeArgs lat;
  auto* lat_cmd = app.add_subcommand("lattice", "Check lattice t-norms and L-subsets");
  lat_cmd->add_option("--lattice", lat.lattice, "diamond, chain:N or a JSON lattice file");
  lat_cmd->add_option("--tnorm", lat.tnorm, "meet or #k (k-th enumerated t-norm)");
  lat_cmd->add_option("--mu", lat.mu, "identity, one or comma-separated labels");
  lat_cmd->add_option("--props", lat.props, "tnorm, enumerate, subnorm, FSTRICT, ..., vague");
  lat_cmd->add_option("--reading", lat.reading, "Premise matching")->check(CLI::IsMember({"literal", "crisp"}));
  add_shared(*lat_cmd, lat.shared);

  SuiteArgs suite;
  auto* suite_cmd = app.add_subcommand("suite", "Run the verification matrix");
  suite_cmd->add_flag("--all", suite.all, "Run every row (the default)");
  suite_cmd->add_option("--only", suite.only, "Comma-separated row ids");
  suite_cmd->add_flag("--timings", suite.timings, "Include per-row runtime in JSON output");
  add_shared(*suite_cmd, suite.shared);

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "List t-norms, subsets, suite rows, properties or cases");
  en_cmd->add_option("what", en.what, "tnorms, subsets, rows, properties or cases")->required();
  en_cmd->add_option("--lattice", en.lattice, "Lattice for tnorms");
  en_cmd->add_option("--points", en.points, "Carrier points for subsets");
  en_cmd->add_option("--alphabet", en.alphabet, "Value alphabet for subsets");
  add_shared(*en_cmd, en.shared);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check, out);
    if (*sub_cmd) return cmd_substructure(sub, out);
    if (*vague_cmd) return cmd_vague(vague, out);
    if (*lat_cmd) return cmd_lattice(lat, out);
    if (*suite_cmd) return cmd_suite(suite, out);
    if (*en_cmd) return cmd_enumerate(en, out);
  } catch (const NotTotalError& e) {
    err << "fuzznorm: " << e.what() << "\n";
    return kExitNotTotal;
  } catch (const BudgetError& e) {
    err << "fuzznorm: refused: " << e.what() << "\n";
    return kExitVacuous;
  } catch (const Error& e) {
    err << "fuzznorm: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fuzznorm::cli
