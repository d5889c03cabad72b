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

#include "fuzznorm/connective.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <utility>

#include "fuzznorm/error.hpp"

namespace fuzznorm {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::kTNorm: return "TNORM";
    case Role::kTConorm: return "TCONORM";
    case Role::kUninorm: return "UNINORM";
    case Role::kNullnorm: return "NULLNORM";
    case Role::kAggregation: return "AGGREGATION";
  }
  return "?";
}

Connective::Connective(std::string name, Role role, BinaryFn fn, std::optional<UnitScalar> identity,
                       std::optional<UnitScalar> absorber)
    : name_(std::move(name)),
      role_(role),
      binary_(std::move(fn)),
      identity_(std::move(identity)),
      absorber_(std::move(absorber)) {
  if (!identity_) {
    if (role_ == Role::kTNorm) identity_ = UnitScalar::one();
    if (role_ == Role::kTConorm) identity_ = UnitScalar::zero();
  }
}

Connective Connective::aggregation(std::string name, NaryFn fn) {
  BinaryFn binary = [fn](const UnitScalar& x, const UnitScalar& y) {
    const UnitScalar args[2] = {x, y};
    return fn(args);
  };
  Connective c(std::move(name), Role::kAggregation, std::move(binary));
  c.nary_ = std::move(fn);
  return c;
}

UnitScalar Connective::operator()(std::span<const UnitScalar> args) const {
  if (nary_) return nary_(args);
  if (args.empty()) {
    if (!identity_) throw DomainError("empty fold over '" + name_ + "', which declares no identity");
    return *identity_;
  }
  UnitScalar acc = args.front();
  for (std::size_t i = 1; i < args.size(); ++i) acc = binary_(acc, args[i]);
  return acc;
}

Connective Connective::renamed(std::string name) const {
  Connective c = *this;
  c.name_ = std::move(name);
  return c;
}

TNormFamily parse_tnorm_family(std::string_view name) {
  if (name.starts_with("tnorm:")) name.remove_prefix(6);
  if (name == "min" || name == "minimum") return TNormFamily::kMinimum;
  if (name == "product") return TNormFamily::kProduct;
  if (name == "lukasiewicz") return TNormFamily::kLukasiewicz;
  if (name == "drastic") return TNormFamily::kDrastic;
  throw ConfigurationError("unknown t-norm family '" + std::string(name) + "'");
}

TConormFamily parse_tconorm_family(std::string_view name) {
  if (name.starts_with("tconorm:")) name.remove_prefix(8);
  if (name == "max" || name == "maximum") return TConormFamily::kMaximum;
  if (name == "probsum") return TConormFamily::kProbabilisticSum;
  if (name == "lukasiewicz") return TConormFamily::kLukasiewicz;
  if (name == "drastic") return TConormFamily::kDrastic;
  throw ConfigurationError("unknown t-conorm family '" + std::string(name) + "'");
}

std::string_view short_name(TNormFamily family) {
  switch (family) {
    case TNormFamily::kMinimum: return "min";
    case TNormFamily::kProduct: return "product";
    case TNormFamily::kLukasiewicz: return "lukasiewicz";
    case TNormFamily::kDrastic: return "drastic";
  }
  return "?";
}

std::string_view short_name(TConormFamily family) {
  switch (family) {
    case TConormFamily::kMaximum: return "max";
    case TConormFamily::kProbabilisticSum: return "probsum";
    case TConormFamily::kLukasiewicz: return "lukasiewicz";
    case TConormFamily::kDrastic: return "drastic";
  }
  return "?";
}

UnitScalar eval_tnorm(TNormFamily family, const UnitScalar& x, const UnitScalar& y) {
  switch (family) {
    case TNormFamily::kMinimum:
      return min(x, y);
    case TNormFamily::kProduct:
      return x * y;
    case TNormFamily::kLukasiewicz:
      return max(x + y - UnitScalar::one(), UnitScalar::zero());
    case TNormFamily::kDrastic:
      // Exact comparison against 1: only the boundary keeps a value.
      if (x < UnitScalar::one() && y < UnitScalar::one()) return UnitScalar::zero();
      return min(x, y);
  }
  throw ConfigurationError("unknown t-norm family");
}

UnitScalar eval_tconorm(TConormFamily family, const UnitScalar& x, const UnitScalar& y) {
  switch (family) {
    case TConormFamily::kMaximum:
      return max(x, y);
    case TConormFamily::kProbabilisticSum:
      return x + y - x * y;
    case TConormFamily::kLukasiewicz:
      return min(x + y, UnitScalar::one());
    case TConormFamily::kDrastic:
      if (UnitScalar::zero() < x && UnitScalar::zero() < y) return UnitScalar::one();
      return max(x, y);
  }
  throw ConfigurationError("unknown t-conorm family");
}

UnitScalar eval_tnorm(std::string_view family, const UnitScalar& x, const UnitScalar& y) {
  return eval_tnorm(parse_tnorm_family(family), x, y);
}

UnitScalar eval_tconorm(std::string_view family, const UnitScalar& x, const UnitScalar& y) {
  return eval_tconorm(parse_tconorm_family(family), x, y);
}

Connective tnorm(TNormFamily family) {
  return Connective("tnorm:" + std::string(short_name(family)), Role::kTNorm,
                    [family](const UnitScalar& x, const UnitScalar& y) { return eval_tnorm(family, x, y); });
}

Connective tconorm(TConormFamily family) {
  return Connective("tconorm:" + std::string(short_name(family)), Role::kTConorm,
                    [family](const UnitScalar& x, const UnitScalar& y) { return eval_tconorm(family, x, y); });
}

Connective aggregation_min() {
  return Connective::aggregation("aggregation:min", [](std::span<const UnitScalar> xs) {
    if (xs.empty()) return UnitScalar::one();
    return *std::min_element(xs.begin(), xs.end());
  });
}

Connective aggregation_max() {
  return Connective::aggregation("aggregation:max", [](std::span<const UnitScalar> xs) {
    if (xs.empty()) return UnitScalar::zero();
    return *std::max_element(xs.begin(), xs.end());
  });
}

Connective aggregation_mean() {
  return Connective::aggregation("aggregation:mean", [](std::span<const UnitScalar> xs) {
    if (xs.empty()) throw DomainError("mean of an empty list");
    UnitScalar sum;
    for (const auto& x : xs) sum = sum + x;
    return sum / UnitScalar(static_cast<long>(xs.size()));
  });
}

UnitScalar power_iterate(const Connective& c, const UnitScalar& x, std::int64_t n) {
  if (n < 0) throw DomainError("negative exponent");
  if (n == 0) {
    if (!c.identity()) throw DomainError("x^(0) requested for '" + c.name() + "', which declares no identity");
    return *c.identity();
  }
  UnitScalar acc = x;
  for (std::int64_t i = 1; i < n; ++i) acc = c(acc, x);
  return acc;
}

namespace {

std::string operand_name(const Connective& c, std::string_view prefix) {
  std::string_view n = c.name();
  if (n.starts_with(prefix)) n.remove_prefix(prefix.size());
  return std::string(n);
}

void require_open_unit(const UnitScalar& p, std::string_view what) {
  if (!(UnitScalar::zero() < p && p < UnitScalar::one())) {
    throw DegenerateParameterError(std::string(what) + " must lie strictly between 0 and 1, got " +
                                   p.to_string() + "; use the plain t-norm or t-conorm instead");
  }
}

void require_role(const Connective& c, Role role, std::string_view what) {
  if (c.role() != role) {
    throw ConfigurationError(std::string(what) + " '" + c.name() + "' has role " +
                             std::string(to_string(c.role())) + ", expected " + std::string(to_string(role)));
  }
}

Connective make_uninorm(const UnitScalar& e, const Connective& t, const Connective& s, bool use_max) {
  require_open_unit(e, "uninorm identity e");
  require_role(t, Role::kTNorm, "t-norm operand");
  require_role(s, Role::kTConorm, "t-conorm operand");
  std::string name = std::string("uninorm:") + (use_max ? "umax" : "umin") + "(e=" + e.to_string() +
                     ",T=" + operand_name(t, "tnorm:") + ",S=" + operand_name(s, "tconorm:") + ")";
  const UnitScalar one = UnitScalar::one();
  auto fn = [e, t, s, use_max, one](const UnitScalar& x, const UnitScalar& y) {
    if (x <= e && y <= e) return e * t(x / e, y / e);
    if (e <= x && e <= y) {
      const UnitScalar span = one - e;
      return e + span * s((x - e) / span, (y - e) / span);
    }
    return use_max ? max(x, y) : min(x, y);
  };
  return Connective(std::move(name), Role::kUninorm, std::move(fn), e);
}

}  // namespace

Connective construct_uninorm_min(const UnitScalar& e, const Connective& t, const Connective& s) {
  return make_uninorm(e, t, s, false);
}

Connective construct_uninorm_max(const UnitScalar& e, const Connective& t, const Connective& s) {
  return make_uninorm(e, t, s, true);
}

Connective construct_nullnorm(const Connective& s, const UnitScalar& k, const Connective& t) {
  require_open_unit(k, "nullnorm absorber k");
  require_role(s, Role::kTConorm, "t-conorm operand");
  require_role(t, Role::kTNorm, "t-norm operand");
  std::string name = "nullnorm:<" + operand_name(s, "tconorm:") + "-S," + k.to_string() + "," +
                     operand_name(t, "tnorm:") + "-T>";
  const UnitScalar one = UnitScalar::one();
  auto fn = [s, k, t, one](const UnitScalar& x, const UnitScalar& y) {
    if (x <= k && y <= k) return k * s(x / k, y / k);
    if (k < x && k < y) {
      const UnitScalar span = one - k;
      return span * t((x - k) / span, (y - k) / span) + k;
    }
    return k;
  };
  return Connective(std::move(name), Role::kNullnorm, std::move(fn), std::nullopt, k);
}

Connective dualize(const Connective& c) {
  if (c.role() != Role::kTNorm && c.role() != Role::kTConorm) {
    throw DomainError("dualize expects a t-norm or t-conorm, got '" + c.name() + "'");
  }
  const Role dual_role = c.role() == Role::kTNorm ? Role::kTConorm : Role::kTNorm;
  const UnitScalar one = UnitScalar::one();
  auto fn = [c, one](const UnitScalar& x, const UnitScalar& y) { return one - c(one - x, one - y); };
  return Connective("dual(" + c.name() + ")", dual_role, std::move(fn));
}

Connective table_connective(std::string name, Role role, std::vector<UnitScalar> points,
                            std::vector<std::vector<UnitScalar>> table, std::optional<UnitScalar> identity,
                            std::optional<UnitScalar> absorber) {
  if (table.size() != points.size()) throw DomainError("table row count does not match the point set");
  for (const auto& row : table) {
    if (row.size() != points.size()) throw DomainError("table is not square");
  }
  auto index = std::make_shared<std::map<UnitScalar, std::size_t>>();
  for (std::size_t i = 0; i < points.size(); ++i) (*index)[points[i]] = i;
  auto cells = std::make_shared<const std::vector<std::vector<UnitScalar>>>(std::move(table));
  std::string label = name;
  auto fn = [index, cells, label](const UnitScalar& x, const UnitScalar& y) {
    auto ix = index->find(x);
    auto iy = index->find(y);
    if (ix == index->end() || iy == index->end()) {
      throw NotTotalError("'" + label + "' is undefined at (" + x.to_string() + ", " + y.to_string() + ")");
    }
    return (*cells)[ix->second][iy->second];
  };
  return Connective(std::move(name), role, std::move(fn), std::move(identity), std::move(absorber));
}

Connective float_connective(std::string name, Role role, std::function<double(double, double)> fn,
                            std::optional<UnitScalar> identity, std::optional<UnitScalar> absorber) {
  auto wrapped = [fn = std::move(fn)](const UnitScalar& x, const UnitScalar& y) {
    return UnitScalar::approx(fn(x.to_double(), y.to_double()));
  };
  return Connective(std::move(name), role, std::move(wrapped), std::move(identity), std::move(absorber));
}

namespace {

std::vector<std::string> split_args(std::string_view body) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : body) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

// Splits "key=value" into its parts; positional arguments have an empty key.
std::pair<std::string, std::string> key_value(const std::string& arg) {
  auto eq = arg.find('=');
  if (eq == std::string::npos) return {"", arg};
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

Connective parse_uninorm(std::string_view id, std::string_view rest) {
  bool use_max;
  if (rest.starts_with("umin(")) {
    use_max = false;
  } else if (rest.starts_with("umax(")) {
    use_max = true;
  } else {
    throw ConfigurationError("unknown uninorm form '" + std::string(id) + "'");
  }
  if (!rest.ends_with(")")) throw ConfigurationError("unterminated uninorm id '" + std::string(id) + "'");
  auto args = split_args(rest.substr(5, rest.size() - 6));
  if (args.size() != 3) throw ConfigurationError("uninorm id needs e, T and S: '" + std::string(id) + "'");
  std::string e_text, t_text, s_text;
  const char* positional[3] = {"e", "T", "S"};
  for (std::size_t i = 0; i < args.size(); ++i) {
    auto [key, value] = key_value(args[i]);
    if (key.empty()) key = positional[i];
    if (key == "e") {
      e_text = value;
    } else if (key == "T") {
      t_text = value;
    } else if (key == "S") {
      s_text = value;
    } else {
      throw ConfigurationError("unknown uninorm parameter '" + key + "' in '" + std::string(id) + "'");
    }
  }
  UnitScalar e;
  try {
    e = UnitScalar::parse(e_text);
  } catch (const ParseError& err) {
    throw ConfigurationError("bad identity in '" + std::string(id) + "': " + err.what());
  }
  Connective t = tnorm(parse_tnorm_family(t_text));
  Connective s = tconorm(parse_tconorm_family(s_text));
  return use_max ? construct_uninorm_max(e, t, s) : construct_uninorm_min(e, t, s);
}

Connective parse_nullnorm(std::string_view id, std::string_view rest) {
  if (!rest.starts_with("<") || !rest.ends_with(">")) {
    throw ConfigurationError("nullnorm id must look like nullnorm:<S,k,T>: '" + std::string(id) + "'");
  }
  auto args = split_args(rest.substr(1, rest.size() - 2));
  if (args.size() != 3) throw ConfigurationError("nullnorm id needs S, k and T: '" + std::string(id) + "'");
  auto strip = [](std::string s, std::string_view suffix) {
    if (s.size() > suffix.size() && s.ends_with(suffix)) s.resize(s.size() - suffix.size());
    return s;
  };
  UnitScalar k;
  try {
    k = UnitScalar::parse(args[1]);
  } catch (const ParseError& err) {
    throw ConfigurationError("bad absorber in '" + std::string(id) + "': " + err.what());
  }
  Connective s = tconorm(parse_tconorm_family(strip(args[0], "-S")));
  Connective t = tnorm(parse_tnorm_family(strip(args[2], "-T")));
  return construct_nullnorm(s, k, t);
}

}  // namespace

Connective parse_connective(std::string_view id) {
  auto colon = id.find(':');
  if (colon == std::string_view::npos) throw ConfigurationError("connective id needs a role prefix: '" + std::string(id) + "'");
  std::string_view kind = id.substr(0, colon);
  std::string_view rest = id.substr(colon + 1);
  if (kind == "tnorm") return tnorm(parse_tnorm_family(rest));
  if (kind == "tconorm") return tconorm(parse_tconorm_family(rest));
  if (kind == "aggregation") {
    if (rest == "min") return aggregation_min();
    if (rest == "max") return aggregation_max();
    if (rest == "mean") return aggregation_mean();
    throw ConfigurationError("unknown aggregation function '" + std::string(id) + "'");
  }
  if (kind == "uninorm") return parse_uninorm(id, rest);
  if (kind == "nullnorm") return parse_nullnorm(id, rest);
  throw ConfigurationError("unknown connective id '" + std::string(id) + "'");
}

}  // namespace fuzznorm
