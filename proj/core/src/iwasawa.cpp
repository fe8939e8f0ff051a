// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/iwasawa.hpp"

#include <istream>
#include <map>
#include <sstream>

#include "aclambda/errors.hpp"

namespace aclambda {

const char* to_string(PlaceClass c) {
  switch (c) {
    case PlaceClass::P1: return "P1";
    case PlaceClass::P2: return "P2";
    case PlaceClass::neither: return "neither";
  }
  return "?";
}

PlaceClass classify_place(const PlaceDatum& place, std::uint64_t /*p*/) {
  if (place.over_p) return PlaceClass::neither;
  if (place.reduction == ReductionType::split_mult) return PlaceClass::P1;
  if (place.ramified_over_base && place.reduction == ReductionType::good &&
      place.has_p_torsion_locally)
    return PlaceClass::P2;
  return PlaceClass::neither;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

void validate_tower(const TowerSpec& t) {
  if (t.p < 3 || t.p % 2 == 0) throw OutOfRange("p must be an odd prime");
  if (t.degree != 1 && !is_power_of(t.degree, t.p))
    throw OutOfRange("tower degree must be a power of p");
  if (!t.assumptions.mu_zero_cotorsion)
    throw AssumptionViolation("mu_zero_cotorsion",
                              "Selmer group must be cotorsion with mu = 0 over the base");
  if (!t.assumptions.good_ordinary_and_no_cm_or_no_p_torsion)
    throw AssumptionViolation("good_ordinary_and_no_cm_or_no_p_torsion",
                              "E must be good ordinary at p, and non-CM or without p-torsion");
  if (!t.assumptions.p_ramified_in_tower)
    throw AssumptionViolation("p_ramified_in_tower", "primes above p must ramify in K_inf");
  for (const PlaceDatum& w : t.places) {
    if (w.e == 0 || (w.e != 1 && !is_power_of(w.e, t.p)) || t.degree % w.e != 0)
      throw OutOfRange("place '" + w.label + "': e must be a power of p dividing the degree");
    if (w.ramified_over_base != (w.e > 1))
      throw OutOfRange("place '" + w.label + "': ramified_over_base must equal (e > 1)");
    if (classify_place(w, t.p) != PlaceClass::neither && !w.finitely_decomposed)
      throw DecompositionViolation(
          "assumption violated: finitely decomposed (place '" + w.label +
          "' lies in P1 u P2 and must sit over a finitely decomposed prime)");
  }
}

}  // namespace

std::int64_t kida_lambda(const TowerSpec& tower) {
  validate_tower(tower);
  std::int64_t lam = static_cast<std::int64_t>(tower.degree) *
                     static_cast<std::int64_t>(tower.lambda_K);
  for (const PlaceDatum& w : tower.places) {
    std::int64_t e1 = static_cast<std::int64_t>(w.e) - 1;
    switch (classify_place(w, tower.p)) {
      case PlaceClass::P1: lam += e1; break;
      case PlaceClass::P2: lam += 2 * e1; break;
      case PlaceClass::neither: break;
    }
  }
  return lam;
}

std::int64_t herbrand_ord(const TowerSpec& tower) {
  validate_tower(tower);
  if (tower.degree != tower.p)
    throw DegreeMismatch("herbrand_ord applies to degree-p towers only");
  std::int64_t total = 0;
  for (const PlaceDatum& w : tower.places) {
    PlaceClass cls = classify_place(w, tower.p);
    if (cls == PlaceClass::P1 && w.ramified_over_base) total += 1;
    if (cls == PlaceClass::P2) total += 2;  // P2 places are ramified by definition
  }
  return total;
}

std::int64_t lambda_via_herbrand(const TowerSpec& tower) {
  std::int64_t h = herbrand_ord(tower);
  return static_cast<std::int64_t>(tower.p) * static_cast<std::int64_t>(tower.lambda_K) +
         (static_cast<std::int64_t>(tower.p) - 1) * h;
}

LambdaResult lambda_difference(const LambdaLedger& ledger) {
  bool all_exact = true;
  std::int64_t exact_sum = ledger.lambda_1;
  std::int64_t lower = ledger.lambda_1;
  std::int64_t upper = ledger.lambda_1;
  bool lower_finite = true, upper_finite = true;
  for (const LedgerPlace& v : ledger.omega0) {
    if (v.sigma_1.value < 0 || v.sigma_2.value < 0)
      throw InvalidCorank("coranks are non-negative (place '" + v.label + "')");
    all_exact = all_exact && !v.sigma_1.is_lower_bound && !v.sigma_2.is_lower_bound;
    exact_sum += v.sigma_1.value - v.sigma_2.value;
    // lower bound of sigma_1 - sigma_2 needs sigma_2 bounded above
    if (v.sigma_2.is_lower_bound)
      lower_finite = false;
    else
      lower += v.sigma_1.value - v.sigma_2.value;
    // upper bound needs sigma_1 bounded above
    if (v.sigma_1.is_lower_bound)
      upper_finite = false;
    else
      upper += v.sigma_1.value - v.sigma_2.value;
  }
  LambdaResult r;
  if (all_exact) {
    r.exact = exact_sum;
    r.lower = exact_sum;
    r.upper = exact_sum;
    return r;
  }
  if (lower_finite) r.lower = lower;
  if (upper_finite) r.upper = upper;
  return r;
}

SigmaBound sigma_diff_bound(ReductionType e1, ReductionType e2, bool frob_trivial,
                            bool finitely_decomposed) {
  if (!finitely_decomposed)
    throw DecompositionViolation("sigma_diff_bound requires a finitely decomposed place");
  if (e1 != ReductionType::good || e2 == ReductionType::good)
    throw OutOfRange("comparison requires E1 good and E2 bad at the place");
  SigmaBound out;
  if (!frob_trivial) return out;  // bound 0
  if (e2 == ReductionType::additive)
    throw ContradictsLemma("E2 cannot have additive reduction at a finitely decomposed place "
                           "congruent to a good-reduction curve");
  if (e2 == ReductionType::nonsplit_mult)
    throw ContradictsLemma("nonsplit multiplicative reduction gives equal coranks, contradicting "
                           "the strict inequality; E2 must be split multiplicative");
  out.bound = 1;
  out.forces_split_mult = true;
  return out;
}

const char* to_string(Decomposition d) {
  return d == Decomposition::finitely_decomposed ? "finitely_decomposed"
                                                 : "infinitely_decomposed";
}

Decomposition anticyclotomic_sigma_class(std::uint64_t ell, bool splits_in_K, std::uint64_t p) {
  return (ell == p || splits_in_K) ? Decomposition::finitely_decomposed
                                   : Decomposition::infinitely_decomposed;
}

// ---- parsing ----

namespace {

struct KvBlock {
  std::map<std::string, std::string> kv;
  std::vector<std::map<std::string, std::string>> places;
};

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

KvBlock read_blocks(std::istream& in) {
  KvBlock out;
  std::map<std::string, std::string>* target = &out.kv;
  bool in_place = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string s = strip(line);
    if (s.empty()) continue;
    if (s == "place {") {
      if (in_place) throw SchemaError("line " + std::to_string(lineno) + ": nested place block");
      out.places.emplace_back();
      target = &out.places.back();
      in_place = true;
      continue;
    }
    if (s == "}") {
      if (!in_place) throw SchemaError("line " + std::to_string(lineno) + ": stray '}'");
      target = &out.kv;
      in_place = false;
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw SchemaError("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = strip(s.substr(0, eq));
    std::string val = strip(s.substr(eq + 1));
    if (key.empty() || val.empty())
      throw SchemaError("line " + std::to_string(lineno) + ": expected 'key = value'");
    if (target->count(key))
      throw SchemaError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    (*target)[key] = val;
  }
  if (in_place) throw SchemaError("unterminated place block");
  return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw SchemaError("key '" + key + "': expected true or false, got '" + v + "'");
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    std::uint64_t out = std::stoull(v, &used);
    if (used != v.size()) throw SchemaError("");
    return out;
  } catch (...) {
    throw SchemaError("key '" + key + "': expected a non-negative integer, got '" + v + "'");
  }
}

std::int64_t parse_i64(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    std::int64_t out = std::stoll(v, &used);
    if (used != v.size()) throw SchemaError("");
    return out;
  } catch (...) {
    throw SchemaError("key '" + key + "': expected an integer, got '" + v + "'");
  }
}

ReductionType parse_reduction(const std::string& v) {
  if (v == "good") return ReductionType::good;
  if (v == "split_mult") return ReductionType::split_mult;
  if (v == "nonsplit_mult") return ReductionType::nonsplit_mult;
  if (v == "additive") return ReductionType::additive;
  throw SchemaError("reduction must be good | split_mult | nonsplit_mult | additive, got '" + v +
                    "'");
}

SigmaVal parse_sigma(const std::string& v, const std::string& key) {
  SigmaVal s;
  std::string body = v;
  if (body.rfind(">=", 0) == 0) {
    s.is_lower_bound = true;
    body = strip(body.substr(2));
  }
  s.value = parse_i64(body, key);
  if (s.value < 0) throw SchemaError("key '" + key + "': coranks are non-negative");
  return s;
}

template <typename Map>
void reject_unknown(const Map& kv, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (const char* g : known) ok = ok || k == g;
    if (!ok) throw SchemaError(where + ": unknown key '" + k + "'");
  }
}

template <typename Map>
const std::string& require(const Map& kv, const std::string& key, const std::string& where) {
  auto it = kv.find(key);
  if (it == kv.end()) throw SchemaError(where + ": missing key '" + key + "'");
  return it->second;
}

}  // namespace

TowerSpec parse_tower_spec(std::istream& in) {
  KvBlock blocks = read_blocks(in);
  reject_unknown(blocks.kv,
                 {"p", "degree", "lambda_K", "assume_mu_zero_cotorsion",
                  "assume_good_ordinary_no_cm_or_no_p_torsion", "assume_p_ramified_in_tower"},
                 "tower spec");
  TowerSpec t;
  t.p = parse_u64(require(blocks.kv, "p", "tower spec"), "p");
  t.degree = parse_u64(require(blocks.kv, "degree", "tower spec"), "degree");
  t.lambda_K = parse_u64(require(blocks.kv, "lambda_K", "tower spec"), "lambda_K");
  t.assumptions.mu_zero_cotorsion =
      parse_bool(require(blocks.kv, "assume_mu_zero_cotorsion", "tower spec"),
                 "assume_mu_zero_cotorsion");
  t.assumptions.good_ordinary_and_no_cm_or_no_p_torsion =
      parse_bool(require(blocks.kv, "assume_good_ordinary_no_cm_or_no_p_torsion", "tower spec"),
                 "assume_good_ordinary_no_cm_or_no_p_torsion");
  t.assumptions.p_ramified_in_tower =
      parse_bool(require(blocks.kv, "assume_p_ramified_in_tower", "tower spec"),
                 "assume_p_ramified_in_tower");

  for (std::size_t i = 0; i < blocks.places.size(); ++i) {
    const auto& kv = blocks.places[i];
    std::string where = "place #" + std::to_string(i + 1);
    reject_unknown(kv,
                   {"label", "over_p", "e", "reduction", "ramified_over_base",
                    "has_p_torsion_locally", "finitely_decomposed"},
                   where);
    PlaceDatum w;
    w.label = kv.count("label") ? kv.at("label") : ("w" + std::to_string(i + 1));
    w.over_p = parse_bool(require(kv, "over_p", where), "over_p");
    w.e = parse_u64(require(kv, "e", where), "e");
    w.reduction = parse_reduction(require(kv, "reduction", where));
    w.ramified_over_base =
        kv.count("ramified_over_base")
            ? parse_bool(kv.at("ramified_over_base"), "ramified_over_base")
            : (w.e > 1);
    if (w.ramified_over_base != (w.e > 1))
      throw SchemaError(where + ": ramified_over_base must equal (e > 1)");
    w.has_p_torsion_locally = parse_bool(require(kv, "has_p_torsion_locally", where),
                                         "has_p_torsion_locally");
    w.finitely_decomposed = parse_bool(require(kv, "finitely_decomposed", where),
                                       "finitely_decomposed");
    t.places.push_back(std::move(w));
  }
  return t;
}

LambdaLedger parse_lambda_ledger(std::istream& in) {
  KvBlock blocks = read_blocks(in);
  reject_unknown(blocks.kv, {"p", "lambda_1"}, "lambda ledger");
  LambdaLedger led;
  led.p = parse_u64(require(blocks.kv, "p", "lambda ledger"), "p");
  led.lambda_1 = parse_i64(require(blocks.kv, "lambda_1", "lambda ledger"), "lambda_1");
  for (std::size_t i = 0; i < blocks.places.size(); ++i) {
    const auto& kv = blocks.places[i];
    std::string where = "place #" + std::to_string(i + 1);
    reject_unknown(kv, {"label", "sigma_1", "sigma_2"}, where);
    LedgerPlace v;
    v.label = kv.count("label") ? kv.at("label") : ("v" + std::to_string(i + 1));
    v.sigma_1 = parse_sigma(require(kv, "sigma_1", where), "sigma_1");
    v.sigma_2 = parse_sigma(require(kv, "sigma_2", where), "sigma_2");
    led.omega0.push_back(std::move(v));
  }
  return led;
}

}  // namespace aclambda
