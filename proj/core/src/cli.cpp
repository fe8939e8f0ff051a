// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "aclambda/errors.hpp"
#include "aclambda/iwasawa.hpp"
#include "aclambda/polymod.hpp"
#include "aclambda/rsfamily.hpp"

namespace aclambda {

namespace {

using nlohmann::json;

// the paper-style rendering of a split sextic: (x + c) with c = ell - root
std::string factored_form(std::uint64_t ell, const std::vector<std::uint64_t>& rts) {
  std::ostringstream os;
  for (std::uint64_t r : rts) os << "(x + " << (r == 0 ? 0 : ell - r) << ")";
  return os.str();
}

json stats_json(const SearchStats& st) {
  return json{{"primes_examined", st.primes_examined}, {"failed_c1", st.failed_c1},
              {"failed_c4", st.failed_c4},             {"failed_adm", st.failed_adm},
              {"failed_c2", st.failed_c2},             {"failed_c3", st.failed_c3},
              {"survivors", st.survivors}};
}

json treport_json(const TReport& r) {
  json jf = json::array();
  for (const auto& [p, e] : r.factorization.factors)
    jf.push_back(json::array({p.to_decimal(), e}));
  json j{{"t", r.t.to_decimal()},
         {"primes", r.primes},
         {"f_value", r.f_value.to_decimal()},
         {"divisibility", r.divisibility},
         {"factors", jf},
         {"factorization_status", r.factorization.complete() ? "complete" : "partial"},
         {"all_factors_1mod4", to_string(r.all_factors_1mod4)},
         {"status", to_string(r.status)}};
  j["cofactor"] = r.factorization.cofactor ? json(r.factorization.cofactor->to_decimal())
                                           : json(nullptr);
  j["lambda_bound"] = r.lambda_bound ? json(*r.lambda_bound) : json(nullptr);
  return j;
}

void print_treport_text(const TReport& r, std::ostream& out) {
  out << "t = " << r.t.to_decimal() << "  [" << to_string(r.status) << "]\n";
  out << "  f(t) = " << r.f_value.to_decimal() << "\n";
  out << "  divisibility:";
  for (std::size_t i = 0; i < r.primes.size(); ++i)
    out << " " << r.primes[i] << (r.divisibility[i] ? " yes" : " no");
  out << "\n  factorization (" << (r.factorization.complete() ? "complete" : "partial") << "):";
  bool first = true;
  for (const auto& [p, e] : r.factorization.factors) {
    out << (first ? " " : " * ") << p.to_decimal();
    if (e > 1) out << "^" << e;
    first = false;
  }
  if (r.factorization.cofactor)
    out << (first ? " " : " * ") << r.factorization.cofactor->to_decimal() << " (composite)";
  out << "\n  all prime factors = 1 mod 4: " << to_string(r.all_factors_1mod4) << "\n";
  if (r.lambda_bound)
    out << "  lambda(E_t/K^ac) >= " << *r.lambda_bound << "\n";
}

FindTBudget budget_from(const RunConfig& cfg) {
  FindTBudget b = cfg.budget;
  b.factor.seed = cfg.seed;
  return b;
}

void validate_common(const RunConfig& cfg) {
  if (cfg.workers < 1) throw SchemaError("workers must be >= 1");
  if (cfg.bound > 1'000'000'000ull) throw CostGuard("bound exceeds 10^9");
}

}  // namespace

int cmd_sieve(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  SearchOptions opts;
  opts.workers = cfg.workers;
  opts.filter.check_admissibility = cfg.admissibility;

  std::vector<std::uint64_t> cands;
  SearchStats stats;
  bool from_cache = false;
  if (!cfg.cache_path.empty()) {
    if (auto cached = load_prime_cache(cfg.cache_path, cfg.bound, cfg.admissibility)) {
      cands = std::move(*cached);
      from_cache = true;
    }
  }
  if (!from_cache) {
    cands = find_candidates(cfg.bound, opts, stats);
    if (!cfg.cache_path.empty())
      save_prime_cache(cfg.cache_path, cfg.bound, cfg.admissibility, cands);
  }

  const RSFamily& rs = RSFamily::instance();
  if (cfg.format == OutputFormat::json) {
    json j{{"command", "sieve"},
           {"bound", cfg.bound},
           {"admissibility", cfg.admissibility},
           {"source", from_cache ? "cache" : "computed"},
           {"candidates", cands}};
    json jl = json::array();
    for (std::uint64_t ell : cands) {
      std::vector<std::uint64_t> rts = roots(rs.phi5e_mod(ell), cfg.seed);
      jl.push_back(json{{"ell", ell}, {"phi5_roots", rts},
                        {"phi5_factored", factored_form(ell, rts)}});
    }
    j["candidate_details"] = jl;
    if (!from_cache) j["stats"] = stats_json(stats);
    out << j.dump(2) << "\n";
  } else {
    out << "prime search: conditions (1)-(4) plus admissibility, bound " << cfg.bound << "\n";
    if (!cfg.admissibility) out << "admissibility check disabled\n";
    if (from_cache) {
      out << "candidates loaded from cache: " << cfg.cache_path << "\n";
    } else {
      out << "examined " << stats.primes_examined << " primes > 5: "
          << "failed c1 " << stats.failed_c1 << ", failed c4 " << stats.failed_c4
          << ", failed adm " << stats.failed_adm << ", failed c2 " << stats.failed_c2
          << ", failed c3 " << stats.failed_c3 << ", survivors " << stats.survivors << "\n";
    }
    out << "members of A' up to " << cfg.bound << ": " << cands.size() << "\n";
    for (std::uint64_t ell : cands) {
      std::vector<std::uint64_t> rts = roots(rs.phi5e_mod(ell), cfg.seed);
      out << "  " << ell << "  Phi5^E = " << factored_form(ell, rts) << " in F_" << ell
          << "[x]\n";
    }
  }
  return kExitOk;
}

int cmd_find_t(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  if (cfg.primes.empty()) throw SchemaError("find-t needs --primes");
  FilterOptions fopts;
  fopts.check_admissibility = cfg.admissibility;
  for (std::uint64_t ell : cfg.primes) {
    PrimeCandidate c = candidate_filter(ell, fopts);
    if (!c.in_a_prime())
      throw SchemaError("prime " + std::to_string(ell) + " fails the filter at " +
                        to_string(c.first_fail));
  }

  FindTBudget budget = budget_from(cfg);
  std::vector<TReport> reports;
  if (cfg.check_t) {
    reports.push_back(verify_t(*cfg.check_t, cfg.primes, budget));
  } else {
    reports = find_t(cfg.primes, cfg.max_candidates, budget);
  }

  std::size_t verified = 0;
  for (const TReport& r : reports)
    if (r.status == TStatus::verified) ++verified;

  if (cfg.format == OutputFormat::json) {
    json jr = json::array();
    for (const TReport& r : reports) jr.push_back(treport_json(r));
    json j{{"command", "find-t"},
           {"primes", cfg.primes},
           {"verified_count", verified},
           {"reports", jr}};
    out << j.dump(2) << "\n";
  } else {
    out << "find-t over primes {";
    for (std::size_t i = 0; i < cfg.primes.size(); ++i)
      out << (i ? ", " : "") << cfg.primes[i];
    out << "}\n";
    for (const TReport& r : reports) print_treport_text(r, out);
    out << verified << " verified candidate(s)\n";
  }
  return verified > 0 ? kExitOk : kExitNotFound;
}

namespace {

TowerSpec load_tower(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open tower spec '" + path + "'");
  return parse_tower_spec(f);
}

LambdaLedger load_ledger(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open ledger '" + path + "'");
  return parse_lambda_ledger(f);
}

}  // namespace

int cmd_kida(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input_file.empty()) throw SchemaError("kida needs a tower-spec file");
  TowerSpec tower = load_tower(cfg.input_file);
  std::int64_t lam = kida_lambda(tower);

  bool degree_p = tower.degree == tower.p;
  std::int64_t herb = 0, lam2 = 0;
  if (degree_p) {
    herb = herbrand_ord(tower);
    lam2 = lambda_via_herbrand(tower);
  }

  if (cfg.format == OutputFormat::json) {
    json jp = json::array();
    for (const PlaceDatum& w : tower.places)
      jp.push_back(json{{"label", w.label},
                        {"class", to_string(classify_place(w, tower.p))},
                        {"e", w.e}});
    json j{{"command", "kida"},          {"p", tower.p},
           {"degree", tower.degree},     {"lambda_K", tower.lambda_K},
           {"places", jp},               {"lambda_L", lam}};
    if (degree_p) {
      j["herbrand_ord"] = herb;
      j["lambda_via_herbrand"] = lam2;
      j["consistent"] = (lam == lam2);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "tower: p = " << tower.p << ", [L_inf : K_inf] = " << tower.degree
        << ", lambda(E/K_inf) = " << tower.lambda_K << "\n";
    for (const PlaceDatum& w : tower.places)
      out << "  place " << w.label << ": e = " << w.e << ", "
          << to_string(classify_place(w, tower.p)) << "\n";
    out << "lambda(E/L_inf) = " << lam << "\n";
    if (degree_p) {
      out << "degree-p consistency: ord_p h_G = " << herb << ", p*lambda_K + (p-1)*ord_p h_G = "
          << lam2 << (lam == lam2 ? " (consistent)" : " (MISMATCH)") << "\n";
    }
  }
  return kExitOk;
}

int cmd_lambda_ledger(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input_file.empty()) throw SchemaError("lambda-ledger needs a ledger file");
  LambdaLedger led = load_ledger(cfg.input_file);
  LambdaResult res = lambda_difference(led);

  auto describe = [&]() -> std::string {
    if (res.exact) return "lambda_2 = " + std::to_string(*res.exact);
    std::string s;
    if (res.lower) s += "lambda_2 >= " + std::to_string(*res.lower);
    if (res.upper) s += std::string(s.empty() ? "" : ", ") + "lambda_2 <= " + std::to_string(*res.upper);
    if (s.empty()) s = "lambda_2 unconstrained";
    return s;
  };

  if (cfg.format == OutputFormat::json) {
    json jp = json::array();
    for (const LedgerPlace& v : led.omega0) {
      auto sig = [](const SigmaVal& s) {
        return json{{"value", s.value}, {"lower_bound", s.is_lower_bound}};
      };
      jp.push_back(json{{"label", v.label}, {"sigma_1", sig(v.sigma_1)}, {"sigma_2", sig(v.sigma_2)}});
    }
    json j{{"command", "lambda-ledger"}, {"p", led.p}, {"lambda_1", led.lambda_1},
           {"places", jp}};
    j["lambda_2_exact"] = res.exact ? json(*res.exact) : json(nullptr);
    j["lambda_2_lower"] = res.lower ? json(*res.lower) : json(nullptr);
    j["lambda_2_upper"] = res.upper ? json(*res.upper) : json(nullptr);
    j["summary"] = describe();
    out << j.dump(2) << "\n";
  } else {
    out << "lambda ledger: p = " << led.p << ", lambda_1 = " << led.lambda_1 << ", "
        << led.omega0.size() << " place(s) in Omega_0\n";
    for (const LedgerPlace& v : led.omega0) {
      auto sig = [](const SigmaVal& s) {
        return (s.is_lower_bound ? ">=" : "") + std::to_string(s.value);
      };
      out << "  " << v.label << ": sigma_1 " << sig(v.sigma_1) << ", sigma_2 " << sig(v.sigma_2)
          << "\n";
    }
    out << describe() << "\n";
    out << "imprimitive form: lambda_1 + sum sigma_1 = lambda_2 + sum sigma_2 (the "
           "Omega_0-imprimitive lambda-invariants coincide)\n";
  }
  return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::sieve: return cmd_sieve(cfg, out);
      case Command::find_t: return cmd_find_t(cfg, out);
      case Command::kida: return cmd_kida(cfg, out);
      case Command::lambda_ledger: return cmd_lambda_ledger(cfg, out);
    }
    err << "error: unknown command\n";
    return kExitConfig;
  } catch (const CostGuard& e) {
    err << "error: " << e.what() << "\n";
    return kExitCost;
  } catch (const AssumptionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const DecompositionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const RootNotFound& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotFound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace aclambda
