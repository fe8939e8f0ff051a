// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// Command-line front end: prime search for the Rubin--Silverberg family,
// parameter verification, and lambda-invariant bookkeeping.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aclambda/cli.hpp"
#include "aclambda/errors.hpp"

namespace {

void add_common(CLI::App* cmd, aclambda::RunConfig& cfg) {
  cmd->add_option("--format", [&cfg](const std::vector<std::string>& v) {
        if (v[0] == "json") {
          cfg.format = aclambda::OutputFormat::json;
          return true;
        }
        if (v[0] == "text") {
          cfg.format = aclambda::OutputFormat::text;
          return true;
        }
        return false;
      },
      "Output format: text (default) or json");
  cmd->add_option("--seed", cfg.seed, "Seed for randomized subroutines (default 0)");
  cmd->add_option("--workers", cfg.workers, "Worker threads (default 1)");
}

}  // namespace

int main(int argc, char** argv) {
  aclambda::RunConfig cfg;
  std::string check_t;

  CLI::App app{"elliptic curves with large anticyclotomic lambda-invariants"};
  app.require_subcommand(1);

  CLI::App* sieve = app.add_subcommand(
      "sieve", "Search primes satisfying conditions (1)-(4) and admissibility");
  sieve->add_option("--bound", cfg.bound, "Upper bound for the prime search")->required();
  sieve->add_option("--cache", cfg.cache_path, "Prime cache file (reused when the header matches)");
  sieve->add_flag("--no-admissibility{false}", cfg.admissibility,
                  "Drop the admissibility (set A) condition");
  add_common(sieve, cfg);

  CLI::App* findt = app.add_subcommand(
      "find-t", "Find/verify parameters t with bad reduction at the given primes");
  findt->add_option("--primes", cfg.primes, "Primes from A' (space separated)")
      ->required()
      ->expected(-1);
  findt->add_option("--check-t", check_t, "Verify this t instead of searching");
  findt->add_option("--max-candidates", cfg.max_candidates,
                    "Stop after this many verified candidates (default 1)");
  findt->add_option("--max-lifts", cfg.budget.max_lifts,
                    "Total CRT lifts to scan before giving up (default 256)");
  findt->add_option("--rho-budget", cfg.budget.factor.rho_iterations,
                    "Pollard rho iterations per attempt (default 2^26)");
  add_common(findt, cfg);

  CLI::App* kida = app.add_subcommand("kida", "Evaluate the generalized Kida formula");
  kida->add_option("tower", cfg.input_file, "Tower-spec file")->required();
  add_common(kida, cfg);

  CLI::App* ledger = app.add_subcommand(
      "lambda-ledger", "Compare lambda-invariants of congruent curves via Omega_0 coranks");
  ledger->add_option("ledger", cfg.input_file, "Ledger file")->required();
  add_common(ledger, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return aclambda::kExitConfig;
  }

  if (sieve->parsed()) cfg.command = aclambda::Command::sieve;
  if (findt->parsed()) cfg.command = aclambda::Command::find_t;
  if (kida->parsed()) cfg.command = aclambda::Command::kida;
  if (ledger->parsed()) cfg.command = aclambda::Command::lambda_ledger;

  if (!check_t.empty()) {
    try {
      cfg.check_t = aclambda::BigInt::from_decimal(check_t);
    } catch (const aclambda::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return aclambda::kExitConfig;
    }
  }

  return aclambda::run(cfg, std::cout, std::cerr);
}
