// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_CLI_HPP
#define ACLAMBDA_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aclambda/bigint.hpp"
#include "aclambda/search.hpp"

namespace aclambda {

// Exit codes shared by every subcommand so batch scripts can branch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;      // bad config, schema violation
inline constexpr int kExitCost = 3;        // cost guard tripped
inline constexpr int kExitNotFound = 4;    // no verified candidate in budget
inline constexpr int kExitAssumption = 5;  // named assumption violated

enum class Command { sieve, find_t, kida, lambda_ledger };
enum class OutputFormat { text, json };

struct RunConfig {
  Command command = Command::sieve;
  std::uint64_t bound = 100'000;
  std::vector<std::uint64_t> primes;
  std::optional<BigInt> check_t;
  std::uint64_t max_candidates = 1;
  FindTBudget budget;
  std::string cache_path;  // empty: no cache
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool admissibility = true;
  std::string input_file;  // tower-spec / ledger file
};

int cmd_sieve(const RunConfig& cfg, std::ostream& out);
int cmd_find_t(const RunConfig& cfg, std::ostream& out);
int cmd_kida(const RunConfig& cfg, std::ostream& out);
int cmd_lambda_ledger(const RunConfig& cfg, std::ostream& out);

// Dispatches on cfg.command and maps library errors onto the exit-code
// taxonomy; error text goes to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace aclambda

#endif  // ACLAMBDA_CLI_HPP
