// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_SEARCH_HPP
#define ACLAMBDA_SEARCH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aclambda/bigint.hpp"
#include "aclambda/factor.hpp"

namespace aclambda {

// Ascending primes in [lo, hi]; segmented sieve of Eratosthenes with
// segments of 2^20 odd values. hi is guarded to 10^9.
std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi);

// The five membership conditions for the set A' of useful primes:
//   c1: ell = 1 mod 5           c4: ell = 1 mod 4
//   c2: a_ell = 2 mod 5 for y^2 = x^3 - x
//   c3: Phi5^E splits into distinct linear factors mod ell
//   adm: ell does not divide Res(f, f')
enum class FilterStage : std::uint8_t { c1, c4, adm, c2, c3, none };

const char* to_string(FilterStage s);

struct PrimeCandidate {
  std::uint64_t ell = 0;
  bool c1 = false, c2 = false, c3 = false, c4 = false, adm = false;
  FilterStage first_fail = FilterStage::none;  // none when all five hold

  bool in_a_prime() const { return c1 && c2 && c3 && c4 && adm; }
};

struct FilterOptions {
  bool check_admissibility = true;
  // Evaluation order; cheapest-first by default. Changing the order never
  // changes membership, only which stage is recorded as the first failure.
  std::array<FilterStage, 5> order = {FilterStage::c1, FilterStage::c4, FilterStage::adm,
                                      FilterStage::c2, FilterStage::c3};
};

// Evaluates the conditions in the configured order, short-circuiting at the
// first failure. ell must exceed 5.
PrimeCandidate candidate_filter(std::uint64_t ell, const FilterOptions& opts = {});

struct SearchStats {
  std::uint64_t primes_examined = 0;
  std::uint64_t failed_c1 = 0, failed_c4 = 0, failed_adm = 0, failed_c2 = 0, failed_c3 = 0;
  std::uint64_t survivors = 0;
};

struct SearchOptions {
  unsigned workers = 1;
  FilterOptions filter;
};

// All primes ell <= bound with every flag true, ascending. Deterministic for
// any worker count. bound is guarded to 10^9.
std::vector<std::uint64_t> find_candidates(std::uint64_t bound, const SearchOptions& opts = {});
std::vector<std::uint64_t> find_candidates(std::uint64_t bound, const SearchOptions& opts,
                                           SearchStats& stats);

enum class Tri : std::uint8_t { yes, no, unknown };
enum class TStatus : std::uint8_t { verified, unverified, rejected };

const char* to_string(Tri t);
const char* to_string(TStatus s);

// Verification record for one parameter value t.
struct TReport {
  BigInt t;
  std::vector<std::uint64_t> primes;
  BigInt f_value;
  std::vector<bool> divisibility;  // aligned with primes
  FactorReport factorization;
  Tri all_factors_1mod4 = Tri::unknown;
  std::optional<int> lambda_bound;
  TStatus status = TStatus::rejected;
};

struct FindTBudget {
  FactorBudget factor;
  std::uint64_t max_lifts = 256;  // total candidates scanned before giving up
};

// Checks ell_i | f(t) for each supplied prime, factors f(t) within budget,
// tests every prime factor = 1 mod 4, and sets lambda_bound = 2k on success.
TReport verify_t(const BigInt& t, const std::vector<std::uint64_t>& primes,
                 const FindTBudget& budget = {});

// Lifts roots of f mod each ell_i through the CRT and verifies candidates in
// ascending-t order (ties broken by root tuple) until max_candidates verify
// or the lift budget is exhausted. Primes must be distinct members of A'.
std::vector<TReport> find_t(const std::vector<std::uint64_t>& primes,
                            std::uint64_t max_candidates, const FindTBudget& budget = {});

// Flat-file cache of find_candidates results. Header records the bound and
// the filter version; a load succeeds only when both match.
inline constexpr int kPrimeCacheVersion = 1;
bool save_prime_cache(const std::string& path, std::uint64_t bound, bool admissibility,
                      const std::vector<std::uint64_t>& primes);
std::optional<std::vector<std::uint64_t>> load_prime_cache(const std::string& path,
                                                           std::uint64_t bound,
                                                           bool admissibility);

}  // namespace aclambda

#endif  // ACLAMBDA_SEARCH_HPP
