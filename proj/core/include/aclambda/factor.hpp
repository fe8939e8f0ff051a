// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_FACTOR_HPP
#define ACLAMBDA_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aclambda/bigint.hpp"

namespace aclambda {

// Primality: deterministic Miller--Rabin (12-base set, complete below 2^64),
// 64 independent rounds above.
bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

struct FactorBudget {
  std::uint32_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 1ull << 26;  // per attempt
  std::uint32_t rho_restarts = 8;
  std::uint64_t pm1_b1 = 100'000;       // p-1 stage-1 bound
  std::uint64_t pm1_b2 = 1ull << 29;    // p-1 stage-2 bound
  std::uint64_t seed = 0;
};

struct FactorReport {
  enum class Status { complete, partial };

  BigInt input;
  std::vector<std::pair<BigInt, unsigned>> factors;  // (prime, exponent), ascending
  std::optional<BigInt> cofactor;                    // composite remainder, if any
  Status status = Status::complete;

  bool complete() const { return status == Status::complete; }
  // factors * cofactor, for the reassembly invariant.
  BigInt reassembled() const;
};

// Partial factorization of n >= 1: trial division, then Pollard p-1
// (two stages), then Pollard rho (Brent), all within the given budget.
// Every listed factor is certified prime; a composite remainder is reported
// as the cofactor with status partial.
FactorReport factor(const BigInt& n, const FactorBudget& budget = {});

// Chinese remainder lift. Moduli must be pairwise coprime and positive.
// Returns (residue, product of moduli) with 0 <= residue < product.
std::pair<BigInt, BigInt> crt(const std::vector<std::pair<BigInt, BigInt>>& congruences);

// Ascending primes <= bound (simple sieve; bound <= 2^32).
std::vector<std::uint32_t> small_primes(std::uint32_t bound);

}  // namespace aclambda

#endif  // ACLAMBDA_FACTOR_HPP
