// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_ARITH_HPP
#define ACLAMBDA_ARITH_HPP

#include <cstdint>

#include "aclambda/bigint.hpp"
#include "aclambda/errors.hpp"

namespace aclambda {

// Fixed-width modular arithmetic. Moduli stay below 2^63 so products fit in
// 128-bit intermediates; no Montgomery form.

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline std::uint64_t submod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Residue with its modulus attached; value is always reduced.
struct ModResidue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 3;

  ModResidue() = default;
  ModResidue(std::uint64_t v, std::uint64_t m);

  ModResidue operator*(const ModResidue& o) const;
  ModResidue operator+(const ModResidue& o) const;
  ModResidue operator-(const ModResidue& o) const;
  bool operator==(const ModResidue&) const = default;
};

// base^exp mod m by square-and-multiply; exp is a non-negative BigInt.
ModResidue mod_pow(const ModResidue& base, const BigInt& exp);
ModResidue mod_pow(const ModResidue& base, std::uint64_t exp);

// Legendre symbol (a|ell) for an odd prime ell, via the binary Jacobi
// algorithm (quadratic reciprocity). Throws InvalidModulus when ell is even
// or < 3.
int legendre(std::int64_t a, std::uint64_t ell);

// Tonelli--Shanks square root modulo a prime. Returns the smaller of the two
// roots. Throws NoSquareRoot for a non-residue.
ModResidue sqrt_mod(const ModResidue& a);

// floor(sqrt(n)) for 64-bit n, exact.
std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace aclambda

#endif  // ACLAMBDA_ARITH_HPP
