// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/arith.hpp"

#include <cmath>

namespace aclambda {

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m < 2) throw InvalidModulus("modulus must be >= 2");
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

ModResidue::ModResidue(std::uint64_t v, std::uint64_t m) {
  if (m < 3 || m >= (1ull << 63)) throw InvalidModulus("modulus must satisfy 3 <= m < 2^63");
  modulus = m;
  value = v % m;
}

ModResidue ModResidue::operator*(const ModResidue& o) const {
  if (modulus != o.modulus) throw ModulusMismatch("residues live in different rings");
  return ModResidue(mulmod_u64(value, o.value, modulus), modulus);
}

ModResidue ModResidue::operator+(const ModResidue& o) const {
  if (modulus != o.modulus) throw ModulusMismatch("residues live in different rings");
  return ModResidue(addmod_u64(value, o.value, modulus), modulus);
}

ModResidue ModResidue::operator-(const ModResidue& o) const {
  if (modulus != o.modulus) throw ModulusMismatch("residues live in different rings");
  return ModResidue(submod_u64(value, o.value, modulus), modulus);
}

ModResidue mod_pow(const ModResidue& base, std::uint64_t exp) {
  return ModResidue(powmod_u64(base.value, exp, base.modulus), base.modulus);
}

ModResidue mod_pow(const ModResidue& base, const BigInt& exp) {
  if (exp.sign() < 0) throw OutOfRange("negative exponent");
  std::uint64_t m = base.modulus;
  std::uint64_t r = 1 % m;
  std::uint64_t b = base.value;
  std::size_t nbits = exp.bit_length();
  for (std::size_t i = 0; i < nbits; ++i) {
    if (exp.bit(i)) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
  }
  return ModResidue(r, m);
}

int legendre(std::int64_t a, std::uint64_t ell) {
  if (ell < 3 || ell % 2 == 0) throw InvalidModulus("legendre requires an odd prime modulus");
  std::uint64_t aa;
  if (a >= 0) {
    aa = static_cast<std::uint64_t>(a) % ell;
  } else {
    aa = ell - (static_cast<std::uint64_t>(-a) % ell);
    if (aa == ell) aa = 0;
  }
  // binary Jacobi
  std::uint64_t n = ell;
  int t = 1;
  while (aa != 0) {
    while ((aa & 1) == 0) {
      aa >>= 1;
      std::uint64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(aa, n);
    if ((aa & 3) == 3 && (n & 3) == 3) t = -t;
    aa %= n;
  }
  return n == 1 ? t : 0;
}

ModResidue sqrt_mod(const ModResidue& in) {
  std::uint64_t p = in.modulus;
  std::uint64_t a = in.value;
  if (a == 0) return ModResidue(0, p);
  if (legendre(static_cast<std::int64_t>(a % p), p) != 1)
    throw NoSquareRoot(std::to_string(a) + " is not a square mod " + std::to_string(p));

  std::uint64_t r;
  if ((p & 3) == 3) {
    r = powmod_u64(a, (p + 1) >> 2, p);
  } else {
    // Tonelli--Shanks
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (legendre(static_cast<std::int64_t>(z), p) != -1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(a, q, p);
    r = powmod_u64(a, (q + 1) >> 1, p);
    while (t != 1) {
      std::uint64_t i = 0, tt = t;
      while (tt != 1) {
        tt = mulmod_u64(tt, tt, p);
        ++i;
      }
      std::uint64_t b = c;
      for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mulmod_u64(b, b, p);
      m = i;
      c = mulmod_u64(b, b, p);
      t = mulmod_u64(t, c, p);
      r = mulmod_u64(r, b, p);
    }
  }
  if (r > p - r) r = p - r;
  return ModResidue(r, p);
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace aclambda
