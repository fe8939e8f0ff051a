// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/bigint.hpp"

#include <cctype>
#include <vector>

#include "aclambda/errors.hpp"

namespace aclambda {

BigInt BigInt::from_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) throw SchemaError("empty decimal literal");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw SchemaError("bad decimal literal: '" + std::string(s) + "'");
  }
  BigInt r;
  std::string buf(s);
  if (mpz_set_str(r.z_, buf.c_str(), 10) != 0)
    throw SchemaError("bad decimal literal: '" + buf + "'");
  return r;
}

std::string BigInt::to_decimal() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

std::uint64_t BigInt::to_u64() const {
  if (!fits_u64()) throw OutOfRange("BigInt does not fit in 64 bits: " + to_decimal());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z_);
  return out;
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  if (m == 0) throw InvalidModulus("modulus must be positive");
  if (m <= static_cast<std::uint64_t>(~0ul)) {
    // mpz_fdiv_ui returns a non-negative remainder for either sign
    return mpz_fdiv_ui(z_, static_cast<unsigned long>(m));
  }
  BigInt mm(static_cast<unsigned long long>(m));
  BigInt r;
  mpz_fdiv_r(r.raw(), z_, mm.raw());
  return r.to_u64();
}

bool BigInt::divisible_by_u64(std::uint64_t d) const {
  if (d == 0) return is_zero();
  return mod_u64(d) == 0;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw OutOfRange("division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
  return {std::move(q), std::move(r)};
}

BigInt BigInt::mod_floor(const BigInt& m) const {
  if (m.sign() <= 0) throw InvalidModulus("modulus must be positive");
  BigInt r;
  mpz_fdiv_r(r.z_, z_, m.z_);
  return r;
}

BigInt BigInt::pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m) {
  if (exp.sign() < 0) throw OutOfRange("negative exponent");
  if (mpz_cmp_ui(m.z_, 2) < 0) throw InvalidModulus("modulus must be >= 2");
  BigInt r;
  mpz_powm(r.z_, base.z_, exp.z_, m.z_);
  return r;
}

BigInt BigInt::pow_u64(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.z_, base.z_, static_cast<unsigned long>(exp));
  return r;
}

BigInt BigInt::invert(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.z_, a.z_, m.z_) == 0)
    throw NotCoprime(a.to_decimal() + " is not invertible mod " + m.to_decimal());
  return r;
}

std::pair<BigInt, unsigned> BigInt::perfect_power() const {
  if (mpz_cmp_ui(z_, 4) < 0 || mpz_perfect_power_p(z_) == 0) return {*this, 1u};
  // Largest exact exponent gives the smallest base.
  unsigned maxk = static_cast<unsigned>(mpz_sizeinbase(z_, 2));
  for (unsigned k = maxk; k >= 2; --k) {
    BigInt root, rem;
    mpz_rootrem(root.z_, rem.z_, z_, k);
    if (rem.is_zero()) return {std::move(root), k};
  }
  return {*this, 1u};
}

}  // namespace aclambda
