// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_BIGINT_HPP
#define ACLAMBDA_BIGINT_HPP

#include <gmp.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace aclambda {

// Arbitrary-precision signed integer. Canonical sign/magnitude limb
// representation, exact decimal round-trips. Backed by GMP's mpz layer.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt(long long v) { mpz_init_set_si(z_, v); }          // NOLINT(runtime/explicit)
  BigInt(unsigned long long v) {                           // NOLINT(runtime/explicit)
    mpz_init(z_);
    mpz_import(z_, 1, -1, sizeof(v), 0, 0, &v);
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}     // NOLINT(runtime/explicit)
  ~BigInt() { mpz_clear(z_); }

  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }

  // Parses an optionally signed decimal string; throws SchemaError otherwise.
  static BigInt from_decimal(std::string_view s);
  std::string to_decimal() const;

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_odd() const { return mpz_odd_p(z_) != 0; }
  std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }
  bool bit(std::size_t i) const { return mpz_tstbit(z_, i) != 0; }

  BigInt abs() const {
    BigInt r;
    mpz_abs(r.z_, z_);
    return r;
  }
  BigInt negated() const {
    BigInt r;
    mpz_neg(r.z_, z_);
    return r;
  }

  bool fits_u64() const { return mpz_sgn(z_) >= 0 && mpz_sizeinbase(z_, 2) <= 64; }
  std::uint64_t to_u64() const;  // throws OutOfRange unless fits_u64()

  // Least non-negative residue modulo m (m > 0), valid for either sign.
  std::uint64_t mod_u64(std::uint64_t m) const;
  bool divisible_by_u64(std::uint64_t d) const;
  bool divisible_by(const BigInt& d) const { return mpz_divisible_p(z_, d.z_) != 0; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  BigInt& operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  // Truncated quotient/remainder (sign follows the dividend, as in C).
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  // Least non-negative residue mod m (m > 0).
  BigInt mod_floor(const BigInt& m) const;

  friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = mpz_cmp(a.z_, b.z_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  static BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  // base^exp mod m, exp >= 0, m > 1.
  static BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m);
  static BigInt pow_u64(const BigInt& base, std::uint64_t exp);
  // Modular inverse; throws NotCoprime if gcd(a, m) != 1.
  static BigInt invert(const BigInt& a, const BigInt& m);

  // If *this = b^k for some k >= 2, returns (b, k) with k maximal prime... the
  // smallest base; otherwise returns nullopt-equivalent via k == 1.
  std::pair<BigInt, unsigned> perfect_power() const;

  // Raw handle for internal routines of this library.
  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

}  // namespace aclambda

#endif  // ACLAMBDA_BIGINT_HPP
