// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/polymod.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "aclambda/errors.hpp"

namespace aclambda {

PolyModP::PolyModP(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : mod_(modulus), c_(std::move(coeffs)) {
  if (mod_ < 3 || mod_ % 2 == 0 || mod_ >= (1ull << 63))
    throw InvalidModulus("polynomial modulus must be an odd prime in [3, 2^63)");
  for (auto& v : c_) v %= mod_;
  canonicalize();
}

PolyModP::PolyModP(std::uint64_t modulus, std::initializer_list<std::int64_t> coeffs)
    : mod_(modulus) {
  if (mod_ < 3 || mod_ % 2 == 0 || mod_ >= (1ull << 63))
    throw InvalidModulus("polynomial modulus must be an odd prime in [3, 2^63)");
  c_.reserve(coeffs.size());
  for (std::int64_t v : coeffs) {
    std::int64_t r = v % static_cast<std::int64_t>(mod_);
    if (r < 0) r += static_cast<std::int64_t>(mod_);
    c_.push_back(static_cast<std::uint64_t>(r));
  }
  canonicalize();
}

void PolyModP::canonicalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void PolyModP::check_same_ring(const PolyModP& o) const {
  if (mod_ != o.mod_) throw ModulusMismatch("polynomials over different fields");
}

std::uint64_t PolyModP::eval(std::uint64_t x) const {
  x %= mod_;
  std::uint64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = addmod_u64(mulmod_u64(r, x, mod_), *it, mod_);
  return r;
}

PolyModP PolyModP::operator+(const PolyModP& o) const {
  check_same_ring(o);
  std::vector<std::uint64_t> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = addmod_u64(coeff(i), o.coeff(i), mod_);
  return PolyModP(mod_, std::move(out));
}

PolyModP PolyModP::operator-(const PolyModP& o) const {
  check_same_ring(o);
  std::vector<std::uint64_t> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = submod_u64(coeff(i), o.coeff(i), mod_);
  return PolyModP(mod_, std::move(out));
}

PolyModP PolyModP::operator*(const PolyModP& o) const {
  check_same_ring(o);
  if (is_zero() || o.is_zero()) return zero(mod_);
  std::vector<std::uint64_t> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = addmod_u64(out[i + j], mulmod_u64(c_[i], o.c_[j], mod_), mod_);
  }
  return PolyModP(mod_, std::move(out));
}

PolyModP PolyModP::derivative() const {
  if (c_.size() <= 1) return zero(mod_);
  std::vector<std::uint64_t> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    out[i - 1] = mulmod_u64(c_[i], i % mod_, mod_);
  return PolyModP(mod_, std::move(out));
}

PolyModP PolyModP::monic() const {
  if (is_zero() || c_.back() == 1) return *this;
  std::uint64_t inv = powmod_u64(c_.back(), mod_ - 2, mod_);
  std::vector<std::uint64_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mulmod_u64(c_[i], inv, mod_);
  return PolyModP(mod_, std::move(out));
}

std::pair<PolyModP, PolyModP> PolyModP::divrem(const PolyModP& a, const PolyModP& b) {
  a.check_same_ring(b);
  if (b.is_zero()) throw OutOfRange("polynomial division by zero");
  std::uint64_t m = a.mod_;
  if (a.degree() < b.degree()) return {zero(m), a};
  std::vector<std::uint64_t> rem = a.c_;
  std::vector<std::uint64_t> quo(a.c_.size() - b.c_.size() + 1, 0);
  std::uint64_t lc_inv = powmod_u64(b.c_.back(), m - 2, m);
  for (std::size_t d = rem.size(); d-- > b.c_.size() - 1;) {
    // d is the coefficient index being eliminated
    std::size_t top = d;
    if (rem[top] == 0) continue;
    std::uint64_t c = mulmod_u64(rem[top], lc_inv, m);
    std::size_t off = top - (b.c_.size() - 1);
    quo[off] = c;
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      rem[off + i] = submod_u64(rem[off + i], mulmod_u64(c, b.c_[i], m), m);
  }
  return {PolyModP(m, std::move(quo)), PolyModP(m, std::move(rem))};
}

std::string PolyModP::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = c_.size(); d-- > 0;) {
    if (c_[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0 || c_[d] != 1) os << c_[d];
    if (d >= 1) {
      if (c_[d] != 1) os << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

PolyModP poly_gcd(const PolyModP& f, const PolyModP& g) {
  if (f.modulus() != g.modulus()) throw ModulusMismatch("polynomials over different fields");
  PolyModP a = f, b = g;
  while (!b.is_zero()) {
    auto [q, r] = PolyModP::divrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

PolyModP mulmod_poly(const PolyModP& a, const PolyModP& b, const PolyModP& f) {
  return PolyModP::divrem(a * b, f).second;
}

PolyModP powmod_poly(const PolyModP& base, std::uint64_t exp, const PolyModP& f) {
  PolyModP r(f.modulus(), {1});
  PolyModP b = PolyModP::divrem(base, f).second;
  while (exp) {
    if (exp & 1) r = mulmod_poly(r, b, f);
    b = mulmod_poly(b, b, f);
    exp >>= 1;
  }
  return r;
}

}  // namespace

PolyModP frobenius_power(const PolyModP& f) {
  if (f.degree() < 1) throw OutOfRange("frobenius_power needs degree >= 1");
  if (!f.is_monic()) throw NotMonic("frobenius_power requires a monic polynomial");
  return powmod_poly(PolyModP::x(f.modulus()), f.modulus(), f);
}

bool splits_distinct_linear(const PolyModP& f) {
  if (f.degree() < 1) throw OutOfRange("splits_distinct_linear needs degree >= 1");
  if (!f.is_monic()) throw NotMonic("splits_distinct_linear requires a monic polynomial");
  // f | x^ell - x, both sides reduced mod f (for deg f = 1, x itself reduces)
  PolyModP x_red = PolyModP::divrem(PolyModP::x(f.modulus()), f).second;
  if (frobenius_power(f) != x_red) return false;
  PolyModP one(f.modulus(), {1});
  return poly_gcd(f, f.derivative()) == one;
}

namespace {

// Splits a monic product of distinct linear factors into its roots via
// gcd(g, (x+c)^((ell-1)/2) - 1) for c drawn from the supplied generator.
void split_linear_product(const PolyModP& g, std::mt19937_64& rng,
                          std::vector<std::uint64_t>& out) {
  std::uint64_t ell = g.modulus();
  if (g.degree() == 0) return;
  if (g.degree() == 1) {
    // monic x + c0: root is -c0
    std::uint64_t c0 = g.coeff(0);
    out.push_back(c0 == 0 ? 0 : ell - c0);
    return;
  }
  PolyModP one(ell, {1});
  for (;;) {
    std::uint64_t c = rng() % ell;
    PolyModP shifted(ell, {c, 1});
    PolyModP h = powmod_poly(shifted, (ell - 1) / 2, g) - one;
    PolyModP d = poly_gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear_product(d, rng, out);
      split_linear_product(PolyModP::divrem(g, d).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> roots(const PolyModP& f, std::uint64_t seed) {
  if (f.is_zero()) throw EmptyInput("roots of the zero polynomial are not defined");
  std::vector<std::uint64_t> out;
  if (f.degree() == 0) return out;
  PolyModP fm = f.monic();
  std::uint64_t ell = f.modulus();
  // product of the distinct linear factors: gcd(f, x^ell - x)
  PolyModP xl = frobenius_power(fm);
  PolyModP g = poly_gcd(fm, xl - PolyModP::x(ell));
  std::mt19937_64 rng(seed ^ 0x726f6f7473ull);
  split_linear_product(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace aclambda
