// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/rsfamily.hpp"

#include <algorithm>
#include <sstream>

#include "aclambda/errors.hpp"
#include "aclambda/factor.hpp"

namespace aclambda {

std::vector<Phi5Entry> parse_phi5_table(std::string_view text) {
  std::vector<Phi5Entry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    long long x = -1, y = -1;
    std::string coeff;
    if (!(ls >> x >> y >> coeff) || x < 0 || y < 0)
      throw SchemaError("phi5 table line " + std::to_string(lineno) + ": expected 'xdeg ydeg coefficient'");
    std::string rest;
    if (ls >> rest)
      throw SchemaError("phi5 table line " + std::to_string(lineno) + ": trailing tokens");
    if (y > x)
      throw SchemaError("phi5 table line " + std::to_string(lineno) +
                        ": entries must satisfy xdeg >= ydeg (mirror is implied)");
    for (const auto& e : out)
      if (e.xdeg == static_cast<unsigned>(x) && e.ydeg == static_cast<unsigned>(y))
        throw SchemaError("phi5 table line " + std::to_string(lineno) + ": duplicate monomial");
    out.push_back(Phi5Entry{static_cast<unsigned>(x), static_cast<unsigned>(y),
                            BigInt::from_decimal(coeff), coeff});
  }
  if (out.empty()) throw SchemaError("phi5 table is empty");
  return out;
}

namespace {

// lc(B)^(d+1) * A reduced by B, fraction free.
std::vector<BigInt> prem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  auto deg = [](const std::vector<BigInt>& p) { return static_cast<int>(p.size()) - 1; };
  auto trim = [](std::vector<BigInt>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  const BigInt& lcb = b.back();
  int e = deg(a) - deg(b) + 1;
  while (!a.empty() && deg(a) >= deg(b)) {
    int shift = deg(a) - deg(b);
    BigInt lca = a.back();
    std::vector<BigInt> next(a.size() - 1, BigInt(0));
    for (int i = 0; i < static_cast<int>(a.size()) - 1; ++i) next[i] = a[i] * lcb;
    for (int i = 0; i < static_cast<int>(b.size()) - 1; ++i)
      next[shift + i] -= lca * b[i];
    a = std::move(next);
    trim(a);
    --e;
  }
  BigInt scale(1);
  for (int i = 0; i < e; ++i) scale *= lcb;
  for (auto& c : a) c *= scale;
  return a;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  auto [q, r] = BigInt::divmod(a, b);
  if (!r.is_zero()) throw OutOfRange("internal: inexact division in subresultant PRS");
  return q;
}

BigInt pow_int(const BigInt& b, int e) {
  BigInt r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BigInt resultant_z(std::vector<BigInt> a, std::vector<BigInt> b) {
  auto trim = [](std::vector<BigInt>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return BigInt(0);
  int sign = 1;
  if (a.size() < b.size()) {
    if (((a.size() - 1) * (b.size() - 1)) % 2 == 1) sign = -sign;
    std::swap(a, b);
  }
  if (b.size() == 1) {
    // res(A, c) = c^deg A
    BigInt r = pow_int(b[0], static_cast<int>(a.size()) - 1);
    return sign == 1 ? r : r.negated();
  }
  BigInt g(1), h(1);
  for (;;) {
    int da = static_cast<int>(a.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    int d = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    std::vector<BigInt> r = prem(a, b);
    a = std::move(b);
    BigInt divisor = g * pow_int(h, d);
    for (auto& c : r) c = exact_div(c, divisor);
    b = std::move(r);
    g = a.back();
    // h <- g^d / h^(d-1)
    h = d == 0 ? h : exact_div(pow_int(g, d), pow_int(h, d - 1));
    if (b.empty()) return BigInt(0);
    if (b.size() == 1) {
      int dega = static_cast<int>(a.size()) - 1;
      BigInt res = exact_div(pow_int(b[0], dega), pow_int(h, dega - 1));
      return sign == 1 ? res : res.negated();
    }
  }
}

RSFamily::RSFamily() {
  table_ = parse_phi5_table(kPhi5TableText);

  // startup self-checks against transcription slips
  bool monic = false;
  unsigned max_x = 0;
  for (const auto& e : table_) {
    max_x = std::max(max_x, e.xdeg);
    if (e.xdeg == 6 && e.ydeg == 0) monic = e.coeff == BigInt(1);
    if (e.xdeg == 5 && e.ydeg == 5 && e.coeff != BigInt(-1))
      throw SchemaError("phi5 table: X^5Y^5 coefficient must be -1");
  }
  if (!monic || max_x != 6) throw SchemaError("phi5 table: not monic of degree 6 in X");
  // the upper triangle must be fully populated: (i, j) for 0 <= j <= i <= 5
  // plus (6, 0); the mirrored completion is then symmetric by construction
  for (unsigned i = 0; i <= 5; ++i)
    for (unsigned j = 0; j <= i; ++j) {
      bool found = false;
      for (const auto& e : table_) found = found || (e.xdeg == i && e.ydeg == j);
      if (!found)
        throw SchemaError("phi5 table: missing monomial X^" + std::to_string(i) + "Y^" +
                          std::to_string(j));
    }

  // Phi_5(X, 1728), evaluated over the stored monomials. The paper's own
  // factorization displays (and the prime lists downstream) correspond to
  // this evaluation of the table as shipped.
  phi5e_.assign(7, BigInt(0));
  for (const auto& e : table_) {
    BigInt y = BigInt::pow_u64(BigInt(1728), e.ydeg);
    phi5e_[e.xdeg] += e.coeff * y;
  }
  if (phi5e_[6] != BigInt(1)) throw SchemaError("phi5 table: Phi5(X, 1728) is not monic");

  std::vector<BigInt> f, fp;
  for (std::size_t i = 0; i < kFCoeffs.size(); ++i) f.emplace_back(static_cast<long long>(kFCoeffs[i]));
  for (std::size_t i = 1; i < kFCoeffs.size(); ++i)
    fp.emplace_back(static_cast<long long>(kFCoeffs[i]) * static_cast<long long>(i));
  res_ = resultant_z(f, fp);
  if (res_.is_zero()) throw SchemaError("Res(f, f') vanished; f transcription is wrong");

  FactorBudget fb;
  FactorReport fr = factor(res_.abs(), fb);
  if (fr.complete())
    for (const auto& [p, e] : fr.factors) res_primes_.push_back(p);
}

const RSFamily& RSFamily::instance() {
  static const RSFamily inst;
  return inst;
}

BigInt RSFamily::f_eval(const BigInt& t) const {
  BigInt r(0);
  for (std::size_t i = kFCoeffs.size(); i-- > 0;) {
    r *= t;
    r += BigInt(static_cast<long long>(kFCoeffs[i]));
  }
  return r;
}

std::uint64_t RSFamily::f_eval_mod(std::uint64_t t, std::uint64_t ell) const {
  t %= ell;
  std::uint64_t r = 0;
  for (std::size_t i = kFCoeffs.size(); i-- > 0;) {
    std::int64_t c = kFCoeffs[i] % static_cast<std::int64_t>(ell);
    if (c < 0) c += static_cast<std::int64_t>(ell);
    r = addmod_u64(mulmod_u64(r, t, ell), static_cast<std::uint64_t>(c), ell);
  }
  return r;
}

BigInt RSFamily::disc_eval(const BigInt& t) const {
  BigInt f = f_eval(t);
  return BigInt(64) * BigInt::pow_u64(f, 5);
}

PolyModP RSFamily::phi5e_mod(std::uint64_t ell) const {
  std::vector<std::uint64_t> c(7);
  for (std::size_t i = 0; i < 7; ++i) c[i] = phi5e_[i].mod_u64(ell);
  return PolyModP(ell, std::move(c));
}

PolyModP RSFamily::f_mod(std::uint64_t ell) const {
  std::vector<std::uint64_t> c;
  c.reserve(kFCoeffs.size());
  for (std::int64_t v : kFCoeffs) {
    std::int64_t r = v % static_cast<std::int64_t>(ell);
    if (r < 0) r += static_cast<std::int64_t>(ell);
    c.push_back(static_cast<std::uint64_t>(r));
  }
  return PolyModP(ell, std::move(c));
}

bool RSFamily::is_admissible(std::uint64_t ell) const {
  if (ell <= 5) throw OutOfRange("admissibility is defined for primes > 5");
  if (!res_primes_.empty()) {
    BigInt l(static_cast<unsigned long long>(ell));
    return std::none_of(res_primes_.begin(), res_primes_.end(),
                        [&](const BigInt& p) { return p == l; });
  }
  return res_.mod_u64(ell) != 0;
}

}  // namespace aclambda
