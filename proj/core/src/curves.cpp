// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/curves.hpp"

#include <numeric>
#include <optional>
#include <vector>

#include "aclambda/arith.hpp"
#include "aclambda/errors.hpp"
#include "aclambda/factor.hpp"

namespace aclambda {

bool is_nonsingular(const CurveFp& c) {
  std::uint64_t m = c.ell;
  std::uint64_t a3 = mulmod_u64(mulmod_u64(c.A % m, c.A % m, m), c.A % m, m);
  std::uint64_t b2 = mulmod_u64(c.B % m, c.B % m, m);
  std::uint64_t d = addmod_u64(mulmod_u64(4 % m, a3, m), mulmod_u64(27 % m, b2, m), m);
  return d != 0;
}

namespace {

void require_curve(const CurveFp& c) {
  if (c.ell <= 3) throw OutOfRange("curve characteristic must exceed 3");
  if (!is_nonsingular(c)) throw OutOfRange("singular curve: 4A^3 + 27B^2 = 0 mod ell");
}

}  // namespace

std::int64_t ap_naive(const CurveFp& curve) {
  require_curve(curve);
  if (curve.ell >= 1'000'000) throw CostGuard("ap_naive is quadratic-ish; ell must be < 10^6");
  std::uint64_t m = curve.ell;
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < m; ++x) {
    std::uint64_t rhs = addmod_u64(mulmod_u64(mulmod_u64(x, x, m), x, m),
                                   addmod_u64(mulmod_u64(curve.A % m, x, m), curve.B % m, m), m);
    sum += legendre(static_cast<std::int64_t>(rhs), m);
  }
  return -sum;
}

std::pair<std::uint64_t, std::uint64_t> cornacchia(std::uint64_t ell) {
  if (ell % 4 != 1)
    throw NoRepresentation(std::to_string(ell) + " = 3 mod 4 is not a sum of two squares");
  if (ell < 5) throw OutOfRange("cornacchia requires a prime >= 5");
  // descending Euclid on a square root of -1
  std::uint64_t x = sqrt_mod(ModResidue(ell - 1, ell)).value;
  std::uint64_t a = ell, b = x;
  while (static_cast<unsigned __int128>(b) * b > ell) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  std::uint64_t r = b;
  std::uint64_t s = isqrt_u64(ell - r * r);
  // one of r, s is odd and the other even since ell = 1 mod 4
  std::uint64_t aa = (r % 2 == 1) ? r : s;
  std::uint64_t bb = (r % 2 == 1) ? s : r;
  return {aa, bb};
}

std::int64_t ap_cm(std::uint64_t ell) {
  if (ell <= 5) throw OutOfRange("ap_cm requires ell > 5");
  auto [a, b] = cornacchia(ell);
  auto sa = static_cast<std::int64_t>(a);
  if ((a + b) % 4 != 1) sa = -sa;
  return 2 * sa;
}

namespace {

struct Point {
  std::uint64_t x = 0, y = 0;
  bool infinity = true;
};

Point add_points(const Point& p, const Point& q, const CurveFp& c) {
  std::uint64_t m = c.ell;
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x && addmod_u64(p.y, q.y, m) == 0) return Point{};  // inverse points
  std::uint64_t lambda;
  if (p.x == q.x) {
    // tangent
    std::uint64_t num = addmod_u64(mulmod_u64(3, mulmod_u64(p.x, p.x, m), m), c.A % m, m);
    std::uint64_t den = powmod_u64(addmod_u64(p.y, p.y, m), m - 2, m);
    lambda = mulmod_u64(num, den, m);
  } else {
    std::uint64_t num = submod_u64(q.y, p.y, m);
    std::uint64_t den = powmod_u64(submod_u64(q.x, p.x, m), m - 2, m);
    lambda = mulmod_u64(num, den, m);
  }
  std::uint64_t x3 = submod_u64(submod_u64(mulmod_u64(lambda, lambda, m), p.x, m), q.x, m);
  std::uint64_t y3 = submod_u64(mulmod_u64(lambda, submod_u64(p.x, x3, m), m), p.y, m);
  return Point{x3, y3, false};
}

Point mul_point(Point p, std::uint64_t k, const CurveFp& c) {
  Point r{};
  while (k) {
    if (k & 1) r = add_points(r, p, c);
    p = add_points(p, p, c);
    k >>= 1;
  }
  return r;
}

std::uint64_t point_order(const Point& p, std::uint64_t group_order,
                          const std::vector<std::pair<std::uint64_t, unsigned>>& qfactors,
                          const CurveFp& c) {
  std::uint64_t ord = group_order;
  for (const auto& [q, e] : qfactors) {
    for (unsigned i = 0; i < e; ++i) {
      if (ord % q != 0) break;
      Point t = mul_point(p, ord / q, c);
      if (!t.infinity) break;
      ord /= q;
    }
  }
  return ord;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> group_structure(const CurveFp& curve) {
  require_curve(curve);
  if (curve.ell > 10'000) throw CostGuard("group_structure enumerates all points; ell must be <= 10^4");
  std::uint64_t m = curve.ell;

  std::vector<Point> pts;
  pts.reserve(m + 1);
  for (std::uint64_t x = 0; x < m; ++x) {
    std::uint64_t rhs = addmod_u64(mulmod_u64(mulmod_u64(x, x, m), x, m),
                                   addmod_u64(mulmod_u64(curve.A % m, x, m), curve.B % m, m), m);
    if (rhs == 0) {
      pts.push_back(Point{x, 0, false});
    } else if (legendre(static_cast<std::int64_t>(rhs), m) == 1) {
      std::uint64_t y = sqrt_mod(ModResidue(rhs, m)).value;
      pts.push_back(Point{x, y, false});
      pts.push_back(Point{x, m - y, false});
    }
  }
  std::uint64_t order = pts.size() + 1;  // plus the point at infinity

  FactorBudget fb;
  fb.trial_bound = 100'000;
  FactorReport fr = factor(BigInt(static_cast<unsigned long long>(order)), fb);
  std::vector<std::pair<std::uint64_t, unsigned>> qf;
  for (const auto& [p, e] : fr.factors) qf.emplace_back(p.to_u64(), e);

  std::uint64_t exponent = 1;
  for (const Point& p : pts) {
    exponent = std::lcm(exponent, point_order(p, order, qf, curve));
    if (exponent == order) break;
  }
  std::uint64_t n2 = exponent;
  std::uint64_t n1 = order / n2;
  if (n2 % n1 != 0)
    throw OutOfRange("internal: group structure is not of the form Z/n1 x Z/n2");
  return {n1, n2};
}

const char* to_string(ReductionType t) {
  switch (t) {
    case ReductionType::good: return "good";
    case ReductionType::split_mult: return "split_mult";
    case ReductionType::nonsplit_mult: return "nonsplit_mult";
    case ReductionType::additive: return "additive";
  }
  return "?";
}

ReductionType reduction_type(const ReductionDatum& d) {
  if (d.ell < 5) throw SmallPrimeUnsupported("reduction_type handles ell >= 5 only");
  BigInt lhs = d.c4 * d.c4 * d.c4 - d.c6 * d.c6;
  if (lhs != BigInt(1728) * d.delta)
    throw OutOfRange("c4^3 - c6^2 != 1728 * delta: not a Weierstrass model");
  if (!d.delta.divisible_by_u64(d.ell)) return ReductionType::good;
  if (d.c4.divisible_by_u64(d.ell)) return ReductionType::additive;
  std::uint64_t c6m = d.c6.mod_u64(d.ell);
  std::uint64_t neg = c6m == 0 ? 0 : d.ell - c6m;
  return legendre(static_cast<std::int64_t>(neg), d.ell) == 1 ? ReductionType::split_mult
                                                              : ReductionType::nonsplit_mult;
}

}  // namespace aclambda
