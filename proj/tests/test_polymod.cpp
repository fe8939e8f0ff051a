// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <algorithm>
#include <random>

#include "aclambda/errors.hpp"
#include "aclambda/factor.hpp"
#include "aclambda/polymod.hpp"
#include "aclambda/rsfamily.hpp"

using namespace aclambda;

namespace {

// independent of the library's Frobenius/EDS path
std::vector<std::uint64_t> brute_roots(const PolyModP& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < f.modulus(); ++x)
    if (f.eval(x) == 0) out.push_back(x);
  return out;
}

PolyModP random_monic(std::uint64_t ell, int deg, std::mt19937_64& rng) {
  std::vector<std::uint64_t> c(deg + 1);
  for (int i = 0; i < deg; ++i) c[i] = rng() % ell;
  c[deg] = 1;
  return PolyModP(ell, std::move(c));
}

}  // namespace

TEST_CASE("poly_gcd basics") {
  PolyModP a(7, {-1, 0, 1});  // x^2 - 1
  PolyModP b(7, {-1, 1});     // x - 1
  CHECK(poly_gcd(a, b) == b);

  PolyModP f(7, {3, 6});  // 6x + 3, non-monic
  CHECK(poly_gcd(f, PolyModP::zero(7)) == f.monic());
  CHECK(poly_gcd(PolyModP::zero(7), PolyModP::zero(7)).is_zero());

  CHECK_THROWS_AS(poly_gcd(PolyModP(7, {1, 1}), PolyModP(11, {1, 1})), ModulusMismatch);
}

TEST_CASE("poly_gcd divides both inputs and is monic") {
  std::mt19937_64 rng(23);
  for (std::uint32_t ell : {7u, 13u, 101u, 499u}) {
    for (int i = 0; i < 100; ++i) {
      PolyModP a = random_monic(ell, 1 + static_cast<int>(rng() % 6), rng);
      PolyModP b = random_monic(ell, 1 + static_cast<int>(rng() % 6), rng);
      PolyModP g = poly_gcd(a, b);
      REQUIRE(!g.is_zero());
      CHECK(g.is_monic());
      CHECK(PolyModP::divrem(a, g).second.is_zero());
      CHECK(PolyModP::divrem(b, g).second.is_zero());
    }
  }
}

TEST_CASE("frobenius_power examples") {
  CHECK(frobenius_power(PolyModP(7, {-1, 0, 1})) == PolyModP::x(7));
  CHECK(frobenius_power(PolyModP(7, {1, 0, 1})) == PolyModP(7, {0, 6}));  // -x
  CHECK_THROWS_AS(frobenius_power(PolyModP(7, {1, 0, 2})), NotMonic);

  const RSFamily& rs = RSFamily::instance();
  CHECK(frobenius_power(rs.phi5e_mod(63241)) == PolyModP::x(63241));
}

TEST_CASE("frobenius_power equals naive x^ell for ell < 200") {
  std::mt19937_64 rng(29);
  for (std::uint32_t ell : small_primes(200)) {
    if (ell < 3) continue;
    for (int i = 0; i < 10; ++i) {
      PolyModP f = random_monic(ell, 2 + static_cast<int>(rng() % 5), rng);
      PolyModP x = PolyModP::x(ell);
      PolyModP naive(ell, {1});
      for (std::uint64_t k = 0; k < ell; ++k)
        naive = PolyModP::divrem(naive * x, f).second;
      CHECK(frobenius_power(f) == naive);
    }
  }
}

TEST_CASE("splits_distinct_linear examples") {
  CHECK(splits_distinct_linear(PolyModP(7, {-1, 0, 1})));
  CHECK_FALSE(splits_distinct_linear(PolyModP(7, {1, 0, 1})));

  const RSFamily& rs = RSFamily::instance();
  CHECK(splits_distinct_linear(rs.phi5e_mod(63901)));
  CHECK(splits_distinct_linear(rs.phi5e_mod(63241)));
}

TEST_CASE("splitting test vs brute force for all primes < 500") {
  std::mt19937_64 rng(31);
  for (std::uint32_t ell : small_primes(500)) {
    if (ell < 3) continue;
    for (int i = 0; i < 200; ++i) {
      int deg = 1 + static_cast<int>(rng() % 6);
      PolyModP f = random_monic(ell, deg, rng);
      bool brute = brute_roots(f).size() == static_cast<std::size_t>(f.degree());
      CHECK(splits_distinct_linear(f) == brute);
    }
  }
}

TEST_CASE("roots examples") {
  CHECK(roots(PolyModP(7, {-1, 0, 1})) == std::vector<std::uint64_t>{1, 6});
  CHECK(roots(PolyModP(7, {1, 0, 1})).empty());
  CHECK_THROWS_AS(roots(PolyModP::zero(7)), EmptyInput);

  // paper's displayed factorization of Phi5^E mod 63241: roots are ell - c
  const RSFamily& rs = RSFamily::instance();
  std::vector<std::uint64_t> expect;
  for (std::uint64_t c : {60303ull, 37410ull, 31643ull, 28822ull, 26600ull, 9130ull})
    expect.push_back(63241 - c);
  std::sort(expect.begin(), expect.end());
  CHECK(roots(rs.phi5e_mod(63241)) == expect);
}

TEST_CASE("roots equal brute-force roots for ell < 500") {
  std::mt19937_64 rng(37);
  for (std::uint32_t ell : small_primes(500)) {
    if (ell < 3) continue;
    for (int i = 0; i < 20; ++i) {
      PolyModP f = random_monic(ell, 1 + static_cast<int>(rng() % 8), rng);
      CHECK(roots(f, /*seed=*/i) == brute_roots(f));
    }
  }
}

TEST_CASE("roots are independent of the splitting seed") {
  PolyModP f(499, {7, 3, 0, 11, 1, 1, 1});
  auto base = roots(f, 0);
  for (std::uint64_t s : {1ull, 2ull, 99ull, 12345ull}) CHECK(roots(f, s) == base);
}

TEST_CASE("canonical form") {
  PolyModP f(7, std::vector<std::uint64_t>{1, 2, 0, 0});
  CHECK(f.degree() == 1);
  CHECK(f.coeffs().size() == 2);
  PolyModP z(7, std::vector<std::uint64_t>{0, 0});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK_THROWS_AS(PolyModP(8, {1, 1}), InvalidModulus);
}
