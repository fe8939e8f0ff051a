// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <set>

#include "aclambda/errors.hpp"
#include "aclambda/rsfamily.hpp"
#include "aclambda/search.hpp"

using namespace aclambda;

TEST_CASE("sieve_primes basics") {
  CHECK(sieve_primes(1, 20) ==
        std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(sieve_primes(10, 10).empty());
  CHECK(sieve_primes(11, 11) == std::vector<std::uint64_t>{11});
  CHECK_THROWS_AS(sieve_primes(1, 2'000'000'000ull), CostGuard);
}

TEST_CASE("sieve_primes cross-checked against trial division") {
  std::vector<std::uint64_t> sieved = sieve_primes(1, 100'000);
  CHECK(sieved.size() == 9592);  // pi(10^5)
  std::vector<std::uint64_t> trial;
  for (std::uint64_t n = 2; n <= 100'000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) trial.push_back(n);
  }
  CHECK(sieved == trial);

  // segment boundaries
  std::vector<std::uint64_t> window = sieve_primes(999'900, 1'000'100);
  for (std::uint64_t p : window) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    CHECK(prime);
  }
  CHECK(std::count(window.begin(), window.end(), 999983) == 1);
  CHECK(std::count(window.begin(), window.end(), 1000003) == 1);
}

TEST_CASE("candidate_filter on known primes") {
  PrimeCandidate good = candidate_filter(63241);
  CHECK(good.in_a_prime());
  CHECK(good.first_fail == FilterStage::none);
  CHECK(good.c1);
  CHECK(good.c2);
  CHECK(good.c3);
  CHECK(good.c4);
  CHECK(good.adm);

  PrimeCandidate eleven = candidate_filter(11);
  CHECK_FALSE(eleven.in_a_prime());
  CHECK(eleven.c1);  // 11 = 1 mod 5
  CHECK(eleven.first_fail == FilterStage::c4);  // 11 = 3 mod 4

  // 41 passes c1 and c4; a_41 = 10 = 0 mod 5 kills it at c2
  PrimeCandidate p41 = candidate_filter(41);
  CHECK(p41.c1);
  CHECK(p41.c4);
  CHECK_FALSE(p41.in_a_prime());
  CHECK(p41.first_fail == FilterStage::c2);

  CHECK_THROWS_AS(candidate_filter(5), OutOfRange);
}

TEST_CASE("first failing condition respects the configured order") {
  // 7 fails both c1 (7 = 2 mod 5) and c4 (7 = 3 mod 4); the recorded first
  // failure follows the evaluation order, membership does not change
  CHECK(candidate_filter(7).first_fail == FilterStage::c1);
  FilterOptions opts;
  opts.order = {FilterStage::c4, FilterStage::c1, FilterStage::adm, FilterStage::c2,
                FilterStage::c3};
  PrimeCandidate c = candidate_filter(7, opts);
  CHECK(c.first_fail == FilterStage::c4);
  CHECK_FALSE(c.in_a_prime());
}

TEST_CASE("find_candidates reproduces the paper's two primes below 10^5") {
  std::vector<std::uint64_t> got = find_candidates(100'000);
  CHECK(got == std::vector<std::uint64_t>{63241, 63901});
  CHECK(find_candidates(100).empty());
}

TEST_CASE("shuffled evaluation order never changes the candidate set") {
  std::vector<std::array<FilterStage, 5>> orders = {
      {FilterStage::c1, FilterStage::c4, FilterStage::adm, FilterStage::c2, FilterStage::c3},
      {FilterStage::c3, FilterStage::c2, FilterStage::adm, FilterStage::c4, FilterStage::c1},
      {FilterStage::c2, FilterStage::c3, FilterStage::c1, FilterStage::adm, FilterStage::c4},
      {FilterStage::adm, FilterStage::c2, FilterStage::c4, FilterStage::c3, FilterStage::c1},
  };
  std::vector<std::uint64_t> base;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    SearchOptions opts;
    opts.filter.order = orders[i];
    std::vector<std::uint64_t> got = find_candidates(100'000, opts);
    if (i == 0)
      base = got;
    else
      CHECK(got == base);
  }
  CHECK(base == std::vector<std::uint64_t>{63241, 63901});
}

TEST_CASE("every candidate re-passes the filter and bounds are monotone") {
  std::vector<std::uint64_t> c1 = find_candidates(70'000);
  std::vector<std::uint64_t> c2 = find_candidates(100'000);
  REQUIRE(c1.size() <= c2.size());
  CHECK(std::equal(c1.begin(), c1.end(), c2.begin()));  // prefix property
  for (std::uint64_t ell : c2) CHECK(candidate_filter(ell).in_a_prime());
}

TEST_CASE("parallel and serial candidate search agree") {
  SearchOptions serial;
  serial.workers = 1;
  SearchOptions parallel;
  parallel.workers = 8;
  SearchStats st_s, st_p;
  std::vector<std::uint64_t> a = find_candidates(2'000'000, serial, st_s);
  std::vector<std::uint64_t> b = find_candidates(2'000'000, parallel, st_p);
  CHECK(a == b);
  CHECK(st_s.primes_examined == st_p.primes_examined);
  CHECK(st_s.failed_c1 == st_p.failed_c1);
  CHECK(st_s.failed_c2 == st_p.failed_c2);
  CHECK(st_s.failed_c3 == st_p.failed_c3);
  CHECK(st_s.failed_c4 == st_p.failed_c4);
  CHECK(st_s.failed_adm == st_p.failed_adm);
  CHECK(st_s.survivors == a.size());
  CHECK(a == std::vector<std::uint64_t>{63241, 63901, 514561, 1311341});
}

TEST_CASE("verify_t on the paper's parameter") {
  FindTBudget budget;  // defaults: p-1 reaches the 20-digit factors
  TReport rep = verify_t(BigInt(1059545078), {63241, 63901}, budget);
  CHECK(rep.status == TStatus::verified);
  CHECK(rep.divisibility == std::vector<bool>{true, true});
  REQUIRE(rep.factorization.complete());
  REQUIRE(rep.factorization.factors.size() == 7);
  const char* expect[] = {"13",
                          "401",
                          "63241",
                          "63901",
                          "21068381440942021",
                          "23007701426021875081",
                          "24504438741475825204304998173516406719475833143478257969366221"};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(rep.factorization.factors[i].first.to_decimal() == expect[i]);
    CHECK(rep.factorization.factors[i].second == 1);
  }
  CHECK(rep.all_factors_1mod4 == Tri::yes);
  REQUIRE(rep.lambda_bound.has_value());
  CHECK(*rep.lambda_bound == 4);
}

TEST_CASE("verify_t rejects t = 0 and reports partial factorizations") {
  TReport zero = verify_t(BigInt(0), {63241});
  CHECK(zero.status == TStatus::rejected);
  CHECK(zero.f_value == BigInt(1));
  CHECK(zero.divisibility == std::vector<bool>{false});

  // starve the budget so the big factors stay composite
  FindTBudget tiny;
  tiny.factor.trial_bound = 1000;
  tiny.factor.rho_iterations = 64;
  tiny.factor.rho_restarts = 1;
  tiny.factor.pm1_b1 = 10;
  tiny.factor.pm1_b2 = 20;
  TReport starved = verify_t(BigInt(1059545078), {63241, 63901}, tiny);
  CHECK(starved.status == TStatus::unverified);
  CHECK(starved.all_factors_1mod4 == Tri::unknown);
  CHECK_FALSE(starved.factorization.complete());
  CHECK(starved.factorization.reassembled() == starved.f_value.abs());
  CHECK_FALSE(starved.lambda_bound.has_value());
}

TEST_CASE("verify_t divisibility agrees with the fixed-width path") {
  const RSFamily& rs = RSFamily::instance();
  FindTBudget tiny;
  tiny.factor.trial_bound = 1000;
  tiny.factor.rho_iterations = 64;
  tiny.factor.rho_restarts = 1;
  tiny.factor.pm1_b1 = 10;
  tiny.factor.pm1_b2 = 20;
  for (std::uint64_t t : {0ull, 1ull, 63241ull, 1059545078ull, 999999999999ull}) {
    TReport rep = verify_t(BigInt(static_cast<unsigned long long>(t)), {63241, 63901}, tiny);
    CHECK(rep.divisibility[0] == (rs.f_eval_mod(t % 63241, 63241) == 0));
    CHECK(rep.divisibility[1] == (rs.f_eval_mod(t % 63901, 63901) == 0));
  }
}

TEST_CASE("find_t basics") {
  CHECK_THROWS_AS(find_t({}, 1), EmptyInput);
  CHECK_THROWS_AS(find_t({63241, 63241}, 1), OutOfRange);

  // 0 requested candidates: nothing scanned
  CHECK(find_t({63241}, 0).empty());
}

TEST_CASE("find_t lifts satisfy the divisibility constraint") {
  FindTBudget tiny;
  tiny.factor.trial_bound = 1000;
  tiny.factor.rho_iterations = 64;
  tiny.factor.rho_restarts = 1;
  tiny.factor.pm1_b1 = 10;
  tiny.factor.pm1_b2 = 20;
  tiny.max_lifts = 30;
  const RSFamily& rs = RSFamily::instance();
  std::vector<TReport> reps = find_t({63241}, /*max_candidates=*/1'000'000, tiny);
  CHECK(reps.size() == 30);
  for (const TReport& r : reps) {
    CHECK(rs.f_eval(r.t).mod_u64(63241) == 0);
    CHECK(r.divisibility[0]);
  }
  // ascending t
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1].t < reps[i].t);
}

TEST_CASE("the paper's t appears among the j = 0 CRT lifts") {
  FindTBudget tiny;
  tiny.factor.trial_bound = 100;
  tiny.factor.rho_iterations = 16;
  tiny.factor.rho_restarts = 1;
  tiny.factor.pm1_b1 = 10;
  tiny.factor.pm1_b2 = 20;
  tiny.max_lifts = 144;  // 12 roots x 12 roots
  std::vector<TReport> reps = find_t({63241, 63901}, /*max_candidates=*/1'000'000, tiny);
  REQUIRE(reps.size() == 144);
  bool found = false;
  for (const TReport& r : reps) found = found || r.t == BigInt(1059545078);
  CHECK(found);
  // it is the 37th smallest lift (the paper's value is not the minimum)
  CHECK(reps[36].t == BigInt(1059545078));
  CHECK(reps[0].t == BigInt(83585105));
}

TEST_CASE("find_t stops after the requested number of verified candidates") {
  // f mod 13 has roots {6, 7}; the very first lift t = 6 verifies:
  // f(6) = 13 * 17 * 29 * 37051921, every factor 1 mod 4
  FindTBudget budget;
  budget.factor.trial_bound = 100'000;
  budget.factor.pm1_b1 = 0;
  budget.factor.pm1_b2 = 0;
  budget.factor.rho_iterations = 1u << 16;
  budget.factor.rho_restarts = 2;
  budget.max_lifts = 64;

  std::vector<TReport> one = find_t({13}, 1, budget);
  REQUIRE(one.size() == 1);
  CHECK(one.back().t == BigInt(6));
  CHECK(one.back().status == TStatus::verified);
  REQUIRE(one.back().lambda_bound.has_value());
  CHECK(*one.back().lambda_bound == 2);

  std::vector<TReport> two = find_t({13}, 2, budget);
  std::size_t verified = 0;
  for (const TReport& r : two) verified += r.status == TStatus::verified;
  CHECK(verified == 2);
  CHECK(two.back().status == TStatus::verified);
  CHECK(two.size() < 64);  // stopped by the verified count, not the lift cap
}

TEST_CASE("find_t reports RootNotFound when f has no root") {
  // f mod 23 has no roots (checked by brute force), so the error names 23
  const RSFamily& rs = RSFamily::instance();
  bool has_root = false;
  for (std::uint64_t x = 0; x < 23; ++x) has_root = has_root || rs.f_eval_mod(x, 23) == 0;
  REQUIRE_FALSE(has_root);
  CHECK_THROWS_AS(find_t({23}, 1), RootNotFound);
}

TEST_CASE("prime cache round-trip and header mismatch") {
  std::string path = "aclambda_test_cache.txt";
  std::vector<std::uint64_t> primes = {63241, 63901};
  REQUIRE(save_prime_cache(path, 100'000, true, primes));

  auto hit = load_prime_cache(path, 100'000, true);
  REQUIRE(hit.has_value());
  CHECK(*hit == primes);

  CHECK_FALSE(load_prime_cache(path, 200'000, true).has_value());   // bound mismatch
  CHECK_FALSE(load_prime_cache(path, 100'000, false).has_value());  // flag mismatch
  CHECK_FALSE(load_prime_cache("no_such_file_here.txt", 100'000, true).has_value());
  std::remove(path.c_str());
}
