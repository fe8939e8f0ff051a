// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <benchmark/benchmark.h>

#include "aclambda/arith.hpp"
#include "aclambda/curves.hpp"
#include "aclambda/factor.hpp"
#include "aclambda/polymod.hpp"
#include "aclambda/rsfamily.hpp"
#include "aclambda/search.hpp"

using namespace aclambda;

static void BM_powmod_u64(benchmark::State& state) {
  std::uint64_t x = 1234567891011;
  for (auto _ : state) {
    x = powmod_u64(x, 63239, 63241ull * 63901);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_powmod_u64);

static void BM_legendre(benchmark::State& state) {
  std::uint64_t a = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(legendre(static_cast<std::int64_t>(a), 63241));
    a += 3;
  }
}
BENCHMARK(BM_legendre);

static void BM_ap_cm(benchmark::State& state) {
  std::uint64_t ells[] = {63241, 63901, 514561, 1311341, 9437321};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ap_cm(ells[i++ % 5]));
  }
}
BENCHMARK(BM_ap_cm);

static void BM_ap_naive(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ap_naive(CurveFp{63241, 63240, 0}));
  }
}
BENCHMARK(BM_ap_naive);

static void BM_splitting_test(benchmark::State& state) {
  const RSFamily& rs = RSFamily::instance();
  std::uint64_t ells[] = {63241, 63901, 514561, 1311341};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(splits_distinct_linear(rs.phi5e_mod(ells[i++ % 4])));
  }
}
BENCHMARK(BM_splitting_test);

static void BM_candidate_filter(benchmark::State& state) {
  // one surviving prime, one early reject
  std::uint64_t ells[] = {63241, 63247};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(candidate_filter(ells[i++ % 2]));
  }
}
BENCHMARK(BM_candidate_filter);

static void BM_sieve_1e6(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve_primes(1, 1'000'000));
  }
}
BENCHMARK(BM_sieve_1e6);

static void BM_find_candidates_1e5(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_candidates(100'000));
  }
}
BENCHMARK(BM_find_candidates_1e5);

static void BM_f_eval_big(benchmark::State& state) {
  const RSFamily& rs = RSFamily::instance();
  BigInt t(1059545078);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs.f_eval(t));
  }
}
BENCHMARK(BM_f_eval_big);

static void BM_is_prime_62_digits(benchmark::State& state) {
  BigInt p = BigInt::from_decimal(
      "24504438741475825204304998173516406719475833143478257969366221");
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime(p));
  }
}
BENCHMARK(BM_is_prime_62_digits);

BENCHMARK_MAIN();
