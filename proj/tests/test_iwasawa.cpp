// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <sstream>

#include "aclambda/errors.hpp"
#include "aclambda/iwasawa.hpp"

using namespace aclambda;

namespace {

PlaceDatum make_place(bool over_p, ReductionType red, std::uint64_t e, bool p_torsion,
                      bool fin_dec = true) {
  PlaceDatum w;
  w.label = "w";
  w.over_p = over_p;
  w.e = e;
  w.reduction = red;
  w.ramified_over_base = e > 1;
  w.has_p_torsion_locally = p_torsion;
  w.finitely_decomposed = fin_dec;
  return w;
}

TowerSpec make_tower(std::uint64_t p, std::uint64_t degree, std::uint64_t lambda_K,
                     std::vector<PlaceDatum> places) {
  TowerSpec t;
  t.p = p;
  t.degree = degree;
  t.lambda_K = lambda_K;
  t.places = std::move(places);
  t.assumptions = {true, true, true};
  return t;
}

}  // namespace

TEST_CASE("classify_place follows the definition") {
  CHECK(classify_place(make_place(false, ReductionType::split_mult, 5, false), 5) ==
        PlaceClass::P1);
  CHECK(classify_place(make_place(false, ReductionType::good, 5, true), 5) == PlaceClass::P2);
  CHECK(classify_place(make_place(false, ReductionType::good, 1, true), 5) ==
        PlaceClass::neither);  // unramified: not P2
  CHECK(classify_place(make_place(false, ReductionType::nonsplit_mult, 5, true), 5) ==
        PlaceClass::neither);
  CHECK(classify_place(make_place(false, ReductionType::additive, 5, true), 5) ==
        PlaceClass::neither);
  // places above p are never P1/P2, ramified or not
  CHECK(classify_place(make_place(true, ReductionType::split_mult, 5, true), 5) ==
        PlaceClass::neither);
  CHECK(classify_place(make_place(true, ReductionType::good, 25, true), 5) ==
        PlaceClass::neither);
  // unramified split multiplicative still counts as P1
  CHECK(classify_place(make_place(false, ReductionType::split_mult, 1, false), 5) ==
        PlaceClass::P1);
}

TEST_CASE("kida_lambda examples") {
  CHECK(kida_lambda(make_tower(5, 5, 0, {make_place(false, ReductionType::split_mult, 5, false)})) ==
        4);
  CHECK(kida_lambda(make_tower(5, 25, 3, {})) == 75);  // empty sums
  CHECK(kida_lambda(make_tower(5, 25, 1, {make_place(false, ReductionType::good, 5, true)})) ==
        25 + 2 * 4);
}

TEST_CASE("kida_lambda validates assumptions by name") {
  TowerSpec t = make_tower(5, 5, 0, {});
  t.assumptions.mu_zero_cotorsion = false;
  CHECK_THROWS_WITH_AS(kida_lambda(t), doctest::Contains("mu_zero_cotorsion"),
                       AssumptionViolation);

  t = make_tower(5, 5, 0, {});
  t.assumptions.good_ordinary_and_no_cm_or_no_p_torsion = false;
  CHECK_THROWS_AS(kida_lambda(t), AssumptionViolation);

  t = make_tower(5, 5, 0, {});
  t.assumptions.p_ramified_in_tower = false;
  CHECK_THROWS_AS(kida_lambda(t), AssumptionViolation);
}

TEST_CASE("kida_lambda rejects infinitely decomposed P1/P2 places") {
  TowerSpec t = make_tower(5, 5, 0,
                           {make_place(false, ReductionType::split_mult, 5, false, false)});
  CHECK_THROWS_WITH_AS(kida_lambda(t), doctest::Contains("finitely decomposed"),
                       DecompositionViolation);
  // a 'neither' place may be infinitely decomposed
  TowerSpec ok = make_tower(5, 5, 2, {make_place(false, ReductionType::good, 1, false, false)});
  CHECK(kida_lambda(ok) == 10);
}

TEST_CASE("kida_lambda validates tower shape") {
  TowerSpec t = make_tower(5, 10, 0, {});  // 10 is not a power of 5
  CHECK_THROWS_AS(kida_lambda(t), OutOfRange);
  t = make_tower(5, 5, 0, {make_place(false, ReductionType::good, 3, false)});
  CHECK_THROWS_AS(kida_lambda(t), OutOfRange);  // e = 3 not a power of p
  t = make_tower(5, 5, 0, {make_place(false, ReductionType::good, 25, false)});
  CHECK_THROWS_AS(kida_lambda(t), OutOfRange);  // e does not divide the degree
  t = make_tower(5, 5, 0, {make_place(false, ReductionType::good, 5, false)});
  t.places[0].ramified_over_base = false;
  CHECK_THROWS_AS(kida_lambda(t), OutOfRange);  // inconsistent ramified flag
}

TEST_CASE("herbrand_ord examples") {
  CHECK(herbrand_ord(make_tower(5, 5, 0, {make_place(false, ReductionType::split_mult, 5, false)})) ==
        1);
  CHECK(herbrand_ord(make_tower(5, 5, 0, {make_place(false, ReductionType::good, 5, true)})) == 2);
  CHECK(herbrand_ord(make_tower(5, 5, 7, {})) == 0);  // empty product convention
  // unramified P1 places do not contribute
  CHECK(herbrand_ord(make_tower(5, 5, 0, {make_place(false, ReductionType::split_mult, 1, false)})) ==
        0);
  CHECK_THROWS_AS(herbrand_ord(make_tower(5, 25, 0, {})), DegreeMismatch);
}

TEST_CASE("lambda_via_herbrand examples") {
  CHECK(lambda_via_herbrand(make_tower(5, 5, 0,
                                       {make_place(false, ReductionType::split_mult, 5, false)})) ==
        4);
  CHECK(lambda_via_herbrand(make_tower(5, 5, 2, {})) == 10);
  CHECK(lambda_via_herbrand(make_tower(5, 5, 0, {make_place(false, ReductionType::good, 5, true)})) ==
        8);
}

TEST_CASE("kida_lambda equals lambda_via_herbrand on the exhaustive degree-p grid") {
  // 2^4 place types: over_p x {good, split, nonsplit, additive} x torsion flag
  // is 2 x 4 x 2 = 16, crossed with e in {1, p} and lambda_K in 0..5
  const ReductionType reds[] = {ReductionType::good, ReductionType::split_mult,
                                ReductionType::nonsplit_mult, ReductionType::additive};
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    for (bool over_p : {false, true}) {
      for (ReductionType red : reds) {
        for (bool tors : {false, true}) {
          for (std::uint64_t e : {std::uint64_t{1}, p}) {
            for (std::uint64_t lam = 0; lam <= 5; ++lam) {
              TowerSpec t = make_tower(p, p, lam, {make_place(over_p, red, e, tors)});
              CHECK(kida_lambda(t) == lambda_via_herbrand(t));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("kida_lambda is linear in lambda_K and additive over places") {
  std::vector<PlaceDatum> ws = {make_place(false, ReductionType::split_mult, 5, false),
                                make_place(false, ReductionType::good, 5, true),
                                make_place(false, ReductionType::additive, 5, false)};
  for (std::uint64_t lam = 0; lam <= 4; ++lam) {
    std::int64_t whole = kida_lambda(make_tower(5, 5, lam, ws));
    std::int64_t parts = -2 * 5 * static_cast<std::int64_t>(lam);
    for (const PlaceDatum& w : ws) parts += kida_lambda(make_tower(5, 5, lam, {w}));
    CHECK(whole == parts);  // additivity of the place sums
    CHECK(kida_lambda(make_tower(5, 5, lam + 1, ws)) - whole == 5);
  }
}

TEST_CASE("two chained degree-p steps equal the direct degree-p^2 formula") {
  // per K-orbit behavior of each step: ramify (e = p, one place) or split
  // (g = p places); classification data fixed across levels
  const ReductionType reds[] = {ReductionType::good, ReductionType::split_mult,
                                ReductionType::nonsplit_mult, ReductionType::additive};
  const std::uint64_t p = 5;
  for (ReductionType red : reds) {
    for (bool tors : {false, true}) {
      for (bool ram1 : {false, true}) {
        for (bool ram2 : {false, true}) {
          for (std::uint64_t lam = 0; lam <= 3; ++lam) {
            std::uint64_t e1 = ram1 ? p : 1, g1 = ram1 ? 1 : p;
            std::uint64_t e2 = ram2 ? p : 1, g2 = ram2 ? 1 : p;

            // direct degree-p^2 tower: g1*g2 places of total e = e1*e2
            std::vector<PlaceDatum> direct(g1 * g2, make_place(false, red, e1 * e2, tors));
            std::int64_t whole = kida_lambda(make_tower(p, p * p, lam, direct));

            // chained: step 1 has g1 places with e1; step 2 has g1*g2 with e2
            std::vector<PlaceDatum> step1(g1, make_place(false, red, e1, tors));
            std::int64_t mid = kida_lambda(make_tower(p, p, lam, step1));
            REQUIRE(mid >= 0);
            std::vector<PlaceDatum> step2(g1 * g2, make_place(false, red, e2, tors));
            std::int64_t chained =
                kida_lambda(make_tower(p, p, static_cast<std::uint64_t>(mid), step2));
            CHECK(chained == whole);
          }
        }
      }
    }
  }
}

TEST_CASE("lambda_difference examples") {
  LambdaLedger led;
  led.p = 5;
  led.lambda_1 = 0;
  led.omega0 = {{"v1", {1, false}, {1, false}}, {"v2", {2, false}, {2, false}}};
  LambdaResult same = lambda_difference(led);
  REQUIRE(same.exact.has_value());
  CHECK(*same.exact == 0);  // identical sigmas: lambda_2 = lambda_1

  led.omega0 = {{"v1", {1, false}, {0, false}}, {"v2", {1, false}, {0, false}}};
  CHECK(*lambda_difference(led).exact == 2);

  led.lambda_1 = 1;
  led.omega0 = {{"v1", {2, false}, {0, false}}};
  CHECK(*lambda_difference(led).exact == 3);
}

TEST_CASE("lambda_difference with the paper's bounds") {
  LambdaLedger led;
  led.p = 5;
  led.lambda_1 = 0;
  for (int i = 0; i < 4; ++i) led.omega0.push_back({"v", {1, true}, {0, false}});
  LambdaResult r = lambda_difference(led);
  CHECK_FALSE(r.exact.has_value());
  REQUIRE(r.lower.has_value());
  CHECK(*r.lower == 4);  // lambda_2 >= 4
  CHECK_FALSE(r.upper.has_value());
}

TEST_CASE("lambda_difference is antisymmetric under swapping the curves") {
  LambdaLedger led;
  led.p = 5;
  led.lambda_1 = 0;
  led.omega0 = {{"v1", {3, false}, {1, false}}, {"v2", {0, false}, {2, false}}};
  LambdaResult fwd = lambda_difference(led);
  LambdaLedger swapped = led;
  for (LedgerPlace& v : swapped.omega0) std::swap(v.sigma_1, v.sigma_2);
  LambdaResult bwd = lambda_difference(swapped);
  REQUIRE(fwd.exact.has_value());
  REQUIRE(bwd.exact.has_value());
  CHECK(*fwd.exact - led.lambda_1 == -(*bwd.exact - led.lambda_1));
}

TEST_CASE("lambda_difference rejects negative coranks") {
  LambdaLedger led;
  led.p = 5;
  led.lambda_1 = 0;
  led.omega0 = {{"v1", {-1, false}, {0, false}}};
  CHECK_THROWS_AS(lambda_difference(led), InvalidCorank);
}

TEST_CASE("sigma_diff_bound follows the reduction-comparison lemma") {
  SigmaBound strict = sigma_diff_bound(ReductionType::good, ReductionType::split_mult, true, true);
  CHECK(strict.bound == 1);
  CHECK(strict.forces_split_mult);

  SigmaBound weak = sigma_diff_bound(ReductionType::good, ReductionType::split_mult, false, true);
  CHECK(weak.bound == 0);
  CHECK_FALSE(weak.forces_split_mult);

  // frobenius not trivial: any bad reduction gives only the trivial bound
  CHECK(sigma_diff_bound(ReductionType::good, ReductionType::additive, false, true).bound == 0);

  CHECK_THROWS_AS(sigma_diff_bound(ReductionType::good, ReductionType::additive, true, true),
                  ContradictsLemma);
  CHECK_THROWS_AS(sigma_diff_bound(ReductionType::good, ReductionType::nonsplit_mult, true, true),
                  ContradictsLemma);
  CHECK_THROWS_AS(sigma_diff_bound(ReductionType::good, ReductionType::split_mult, true, false),
                  DecompositionViolation);
  CHECK_THROWS_AS(sigma_diff_bound(ReductionType::split_mult, ReductionType::split_mult, true, true),
                  OutOfRange);
  CHECK_THROWS_AS(sigma_diff_bound(ReductionType::good, ReductionType::good, true, true),
                  OutOfRange);
}

TEST_CASE("anticyclotomic_sigma_class") {
  CHECK(anticyclotomic_sigma_class(5, false, 5) == Decomposition::finitely_decomposed);
  CHECK(anticyclotomic_sigma_class(63241, true, 5) == Decomposition::finitely_decomposed);
  CHECK(anticyclotomic_sigma_class(7, false, 5) == Decomposition::infinitely_decomposed);
}

TEST_CASE("tower spec parser round-trips the documented example") {
  std::istringstream in(R"(# tower for the worked example
p = 5
degree = 5
lambda_K = 0
assume_mu_zero_cotorsion = true
assume_good_ordinary_no_cm_or_no_p_torsion = true
assume_p_ramified_in_tower = true

place {
  label = w1
  over_p = false
  e = 5
  reduction = split_mult
  has_p_torsion_locally = false
  finitely_decomposed = true
}
)");
  TowerSpec t = parse_tower_spec(in);
  CHECK(t.p == 5);
  CHECK(t.degree == 5);
  CHECK(t.lambda_K == 0);
  REQUIRE(t.places.size() == 1);
  CHECK(t.places[0].label == "w1");
  CHECK(t.places[0].ramified_over_base);  // derived from e = 5
  CHECK(kida_lambda(t) == 4);
}

TEST_CASE("tower spec parser rejects schema violations") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_tower_spec(in);
  };
  CHECK_THROWS_AS(parse("p = 5\ndegree = 5\n"), SchemaError);  // missing keys
  CHECK_THROWS_AS(parse("p = 5\ndegree = 5\nlambda_K = 0\nassume_mu_zero_cotorsion = true\n"
                        "assume_good_ordinary_no_cm_or_no_p_torsion = true\n"
                        "assume_p_ramified_in_tower = true\nbogus = 1\n"),
                  SchemaError);  // unknown key
  CHECK_THROWS_AS(parse("p = five\ndegree = 5\nlambda_K = 0\n"), SchemaError);
  // ramified_over_base contradicting e
  CHECK_THROWS_AS(parse("p = 5\ndegree = 5\nlambda_K = 0\nassume_mu_zero_cotorsion = true\n"
                        "assume_good_ordinary_no_cm_or_no_p_torsion = true\n"
                        "assume_p_ramified_in_tower = true\n"
                        "place {\nover_p = false\ne = 5\nreduction = good\n"
                        "ramified_over_base = false\nhas_p_torsion_locally = false\n"
                        "finitely_decomposed = true\n}\n"),
                  SchemaError);
  CHECK_THROWS_AS(parse("p = 5\ndegree = 5\nlambda_K = 0\nassume_mu_zero_cotorsion = true\n"
                        "assume_good_ordinary_no_cm_or_no_p_torsion = true\n"
                        "assume_p_ramified_in_tower = true\nplace {\n"),
                  SchemaError);  // unterminated block
}

TEST_CASE("ledger parser handles exact values and lower bounds") {
  std::istringstream in(R"(p = 5
lambda_1 = 0
place {
  label = v1
  sigma_1 = >=1
  sigma_2 = 0
}
place {
  sigma_1 = 2
  sigma_2 = 1
}
)");
  LambdaLedger led = parse_lambda_ledger(in);
  CHECK(led.p == 5);
  REQUIRE(led.omega0.size() == 2);
  CHECK(led.omega0[0].sigma_1.is_lower_bound);
  CHECK(led.omega0[0].sigma_1.value == 1);
  CHECK_FALSE(led.omega0[0].sigma_2.is_lower_bound);
  CHECK(led.omega0[1].label == "v2");  // default label

  std::istringstream bad("p = 5\nlambda_1 = 0\nplace {\nsigma_1 = -3\nsigma_2 = 0\n}\n");
  CHECK_THROWS_AS(parse_lambda_ledger(bad), SchemaError);
}
