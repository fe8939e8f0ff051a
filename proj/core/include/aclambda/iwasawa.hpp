// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_IWASAWA_HPP
#define ACLAMBDA_IWASAWA_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aclambda/curves.hpp"

namespace aclambda {

// One place w' of L_infinity with the data the lambda formula consumes.
struct PlaceDatum {
  std::string label;
  bool over_p = false;
  std::uint64_t e = 1;  // ramification index in L_inf / K_inf, a power of p
  ReductionType reduction = ReductionType::good;
  bool ramified_over_base = false;  // must equal e > 1
  bool has_p_torsion_locally = false;
  bool finitely_decomposed = false;
};

struct TowerAssumptions {
  bool mu_zero_cotorsion = false;
  bool good_ordinary_and_no_cm_or_no_p_torsion = false;
  bool p_ramified_in_tower = false;
};

// Degree-p^m tower L_inf / K_inf with its place data and the lambda invariant
// of the base level.
struct TowerSpec {
  std::uint64_t p = 5;
  std::uint64_t degree = 5;  // [L_inf : K_inf]
  std::uint64_t lambda_K = 0;
  std::vector<PlaceDatum> places;
  TowerAssumptions assumptions;
};

enum class PlaceClass { P1, P2, neither };
const char* to_string(PlaceClass c);

// P1: not above p, split multiplicative reduction.
// P2: not above p, ramified, good reduction, local point of order p.
PlaceClass classify_place(const PlaceDatum& place, std::uint64_t p);

// lambda(E/L_inf) = degree * lambda_K + sum_{P1}(e-1) + sum_{P2} 2(e-1).
// Throws AssumptionViolation when a flag is false and DecompositionViolation
// when a P1/P2 place is not finitely decomposed.
std::int64_t kida_lambda(const TowerSpec& tower);

// ord_p of the Herbrand quotient of the Selmer group for a degree-p step:
// (# ramified P1 places) + 2 (# P2 places). Degree must be exactly p.
std::int64_t herbrand_ord(const TowerSpec& tower);

// p * lambda_K + (p-1) * herbrand_ord; agrees with kida_lambda on every
// degree-p tower.
std::int64_t lambda_via_herbrand(const TowerSpec& tower);

// A local corank, exact or only bounded below.
struct SigmaVal {
  std::int64_t value = 0;
  bool is_lower_bound = false;
};

struct LedgerPlace {
  std::string label;
  SigmaVal sigma_1;  // corank for E_1
  SigmaVal sigma_2;  // corank for E_2
};

// Omega_0 data comparing two congruent curves.
struct LambdaLedger {
  std::uint64_t p = 5;
  std::int64_t lambda_1 = 0;
  std::vector<LedgerPlace> omega0;
};

// lambda_2 = lambda_1 + sum(sigma_1 - sigma_2); exact when every sigma is
// exact, otherwise the derivable one-sided bounds.
struct LambdaResult {
  std::optional<std::int64_t> exact;
  std::optional<std::int64_t> lower;  // set when a finite lower bound exists
  std::optional<std::int64_t> upper;  // set when a finite upper bound exists
};

LambdaResult lambda_difference(const LambdaLedger& ledger);

struct SigmaBound {
  int bound = 0;                     // lower bound for sigma_E1 - sigma_E2
  bool forces_split_mult = false;    // E2 must have split multiplicative reduction
};

// The corank comparison at a finitely decomposed place where E1 has good and
// E2 bad reduction; with Frobenius trivial on E1[5] the difference is >= 1
// and E2's reduction is forced to be split multiplicative. Contradictory
// reduction claims throw ContradictsLemma.
SigmaBound sigma_diff_bound(ReductionType e1_reduction, ReductionType e2_reduction,
                            bool frobenius_trivial_on_e1_5, bool finitely_decomposed);

enum class Decomposition { finitely_decomposed, infinitely_decomposed };
const char* to_string(Decomposition d);

// In the anticyclotomic tower of an imaginary quadratic K: finitely
// decomposed iff ell = p or ell splits in K.
Decomposition anticyclotomic_sigma_class(std::uint64_t ell, bool splits_in_K, std::uint64_t p);

// ---- file formats ----
//
// Tower-spec file: "key = value" lines plus place blocks,
//
//     p = 5
//     degree = 5
//     lambda_K = 0
//     assume_mu_zero_cotorsion = true
//     assume_good_ordinary_no_cm_or_no_p_torsion = true
//     assume_p_ramified_in_tower = true
//     place {
//       label = w1
//       over_p = false
//       e = 5
//       reduction = split_mult
//       ramified_over_base = true
//       has_p_torsion_locally = false
//       finitely_decomposed = true
//     }
//
// reduction is one of good | split_mult | nonsplit_mult | additive;
// ramified_over_base may be omitted (derived from e) but must match e > 1
// when present. Unknown keys are rejected.
TowerSpec parse_tower_spec(std::istream& in);

// Ledger file: sigma entries are either an exact non-negative integer or a
// lower bound written ">=N",
//
//     p = 5
//     lambda_1 = 0
//     place {
//       label = v1
//       sigma_1 = >=1
//       sigma_2 = 0
//     }
LambdaLedger parse_lambda_ledger(std::istream& in);

}  // namespace aclambda

#endif  // ACLAMBDA_IWASAWA_HPP
