// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_CURVES_HPP
#define ACLAMBDA_CURVES_HPP

#include <cstdint>
#include <utility>

#include "aclambda/bigint.hpp"

namespace aclambda {

// Short Weierstrass curve y^2 = x^3 + Ax + B over F_ell, ell prime > 3.
struct CurveFp {
  std::uint64_t ell;
  std::uint64_t A;
  std::uint64_t B;
};

bool is_nonsingular(const CurveFp& curve);

// Trace of Frobenius a_ell = ell + 1 - #E(F_ell), by the Legendre-symbol
// character sum. Guarded to ell < 10^6.
std::int64_t ap_naive(const CurveFp& curve);

// The unique representation ell = a^2 + b^2 with a odd, b even, both
// positive, for a prime ell = 1 mod 4. Throws NoRepresentation otherwise.
std::pair<std::uint64_t, std::uint64_t> cornacchia(std::uint64_t ell);

// a_ell for the CM curve y^2 = x^3 - x, ell = 1 mod 4, ell > 5, from
// cornacchia(ell): a_ell = 2a once the sign of a is normalized so that
// a + b = 1 (mod 4). The normalization was calibrated against ap_naive for
// every applicable prime below 10^4; the test suite re-asserts it.
std::int64_t ap_cm(std::uint64_t ell);

// Invariant factors (n1, n2) of E(F_ell), n1 | n2, n1 * n2 = #E(F_ell).
// Full point enumeration; guarded to ell <= 10^4.
std::pair<std::uint64_t, std::uint64_t> group_structure(const CurveFp& curve);

enum class ReductionType { good, split_mult, nonsplit_mult, additive };

const char* to_string(ReductionType t);

// c4/c6/discriminant of a model that is minimal at ell. ell >= 5 so the
// c4 | delta criteria below are valid without Tate's algorithm.
struct ReductionDatum {
  BigInt c4;
  BigInt c6;
  BigInt delta;
  std::uint64_t ell;
};

// good if ell does not divide delta; multiplicative if ell | delta and
// ell does not divide c4 (split iff -c6 is a square mod ell); additive if
// ell divides both.
ReductionType reduction_type(const ReductionDatum& datum);

}  // namespace aclambda

#endif  // ACLAMBDA_CURVES_HPP
