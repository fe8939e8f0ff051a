// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_RSFAMILY_HPP
#define ACLAMBDA_RSFAMILY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aclambda/bigint.hpp"
#include "aclambda/polymod.hpp"

namespace aclambda {

// One monomial of the Phi_5(X,Y) table.
struct Phi5Entry {
  unsigned xdeg;
  unsigned ydeg;
  BigInt coeff;
  std::string coeff_text;  // decimal string exactly as shipped
};

// Table asset format: one monomial per line, "xdeg ydeg coefficient" in
// decimal, '#' comments and blank lines ignored. Throws SchemaError on
// malformed lines, duplicate monomials, or entries below the diagonal
// (the table stores the xdeg >= ydeg half; the symmetric completion is
// implied).
std::vector<Phi5Entry> parse_phi5_table(std::string_view text);

// Embedded copy of core/data/phi5_table.txt.
extern const char* const kPhi5TableText;

// Data of the Rubin--Silverberg family of curves 5-congruent to
// y^2 = x^3 - x: the parameter polynomial f(t), the discriminant
// Delta(E_t) = 64 f(t)^5, the Phi_5 table, and the admissibility guard
// ell does-not-divide Res(f, f').
class RSFamily {
 public:
  // Shared immutable instance; construction runs the startup self-checks
  // and throws SchemaError on a transcription error.
  static const RSFamily& instance();

  // f(t) = (5t^4 - 2t^2 + 1)(25t^8 - 100t^6 - 210t^4 - 20t^2 + 1), expanded.
  static constexpr std::array<std::int64_t, 13> kFCoeffs = {
      1, 0, -22, 0, -165, 0, 220, 0, -825, 0, -550, 0, 125};

  BigInt f_eval(const BigInt& t) const;
  std::uint64_t f_eval_mod(std::uint64_t t, std::uint64_t ell) const;
  // 64 * f(t)^5, exact.
  BigInt disc_eval(const BigInt& t) const;

  // Monic sextic Phi_5(X, 1728) with exact integer coefficients, ascending
  // by degree; evaluated once from the embedded table and cached.
  const std::vector<BigInt>& phi5_at_1728() const { return phi5e_; }
  PolyModP phi5e_mod(std::uint64_t ell) const;
  PolyModP f_mod(std::uint64_t ell) const;

  // True iff ell does not divide Res(f, f'). ell must exceed 5.
  bool is_admissible(std::uint64_t ell) const;

  const BigInt& resultant_ff_prime() const { return res_; }
  const std::vector<BigInt>& resultant_prime_factors() const { return res_primes_; }
  const std::vector<Phi5Entry>& phi5_table() const { return table_; }

 private:
  RSFamily();

  std::vector<Phi5Entry> table_;
  std::vector<BigInt> phi5e_;
  BigInt res_;
  std::vector<BigInt> res_primes_;
};

// Resultant of two integer polynomials (ascending coefficients), by the
// subresultant polynomial remainder sequence.
BigInt resultant_z(std::vector<BigInt> a, std::vector<BigInt> b);

}  // namespace aclambda

#endif  // ACLAMBDA_RSFAMILY_HPP
