// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_POLYMOD_HPP
#define ACLAMBDA_POLYMOD_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "aclambda/arith.hpp"

namespace aclambda {

// Dense univariate polynomial over F_ell (ell an odd prime). Coefficients
// are ascending by degree and kept canonical: reduced mod ell, no trailing
// zeros, empty vector = zero polynomial. Degrees stay tiny in this project
// (<= 12), so all products are schoolbook.
class PolyModP {
 public:
  PolyModP(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  PolyModP(std::uint64_t modulus, std::initializer_list<std::int64_t> coeffs);
  static PolyModP zero(std::uint64_t modulus) { return PolyModP(modulus, std::vector<std::uint64_t>{}); }
  static PolyModP x(std::uint64_t modulus) { return PolyModP(modulus, {0, 1}); }

  std::uint64_t modulus() const { return mod_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint64_t coeff(std::size_t d) const { return d < c_.size() ? c_[d] : 0; }

  std::uint64_t eval(std::uint64_t x) const;

  PolyModP operator+(const PolyModP& o) const;
  PolyModP operator-(const PolyModP& o) const;
  PolyModP operator*(const PolyModP& o) const;
  bool operator==(const PolyModP& o) const = default;

  PolyModP derivative() const;
  PolyModP monic() const;
  // Euclidean division; divisor must be nonzero.
  static std::pair<PolyModP, PolyModP> divrem(const PolyModP& a, const PolyModP& b);

  std::string to_string() const;

 private:
  void canonicalize();
  void check_same_ring(const PolyModP& o) const;

  std::uint64_t mod_;
  std::vector<std::uint64_t> c_;
};

// Monic gcd by Euclid's algorithm; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
PolyModP poly_gcd(const PolyModP& f, const PolyModP& g);

// x^ell reduced mod f, by repeated squaring. f must be monic of degree >= 1.
PolyModP frobenius_power(const PolyModP& f);

// True iff f divides x^ell - x and is squarefree, i.e. f is a product of
// distinct linear factors over F_ell.
bool splits_distinct_linear(const PolyModP& f);

// All distinct roots of f in F_ell, ascending. Randomized equal-degree
// splitting inside; the seed only affects the internal search path, never
// the result.
std::vector<std::uint64_t> roots(const PolyModP& f, std::uint64_t seed = 0);

}  // namespace aclambda

#endif  // ACLAMBDA_POLYMOD_HPP
