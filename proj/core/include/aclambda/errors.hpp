// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ACLAMBDA_ERRORS_HPP
#define ACLAMBDA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aclambda {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidModulus : Error { using Error::Error; };
struct NoSquareRoot : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

struct ModulusMismatch : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };

struct CostGuard : Error { using Error::Error; };
struct NoRepresentation : Error { using Error::Error; };
struct SmallPrimeUnsupported : Error { using Error::Error; };
struct RootNotFound : Error {
  explicit RootNotFound(unsigned long long ell)
      : Error("f has no root modulo " + std::to_string(ell)), modulus(ell) {}
  unsigned long long modulus;
};

struct AssumptionViolation : Error {
  AssumptionViolation(const std::string& flag, const std::string& what)
      : Error("assumption violated: " + flag + " (" + what + ")"), flag_name(flag) {}
  std::string flag_name;
};
struct DecompositionViolation : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct InvalidCorank : Error { using Error::Error; };
struct ContradictsLemma : Error { using Error::Error; };

// Malformed config, file schema, or decimal input.
struct SchemaError : Error { using Error::Error; };

}  // namespace aclambda

#endif  // ACLAMBDA_ERRORS_HPP
