// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

// CM points, the quasi-period relation, the Chudnovsky-Ramanujan type
// formula for the Legendre family, the two 1/pi identities and the pi engine.
//
// The right-hand side pi of every report comes from pi_reference, never from
// the identities under test.

#pragma once

#include <optional>
#include <string>

#include "legpi/modular.hpp"
#include "legpi/numerics.hpp"
#include "legpi/report.hpp"

namespace legpi {

// a tau^2 + b tau + c = 0 with gcd(a,b,c) = 1, a > 0, d = 4ac - b^2 > 0.
class CMQuadratic {
 public:
  static CMQuadratic make(long a, long b, long c);

  long a() const { return a_; }
  long b() const { return b_; }
  long c() const { return c_; }
  long d() const { return 4 * a_ * c_ - b_ * b_; }
  std::string to_string() const;

  // The form of tau + 1: (a, b - 2a, a - b + c).
  CMQuadratic translated() const;

 private:
  CMQuadratic(long a, long b, long c) : a_(a), b_(b), c_(c) {}
  long a_, b_, c_;
};

// tau = (-b + i sqrt(d)) / (2a)
TauPoint cm_tau(const CMQuadratic& q, const PrecisionCtx& ctx);

// (3 g3 / 2 g2) s2(tau) for E_lambda, lambda = lambda(tau), in the form
//   (E2(tau) - 3/(pi Im tau)) / (3 F^2),
// which stays finite where E6(tau) = 0 (tau = i, 1 + i). F = F(lambda(tau)).
BigComplex combined_s2_term(const TauPoint& t, const BigComplex& F, const PrecisionCtx& ctx);

// Omega1 H1 Im(tau) - Omega1^2 Im(tau) (3g3/2g2) s2(tau) = pi
FormulaReport quasiperiod_relation_check(const CMQuadratic& q, const PrecisionCtx& ctx);

// -F^2 [(2l-1)/3 + (3g3/2g2) s2] + l(1-l) dF^2/dl = 2a/(pi sqrt d)
FormulaReport theorem_general_check(const CMQuadratic& q, const PrecisionCtx& ctx);

// 8/pi = F(1/2) F2(1/2)
FormulaReport identity1_check(const PrecisionCtx& ctx);
// 1/pi = F(-1)^2 - F(-1) F2(-1)
FormulaReport identity2_check(const PrecisionCtx& ctx);

// pi from identity 1 or 2, `digits` significant digits, truncated.
std::string pi_from_identity(int which, long digits);
// pi_reference printed the same way, for comparison.
std::string pi_reference_digits(long digits);

// Checks that the combined form agrees with the raw (3g3/2g2) s2 where E6 is
// not zero; nullopt where the raw form is 0/0. Used by cm-report.
std::optional<FormulaReport> combined_term_cross_check(const CMQuadratic& q, const PrecisionCtx& ctx);

}  // namespace legpi
