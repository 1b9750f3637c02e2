// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

// The Legendre family y^2 = x(x-1)(x-lambda) in Weierstrass form
//   E_lambda : y^2 = 4x^3 - g2 x - g3,
// its first period and quasi-period, and numerical checks of the period
// formulas around tau = i*inf, 0 and 1.
//
// All fractional powers use principal branches. The period checks are meant
// for tau on the imaginary axis (or on 1 + imaginary axis), where every
// quantity under a root is real; elsewhere the reports carry branch flags.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "legpi/modular.hpp"
#include "legpi/numerics.hpp"
#include "legpi/report.hpp"

namespace legpi {

struct LegendreCurve {
  BigComplex lambda;
  BigComplex g2;    // (4/3)(l^2 - l + 1)
  BigComplex g3;    // (4/27)(l + 1)(2l - 1)(l - 2)
  BigComplex disc;  // g2^3 - 27 g3^2 = 16 l^2 (1-l)^2
  BigComplex e0, e1, e_lambda;
  bool degenerate = false;  // lambda in {0, 1}
};

LegendreCurve weierstrass_from_lambda(const BigComplex& lambda);

struct PeriodPair {
  BigComplex omega1;  // Omega_1 = pi F(lambda)
  BigComplex h1;      // quasi-period H_1

  // Periods of y^2 = x(x-1)(x-lambda): P1 = 2 Omega1, Q1 = 2 H1 - ((1+l)/3) P1
  BigComplex p1() const { return omega1 * 2; }
  BigComplex q1(const BigComplex& lambda) const;
};

// Omega_1 = pi 2F1(1/2,1/2;1;lambda)
BigComplex period_classical(const BigComplex& lambda, const PrecisionCtx& ctx);

// H1 = -2l(l-1) dOmega1/dl - ((2l-1)/3) Omega1, dOmega1/dl = (pi/4) F2.
PeriodPair quasiperiod_bruns(const BigComplex& lambda, const PrecisionCtx& ctx);

struct BrunsResiduals {
  BigReal omega_relation;  // dOmega1/dl equation, dOmega1/dl from the contiguous relation
  BigReal h_relation;      // dH1/dl equation, dH1/dl by finite differences
};

// lambda in (0, 1/2]; finite-difference step 10^-(working/4).
BrunsResiduals bruns_residuals(const BigReal& lambda, const PrecisionCtx& ctx);

// The three printed expressions for the homothety factor mu(tau) with
// Lambda(E_lambda) = mu(tau) (Z + Z tau), and their ratios to pi F(lambda(tau)).
struct HomothetyReport {
  BigComplex lambda;
  BigComplex reference;  // pi F(lambda)
  std::array<BigComplex, 3> values;  // sqrt(g3/g2) form, J form, closed form
  std::array<BigComplex, 3> ratios;  // values[k] / reference
  std::vector<std::string> branch_flags;

  std::string to_json(int digits) const;
};

HomothetyReport homothety_mu(const TauPoint& t, const PrecisionCtx& ctx);

// omega1 = 2^{1/3} pi (l(1-l))^{1/6} Delta(E)^{-1/12} F(l) for E = E_lambda.
// lhs comes from the eta route omega1 = Delta(tau)^{1/12} / Delta(E)^{1/12}
// with Delta(tau)^{1/12} = 2 pi eta(tau)^2; rhs from the hypergeometric route.
FormulaReport check_theorem_period(const TauPoint& t, const LegendreCurve& curve,
                                   const PrecisionCtx& ctx);

// Around tau = 0: omega1 = 2^{1/3} (pi i/tau) (l(1-l))^{1/6} Delta(E)^{-1/12} F(1-l).
FormulaReport check_theorem_transform(const TauPoint& t, const PrecisionCtx& ctx);

// Around tau = 1, as printed:
//   omega1 = 2^{1/3} pi i / ((tau+1) sqrt(1-l)) (l(1-l))^{1/6} Delta(E)^{-1/12} F(1/(1-l)).
// The report measures lhs/rhs and flags it when the two sides differ by a
// constant factor; it also records the error of the variant with (tau-1).
FormulaReport check_theorem_around1(const TauPoint& t, const PrecisionCtx& ctx);

struct Around1Sides {
  BigComplex lhs;              // eta route
  BigComplex rhs;              // as printed, with 1/(tau+1)
  BigComplex rhs_tau_minus_1;  // same with 1/(tau-1)
  std::vector<std::string> branch_flags;
};

Around1Sides evaluate_theorem_around1(const TauPoint& t, const PrecisionCtx& ctx);

}  // namespace legpi
