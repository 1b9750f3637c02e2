// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

// Gauss hypergeometric function 2F1 on the regions the Legendre-family
// computations need: the disc |z| <= 1/2 (direct series) and the half plane
// Re z < 0 with |z/(z-1)| <= 1/2 (one Pfaff transformation). Anything else is
// a region error; callers transform explicitly.

#pragma once

#include <cstddef>
#include <utility>

#include "legpi/numerics.hpp"

namespace legpi {

struct Rational {
  long num = 0;
  long den = 1;

  BigReal value(const PrecisionCtx& ctx) const { return ctx.rational(num, den); }
};

// Parameters (a, b; c). c may not be zero or a negative integer.
class HypParams {
 public:
  static HypParams make(Rational a, Rational b, Rational c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  // (a+1, b+1; c+1)
  HypParams shifted() const;

 private:
  HypParams(Rational a, Rational b, Rational c) : a_(a), b_(b), c_(c) {}
  Rational a_, b_, c_;
};

// (1/2, 1/2; 1) and its contiguous neighbours (3/2, 3/2; 2), (5/2, 5/2; 3).
HypParams legendre_params();

struct SeriesResult {
  BigComplex value;
  std::size_t terms = 0;
};

// Plain Taylor series for any |z| < 1, summed until the geometric tail bound
// drops below 10^-(working+5). Exposed for oracles and term-count studies.
SeriesResult hyp2f1_series(const HypParams& p, const BigComplex& z, const PrecisionCtx& ctx);

BigComplex hyp2f1(const HypParams& p, const BigComplex& z, const PrecisionCtx& ctx);

// d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z)
BigComplex hyp_derivative(const HypParams& p, const BigComplex& z, const PrecisionCtx& ctx);

// F = 2F1(1/2,1/2;1;lambda)
BigComplex legendre_F(const BigComplex& lambda, const PrecisionCtx& ctx);
// F2 = 2F1(3/2,3/2;2;lambda) = 4 dF/dlambda
BigComplex legendre_F2(const BigComplex& lambda, const PrecisionCtx& ctx);
// dF^2/dlambda = F F2 / 2
BigComplex legendre_dF2(const BigComplex& lambda, const PrecisionCtx& ctx);

// |lambda(1-lambda)P'' + (1-2lambda)P' - P/4| for P = F, both derivatives from
// the contiguous relation. lambda must lie in (0, 1/2].
BigReal picard_fuchs_residual(const BigReal& lambda, const PrecisionCtx& ctx);

// 1/agm(1, sqrt(1-lambda)), lambda in [0, 1). Independent of the series code.
BigReal hyp_via_agm(const BigReal& lambda, const PrecisionCtx& ctx);

// Derivative of f at x with step h: central difference, or the second-order
// backward stencil (3f(x) - 4f(x-h) + f(x-2h))/(2h) when x+h leaves the
// region (e.g. lambda = 1/2 for the direct series).
template <typename Fn>
BigReal numeric_derivative(Fn&& f, const BigReal& x, const BigReal& h, bool forward_allowed) {
  if (forward_allowed) return (f(x + h) - f(x - h)) / ldexp(h, 1);
  return (3 * f(x) - 4 * f(x - h) + f(x - ldexp(h, 1))) / ldexp(h, 1);
}

}  // namespace legpi
