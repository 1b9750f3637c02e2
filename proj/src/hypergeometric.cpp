// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include "legpi/hypergeometric.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace legpi {
namespace {

Rational normalized(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long g = std::gcd(num, den);
  return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

Rational sub(const Rational& x, const Rational& y) {
  return normalized(x.num * y.den - y.num * x.den, x.den * y.den);
}

Rational add_one(const Rational& x) { return normalized(x.num + x.den, x.den); }

// |z| <= 1/2, allowing a rounding slack of 10^-(working/2) so that values
// such as a numerically computed lambda(i) = 1/2 + O(eps) stay admissible.
bool in_half_disc(const BigComplex& z, const PrecisionCtx& ctx) {
  const BigReal bound = ctx.rational(1, 2) + ctx.pow10(-ctx.working_digits() / 2);
  return abs(z) <= bound;
}

}  // namespace

HypParams HypParams::make(Rational a, Rational b, Rational c) {
  a = normalized(a.num, a.den);
  b = normalized(b.num, b.den);
  c = normalized(c.num, c.den);
  if (c.den == 1 && c.num <= 0)
    throw Error(ErrorCode::kInvalidArgument,
                "2F1 parameter c = " + std::to_string(c.num) + " is zero or a negative integer");
  return HypParams(a, b, c);
}

HypParams HypParams::shifted() const {
  return make(add_one(a_), add_one(b_), add_one(c_));
}

HypParams legendre_params() { return HypParams::make({1, 2}, {1, 2}, {1, 1}); }

SeriesResult hyp2f1_series(const HypParams& p, const BigComplex& z, const PrecisionCtx& ctx) {
  const double log_z = z.log10_abs();
  if (!(log_z < 0.0))
    throw Error(ErrorCode::kRegion, "2F1 series requires |z| < 1");
  const double z_mag = std::pow(10.0, log_z);
  const double target = -static_cast<double>(ctx.working_digits() + 5);

  const long an = p.a().num, ad = p.a().den;
  const long bn = p.b().num, bd = p.b().den;
  const long cn = p.c().num, cd = p.c().den;
  // Past this index the term ratio is monotone and the geometric tail bound
  // below is valid.
  const long settle = 2 * (std::labs(an / ad) + std::labs(bn / bd) + std::labs(cn / cd)) + 4;
  const std::size_t cap =
      static_cast<std::size_t>(-target / std::max(1e-3, -log_z)) * 4 + 1000 + settle;

  BigComplex term(ctx.real(1), ctx.real(0));
  BigComplex sum = term;
  for (std::size_t n = 0; n < cap; ++n) {
    const long m = static_cast<long>(n);
    // (a+n)(b+n) / ((c+n)(n+1)) as an integer ratio.
    const long num_a = an + m * ad, num_b = bn + m * bd;
    const long den_c = cn + m * cd;
    if (num_a == 0 || num_b == 0) return {sum, n + 1};  // terminating series
    const double factor = (static_cast<double>(num_a) * num_b * cd) /
                          (static_cast<double>(ad) * bd * den_c * (m + 1));
    term *= z;
    term *= num_a;
    term *= num_b;
    term *= cd;
    term /= ad * bd;
    term /= den_c;
    term /= m + 1;
    sum += term;

    if (m >= settle) {
      const double rho = z_mag * std::max(std::fabs(factor), 1.0);
      if (rho < 1.0) {
        const double tail = term.log10_abs() + std::log10(rho / (1.0 - rho));
        if (tail < target) return {sum, n + 2};
      }
    }
  }
  throw Error(ErrorCode::kNonTermination, "2F1 series exceeded its term cap");
}

BigComplex hyp2f1(const HypParams& p, const BigComplex& z, const PrecisionCtx& ctx) {
  if (in_half_disc(z, ctx)) return hyp2f1_series(p, z, ctx).value;
  if (z.re().sign() < 0) {
    const BigComplex w = z / (z - 1);
    if (in_half_disc(w, ctx)) {
      // Pfaff: 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1))
      const HypParams pfaff = HypParams::make(p.a(), sub(p.c(), p.b()), p.c());
      return pow(1 - z, -p.a().value(ctx)) * hyp2f1_series(pfaff, w, ctx).value;
    }
  }
  throw Error(ErrorCode::kRegion,
              "2F1 argument z = " + z.to_string(12) +
                  " is outside |z| <= 1/2 and the Pfaff region; transform first");
}

BigComplex hyp_derivative(const HypParams& p, const BigComplex& z, const PrecisionCtx& ctx) {
  const BigReal scale = p.a().value(ctx) * p.b().value(ctx) / p.c().value(ctx);
  return hyp2f1(p.shifted(), z, ctx) * scale;
}

BigComplex legendre_F(const BigComplex& lambda, const PrecisionCtx& ctx) {
  return hyp2f1(legendre_params(), lambda, ctx);
}

BigComplex legendre_F2(const BigComplex& lambda, const PrecisionCtx& ctx) {
  return hyp2f1(legendre_params().shifted(), lambda, ctx);
}

BigComplex legendre_dF2(const BigComplex& lambda, const PrecisionCtx& ctx) {
  return legendre_F(lambda, ctx) * legendre_F2(lambda, ctx) / 2;
}

BigReal picard_fuchs_residual(const BigReal& lambda, const PrecisionCtx& ctx) {
  if (lambda.is_zero())
    throw Error(ErrorCode::kSingular, "lambda = 0 is a singular point of the Picard-Fuchs equation");
  if (lambda.sign() < 0 || lambda > ctx.rational(1, 2))
    throw Error(ErrorCode::kRegion, "residual check requires lambda in (0, 1/2]");
  const BigComplex z(lambda, ctx.real(0));
  const HypParams p = legendre_params();
  const BigComplex value = hyp2f1(p, z, ctx);
  const BigComplex first = hyp_derivative(p, z, ctx);
  const BigComplex second = hyp_derivative(p.shifted(), z, ctx) / 4;
  const BigComplex residual =
      lambda * (1 - lambda) * second + (1 - ldexp(lambda, 1)) * first - value / 4;
  return abs(residual);
}

BigReal hyp_via_agm(const BigReal& lambda, const PrecisionCtx& ctx) {
  if (lambda.sign() < 0 || lambda >= 1L)
    throw Error(ErrorCode::kRegion, "AGM route requires lambda in [0, 1)");
  return 1 / agm(ctx.real(1), sqrt(1 - lambda), ctx);
}

}  // namespace legpi
