// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include "legpi/cm.hpp"

#include <numeric>

#include "legpi/hypergeometric.hpp"
#include "legpi/legendre.hpp"

namespace legpi {
namespace {

struct CMPoint {
  TauPoint tau;
  BigComplex lambda;
  BigComplex F;
};

CMPoint evaluate_point(const CMQuadratic& q, const PrecisionCtx& ctx) {
  TauPoint t = cm_tau(q, ctx);
  BigComplex l = snap_to_real(lambda_tau_reduced(t, ctx), ctx);
  BigComplex f = legendre_F(l, ctx);
  return {std::move(t), std::move(l), std::move(f)};
}

std::string label_for(const char* name, const CMQuadratic& q) {
  return std::string(name) + " abc=" + q.to_string();
}

BigComplex pi_from(int which, const PrecisionCtx& ctx) {
  if (which == 1) {
    const BigComplex half(ctx.rational(1, 2), ctx.real(0));
    return 8 * inverse(legendre_F(half, ctx) * legendre_F2(half, ctx));
  }
  if (which == 2) {
    const BigComplex minus_one = ctx.complex(-1);
    const BigComplex f = legendre_F(minus_one, ctx);
    return inverse(f * f - f * legendre_F2(minus_one, ctx));
  }
  throw Error(ErrorCode::kInvalidArgument, "identity must be 1 or 2");
}

}  // namespace

CMQuadratic CMQuadratic::make(long a, long b, long c) {
  if (a <= 0) throw Error(ErrorCode::kInvalidArgument, "CM form needs a > 0");
  if (std::gcd(std::gcd(a, b), c) != 1)
    throw Error(ErrorCode::kInvalidArgument, "CM form needs gcd(a, b, c) = 1");
  if (4 * a * c - b * b <= 0)
    throw Error(ErrorCode::kInvalidArgument, "CM form needs d = 4ac - b^2 > 0");
  return CMQuadratic(a, b, c);
}

std::string CMQuadratic::to_string() const {
  return std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_);
}

CMQuadratic CMQuadratic::translated() const { return make(a_, b_ - 2 * a_, a_ - b_ + c_); }

TauPoint cm_tau(const CMQuadratic& q, const PrecisionCtx& ctx) {
  const BigReal re = ctx.rational(-q.b(), 2 * q.a());
  const BigReal im = sqrt(ctx.real(q.d())) / (2 * q.a());
  return TauPoint::make(BigComplex(re, im), ctx);
}

BigComplex combined_s2_term(const TauPoint& t, const BigComplex& F, const PrecisionCtx& ctx) {
  // 3g3/2g2 = Omega1^-2 (pi^2/3) E6/E4 with Omega1 = pi F, so the E4/E6 of s2
  // cancels against it.
  return s2_bracket(t, ctx) / (F * F * 3);
}

FormulaReport quasiperiod_relation_check(const CMQuadratic& q, const PrecisionCtx& ctx) {
  const CMPoint p = evaluate_point(q, ctx);
  const PeriodPair pp = quasiperiod_bruns(p.lambda, ctx);
  const BigReal& y = p.tau.imag();
  const BigComplex s = combined_s2_term(p.tau, p.F, ctx);
  const BigComplex lhs = pp.omega1 * pp.h1 * y - pp.omega1 * pp.omega1 * y * s;
  const BigComplex rhs(pi_reference(ctx), ctx.real(0));
  return make_report(label_for("quasiperiod_relation", q), lhs, rhs, ctx);
}

FormulaReport theorem_general_check(const CMQuadratic& q, const PrecisionCtx& ctx) {
  const CMPoint p = evaluate_point(q, ctx);
  const BigComplex& l = p.lambda;
  const BigComplex f2 = legendre_F2(l, ctx);
  const BigComplex s = combined_s2_term(p.tau, p.F, ctx);
  const BigComplex lhs =
      -(p.F * p.F) * ((l * 2 - 1) / 3 + s) + l * (1 - l) * p.F * f2 / 2;
  const BigReal rhs = ctx.real(2 * q.a()) / (pi_reference(ctx) * sqrt(ctx.real(q.d())));
  return make_report(label_for("theorem_general", q), lhs, BigComplex(rhs, ctx.real(0)), ctx);
}

FormulaReport identity1_check(const PrecisionCtx& ctx) {
  const BigComplex half(ctx.rational(1, 2), ctx.real(0));
  const BigComplex product = legendre_F(half, ctx) * legendre_F2(half, ctx);
  const BigComplex expected(8 / pi_reference(ctx), ctx.real(0));
  return make_report("identity1 8/pi = F(1/2) F2(1/2)", expected, product, ctx);
}

FormulaReport identity2_check(const PrecisionCtx& ctx) {
  const BigComplex minus_one = ctx.complex(-1);
  const BigComplex f = legendre_F(minus_one, ctx);
  const BigComplex combo = f * f - f * legendre_F2(minus_one, ctx);
  const BigComplex expected(1 / pi_reference(ctx), ctx.real(0));
  return make_report("identity2 1/pi = F(-1)^2 - F(-1) F2(-1)", expected, combo, ctx);
}

std::string pi_from_identity(int which, long digits) {
  const PrecisionCtx ctx = PrecisionCtx::make(digits);
  return pi_from(which, ctx).re().to_string(static_cast<int>(digits), Rounding::kTruncate);
}

std::string pi_reference_digits(long digits) {
  const PrecisionCtx ctx = PrecisionCtx::make(digits);
  return pi_reference(ctx).to_string(static_cast<int>(digits), Rounding::kTruncate);
}

std::optional<FormulaReport> combined_term_cross_check(const CMQuadratic& q,
                                                       const PrecisionCtx& ctx) {
  const CMPoint p = evaluate_point(q, ctx);
  const BigComplex combined = combined_s2_term(p.tau, p.F, ctx);
  const LegendreCurve curve = weierstrass_from_lambda(p.lambda);
  try {
    const BigComplex raw = curve.g3 * 3 / (curve.g2 * 2) * s2(p.tau, ctx);
    return make_report(label_for("combined_s2_term", q), combined, raw, ctx);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIndeterminate) return std::nullopt;
    throw;
  }
}

}  // namespace legpi
