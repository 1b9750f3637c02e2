// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include "legpi/legendre.hpp"

#include "json.hpp"
#include "legpi/hypergeometric.hpp"

namespace legpi {
namespace {

BigReal third(mpfr_prec_t bits) { return BigReal(1, bits) / 3; }

bool near_real(const BigComplex& z, const PrecisionCtx& ctx) {
  return abs(z.im()) <= ctx.pow10(-ctx.working_digits() / 2) * max(abs(z.re()), ctx.real(1));
}

BigComplex clean(const BigComplex& z, const PrecisionCtx& ctx) { return snap_to_real(z, ctx); }

BigComplex root(const BigComplex& z, long n, const PrecisionCtx& ctx) {
  return pow(z, ctx.rational(1, n));
}

std::string label_for(const char* name, const TauPoint& t) {
  return std::string(name) + " tau=" + t.tau().to_string(8);
}

// omega1 from the eta route: Delta(tau)^{1/12} / Delta(E)^{1/12}.
BigComplex omega_eta_route(const TauPoint& t, const LegendreCurve& curve, const PrecisionCtx& ctx) {
  const BigReal two_pi = ldexp(pi_reference(ctx), 1);
  const BigComplex e = eta(t, ctx);
  return e * e * two_pi * pow(curve.disc, -ctx.rational(1, 12));
}

void flag_lambda_branch(const BigComplex& lambda, const PrecisionCtx& ctx,
                        std::vector<std::string>& flags) {
  const BigComplex prod = lambda * (1 - lambda);
  if (!near_real(prod, ctx)) {
    flags.push_back("lambda(1-lambda) is not real; principal roots unverified");
  } else if (prod.re().sign() < 0) {
    flags.push_back("lambda(1-lambda) on the negative real axis; principal sixth root used");
  }
}

}  // namespace

LegendreCurve weierstrass_from_lambda(const BigComplex& lambda) {
  const mpfr_prec_t bits = lambda.bits();
  const BigComplex& l = lambda;
  const BigComplex one_minus = 1 - l;
  LegendreCurve c;
  c.lambda = l;
  c.g2 = (l * l - l + 1) * 4 * third(bits);
  c.g3 = (l + 1) * (l * 2 - 1) * (l - 2) * 4 / 27;
  c.disc = l * l * one_minus * one_minus * 16;
  c.e0 = -(l + 1) * third(bits);
  c.e1 = (2 - l) * third(bits);
  c.e_lambda = (l * 2 - 1) * third(bits);
  c.degenerate = l.is_zero() || one_minus.is_zero();
  return c;
}

BigComplex PeriodPair::q1(const BigComplex& lambda) const {
  return h1 * 2 - (lambda + 1) * p1() / 3;
}

BigComplex period_classical(const BigComplex& lambda, const PrecisionCtx& ctx) {
  return legendre_F(lambda, ctx) * pi_reference(ctx);
}

PeriodPair quasiperiod_bruns(const BigComplex& lambda, const PrecisionCtx& ctx) {
  const BigReal pi = pi_reference(ctx);
  const BigComplex omega = legendre_F(lambda, ctx) * pi;
  const BigComplex d_omega = legendre_F2(lambda, ctx) * pi / 4;
  BigComplex h = -2 * lambda * (lambda - 1) * d_omega - (lambda * 2 - 1) * omega / 3;
  return {omega, std::move(h)};
}

BrunsResiduals bruns_residuals(const BigReal& lambda, const PrecisionCtx& ctx) {
  if (lambda.is_zero())
    throw Error(ErrorCode::kSingular, "lambda = 0 is singular for the Bruns relations");
  const BigReal half = ctx.rational(1, 2);
  if (lambda.sign() < 0 || lambda > half)
    throw Error(ErrorCode::kRegion, "Bruns residuals require lambda in (0, 1/2]");

  const BigReal pi = pi_reference(ctx);
  const BigComplex l(lambda, ctx.real(0));
  const PeriodPair pp = quasiperiod_bruns(l, ctx);
  const BigComplex d_omega = legendre_F2(l, ctx) * pi / 4;
  const BigComplex ll1 = l * (l - 1);

  const BigComplex r1 = d_omega + pp.h1 / (ll1 * 2) + (l * 2 - 1) / (ll1 * 6) * pp.omega1;

  const BigReal h = ctx.pow10(-ctx.working_digits() / 4);
  auto h1_of = [&](const BigReal& x) {
    return quasiperiod_bruns(BigComplex(x, ctx.real(0)), ctx).h1.re();
  };
  const BigReal d_h1 = numeric_derivative(h1_of, lambda, h, lambda + h <= half);
  const BigComplex r2 = BigComplex(d_h1, ctx.real(0)) -
                        (l * l - l + 1) / (ll1 * 18) * pp.omega1 -
                        (l * 2 - 1) / (ll1 * 6) * pp.h1;
  return {abs(r1), abs(r2)};
}

std::string HomothetyReport::to_json(int digits) const {
  nlohmann::ordered_json j;
  j["lambda"] = lambda.to_string(digits);
  j["reference"] = reference.to_string(digits);
  j["values"] = nlohmann::json::array();
  j["ratios"] = nlohmann::json::array();
  for (const BigComplex& v : values) j["values"].push_back(v.to_string(digits));
  for (const BigComplex& r : ratios) j["ratios"].push_back(r.to_string(digits));
  j["branch_flags"] = branch_flags;
  return j.dump();
}

HomothetyReport homothety_mu(const TauPoint& t, const PrecisionCtx& ctx) {
  HomothetyReport rep;
  rep.lambda = clean(lambda_tau(t, ctx), ctx);
  const LegendreCurve curve = weierstrass_from_lambda(rep.lambda);
  if (curve.degenerate) throw Error(ErrorCode::kSingular, "lambda(tau) in {0, 1}");
  const BigComplex& l = rep.lambda;
  rep.reference = period_classical(l, ctx);

  const BigComplex quad = l * l - l + 1;
  const BigComplex cubic = (l + 1) * (l * 2 - 1) * (l - 2);
  const BigComplex delta_root = root(delta_tau(t, ctx), 12, ctx);
  flag_lambda_branch(l, ctx, rep.branch_flags);

  if (abs(cubic) <= ctx.pow10(-ctx.working_digits() / 2)) {
    rep.branch_flags.push_back("g3(E_lambda) vanishes; sqrt(g3/g2) and J forms undefined");
    rep.values[0] = BigComplex(ctx.bits());
    rep.values[1] = BigComplex(ctx.bits());
  } else {
    const BigComplex shape = sqrt(quad * 9 / cubic);
    rep.values[0] = sqrt(quad * 9 / cubic * g3_tau(t, ctx) / g2_tau(t, ctx));
    const BigComplex j = normalized_j(l);
    rep.values[1] = delta_root * pow(j, -ctx.rational(1, 6)) * root(j - 1, 4, ctx) *
                    pow(ctx.complex(27), -ctx.rational(1, 4)) * shape;
  }
  rep.values[2] = delta_root * root(ctx.complex(2), 3, ctx) / 27 /
                  root(clean(l * (1 - l), ctx), 6, ctx);
  for (std::size_t k = 0; k < 3; ++k) rep.ratios[k] = rep.values[k] / rep.reference;
  return rep;
}

FormulaReport check_theorem_period(const TauPoint& t, const LegendreCurve& curve,
                                   const PrecisionCtx& ctx) {
  std::vector<std::string> flags;
  const BigComplex l = clean(curve.lambda, ctx);
  flag_lambda_branch(l, ctx, flags);
  const BigComplex from_tau = lambda_tau_reduced(t, ctx);
  if (abs(from_tau - l) > pass_threshold(ctx.target_digits(), ctx))
    flags.push_back("curve lambda differs from lambda(tau) by " + abs(from_tau - l).to_string(6));

  const BigComplex lhs = omega_eta_route(t, curve, ctx);
  const BigComplex rhs = root(ctx.complex(2), 3, ctx) * pi_reference(ctx) *
                         root(clean(l * (1 - l), ctx), 6, ctx) *
                         pow(curve.disc, -ctx.rational(1, 12)) * legendre_F(l, ctx);
  return make_report(label_for("theorem_period", t), lhs, rhs, ctx, std::move(flags));
}

FormulaReport check_theorem_transform(const TauPoint& t, const PrecisionCtx& ctx) {
  std::vector<std::string> flags;
  const BigComplex l = clean(lambda_tau_reduced(t, ctx), ctx);
  flag_lambda_branch(l, ctx, flags);
  const LegendreCurve curve = weierstrass_from_lambda(l);

  const BigComplex lhs = omega_eta_route(t, curve, ctx);
  const BigComplex pi_i_over_tau = i_times(ctx.complex(1)) * pi_reference(ctx) / t.tau();
  const BigComplex rhs = root(ctx.complex(2), 3, ctx) * pi_i_over_tau *
                         root(clean(l * (1 - l), ctx), 6, ctx) *
                         pow(curve.disc, -ctx.rational(1, 12)) * legendre_F(1 - l, ctx);
  return make_report(label_for("theorem_transform", t), lhs, rhs, ctx, std::move(flags));
}

Around1Sides evaluate_theorem_around1(const TauPoint& t, const PrecisionCtx& ctx) {
  Around1Sides out;
  const BigComplex l = clean(lambda_tau_reduced(t, ctx), ctx);
  flag_lambda_branch(l, ctx, out.branch_flags);
  const LegendreCurve curve = weierstrass_from_lambda(l);

  out.lhs = omega_eta_route(t, curve, ctx);
  // Everything except the 1/(tau+1) factor.
  const BigComplex common = root(ctx.complex(2), 3, ctx) * i_times(ctx.complex(1)) *
                            pi_reference(ctx) / sqrt(clean(1 - l, ctx)) *
                            root(clean(l * (1 - l), ctx), 6, ctx) *
                            pow(curve.disc, -ctx.rational(1, 12)) *
                            legendre_F(inverse(1 - l), ctx);
  out.rhs = common / (t.tau() + 1);
  out.rhs_tau_minus_1 = common / (t.tau() - 1);
  return out;
}

FormulaReport check_theorem_around1(const TauPoint& t, const PrecisionCtx& ctx) {
  Around1Sides sides = evaluate_theorem_around1(t, ctx);
  const BigComplex ratio = sides.lhs / sides.rhs;
  const BigReal tol = pass_threshold(ctx.target_digits(), ctx);
  if (abs(ratio - 1) >= tol) {
    const int shown = 20;
    auto& flags = sides.branch_flags;
    flags.push_back("lhs/rhs = " + ratio.to_string(shown));
    if (abs(abs(ratio) - 1) < tol) flags.push_back("discrepancy is a unimodular factor");
    const BigComplex expected = (t.tau() + 1) / (t.tau() - 1);
    flags.push_back("(tau+1)/(tau-1) = " + expected.to_string(shown) +
                    ", |lhs/rhs - (tau+1)/(tau-1)| = " + abs(ratio - expected).to_string(6));
    flags.push_back("variant with (tau-1) in place of (tau+1): abs_error = " +
                    abs(sides.lhs - sides.rhs_tau_minus_1).to_string(6));
  }
  return make_report(label_for("theorem_around1", t), sides.lhs, sides.rhs, ctx,
                     std::move(sides.branch_flags));
}

}  // namespace legpi
