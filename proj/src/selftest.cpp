// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include "legpi/selftest.hpp"

#include <array>
#include <random>
#include <string>
#include <utility>

#include "legpi/cm.hpp"
#include "legpi/hypergeometric.hpp"
#include "legpi/legendre.hpp"
#include "legpi/modular.hpp"

namespace legpi {
namespace {

constexpr std::array<std::array<long, 3>, 3> kCmTriples = {{{1, 0, 1}, {1, -2, 2}, {1, 0, 4}}};

struct Pair {
  BigComplex lhs;
  BigComplex rhs;
};

// Keeps the pair with the largest |lhs - rhs|.
FormulaReport worst_of(std::string label, const std::vector<Pair>& pairs, long digits,
                       const PrecisionCtx& ctx, std::vector<std::string> flags = {}) {
  std::size_t worst = 0;
  BigReal worst_err = abs(pairs[0].lhs - pairs[0].rhs);
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    BigReal err = abs(pairs[k].lhs - pairs[k].rhs);
    if (err > worst_err) {
      worst_err = std::move(err);
      worst = k;
    }
  }
  flags.push_back("max over " + std::to_string(pairs.size()) + " samples, worst index " +
                  std::to_string(worst));
  return make_report(std::move(label), pairs[worst].lhs, pairs[worst].rhs, digits, ctx,
                     std::move(flags));
}

BigComplex imag_tau(long num, long den, const PrecisionCtx& ctx) {
  return BigComplex(ctx.real(0), ctx.rational(num, den));
}

FormulaReport exact_coeff_report(const PrecisionCtx& ctx) {
  const std::vector<std::int64_t> got = lambda_q_coeffs(3);
  const std::vector<std::int64_t> want = {16, -128, 704};
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
    return s + "]";
  };
  FormulaReport r;
  r.label = "lambda_q_coeffs n=3";
  r.lhs = join(got);
  r.rhs = join(want);
  r.abs_error = got == want ? "0" : "nonzero";
  r.digits_requested = ctx.target_digits();
  r.pass = got == want;
  return r;
}

std::vector<FormulaReport> cm_lambda_values(const PrecisionCtx& ctx) {
  std::vector<FormulaReport> out;
  const std::array<const char*, 3> forms = {"1,0,1", "1,-2,2", "2,-2,1"};
  const std::array<BigComplex, 3> taus = {ctx.complex(0, 1), ctx.complex(1, 1),
                                          BigComplex(ctx.rational(1, 2), ctx.rational(1, 2))};
  const std::array<BigComplex, 3> expected = {BigComplex(ctx.rational(1, 2), ctx.real(0)),
                                              ctx.complex(-1), ctx.complex(2)};
  for (std::size_t k = 0; k < 3; ++k) {
    const TauPoint t = TauPoint::make(taus[k], ctx);
    out.push_back(make_report(std::string("cm_lambda abc=") + forms[k],
                              lambda_tau_reduced(t, ctx), expected[k], ctx));
  }
  return out;
}

std::vector<FormulaReport> functional_equations(const PrecisionCtx& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re_dist(-0.5, 0.5);
  std::uniform_real_distribution<double> im_dist(0.6, 3.0);
  const BigReal pi = pi_reference(ctx);
  // e^{i pi/12}
  const BigComplex twelfth = exp(i_times(BigComplex(pi / 12, ctx.real(0))));

  std::vector<Pair> eta_shift, eta_inv, lambda_shift, lambda_inv;
  for (int k = 0; k < 10; ++k) {
    const BigComplex tau(BigReal::from_double(re_dist(rng), ctx.bits()),
                         BigReal::from_double(im_dist(rng), ctx.bits()));
    const TauPoint t = TauPoint::make(tau, ctx);
    const TauPoint t1 = TauPoint::make(tau + 1, ctx);
    const TauPoint ts = TauPoint::make(-inverse(tau), ctx);
    const BigComplex e = eta(t, ctx);
    eta_shift.push_back({eta(t1, ctx), twelfth * e});
    eta_inv.push_back({eta(ts, ctx), e * sqrt(-i_times(tau))});
    const BigComplex l = lambda_tau(t, ctx);
    lambda_shift.push_back({lambda_tau(t1, ctx), l / (l - 1)});
    lambda_inv.push_back({lambda_theta_oracle(ts, ctx), 1 - l});
  }
  const std::string tag = " seed=" + std::to_string(seed);
  const long d = ctx.target_digits();
  return {worst_of("eta(tau+1) = e^{i pi/12} eta(tau)" + tag, eta_shift, d, ctx),
          worst_of("eta(-1/tau) = sqrt(-i tau) eta(tau)" + tag, eta_inv, d, ctx),
          worst_of("lambda(tau+1) = lambda/(lambda-1)" + tag, lambda_shift, d, ctx),
          worst_of("lambda(-1/tau) = 1 - lambda" + tag, lambda_inv, d, ctx)};
}

FormulaReport agm_property(const PrecisionCtx& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> dist(0.0, 0.9);
  std::vector<Pair> pairs;
  for (int k = 0; k < 20; ++k) {
    double v = dist(rng);
    if (v == 0.0) v = 0.5;
    const BigReal l = BigReal::from_double(v, ctx.bits());
    const BigComplex z(l, ctx.real(0));
    // Above 1/2 the plain series still converges; the strict region policy of
    // hyp2f1 applies to callers, not to this oracle comparison.
    BigComplex f = v <= 0.5 ? legendre_F(z, ctx) : hyp2f1_series(legendre_params(), z, ctx).value;
    pairs.push_back({std::move(f), BigComplex(hyp_via_agm(l, ctx), ctx.real(0))});
  }
  return worst_of("F(lambda) = 1/agm(1, sqrt(1-lambda)) seed=" + std::to_string(seed), pairs,
                  ctx.target_digits(), ctx);
}

std::vector<FormulaReport> residual_grid(const PrecisionCtx& ctx) {
  // Finite-difference limited: certified to about a third of the working digits.
  const long digits = ctx.working_digits() / 3 + 5;
  std::vector<Pair> pf, omega, h;
  const BigComplex zero = ctx.complex(0);
  for (long k = 1; k <= 10; ++k) {
    const BigReal l = ctx.rational(k, 20);
    pf.push_back({BigComplex(picard_fuchs_residual(l, ctx), ctx.real(0)), zero});
    const BrunsResiduals b = bruns_residuals(l, ctx);
    omega.push_back({BigComplex(b.omega_relation, ctx.real(0)), zero});
    h.push_back({BigComplex(b.h_relation, ctx.real(0)), zero});
  }
  return {worst_of("picard_fuchs residual lambda=0.05..0.5", pf, digits, ctx),
          worst_of("bruns dOmega1 residual lambda=0.05..0.5", omega, digits, ctx),
          worst_of("bruns dH1 residual lambda=0.05..0.5", h, digits, ctx)};
}

std::vector<FormulaReport> period_theorems(const PrecisionCtx& ctx) {
  std::vector<FormulaReport> out;
  for (long s : {2L, 3L}) {
    const TauPoint t = TauPoint::make(imag_tau(s, 1, ctx), ctx);
    const LegendreCurve curve = weierstrass_from_lambda(snap_to_real(lambda_tau(t, ctx), ctx));
    out.push_back(check_theorem_period(t, curve, ctx));
  }
  for (long s : {2L, 3L}) {
    out.push_back(check_theorem_transform(TauPoint::make(imag_tau(1, s, ctx), ctx), ctx));
  }
  out.push_back(around1_discrepancy(BigComplex(ctx.real(1), ctx.rational(1, 2)), ctx));
  return out;
}

}  // namespace

std::vector<FormulaReport> run_verify_all(const PrecisionCtx& ctx) {
  std::vector<FormulaReport> out = {identity1_check(ctx), identity2_check(ctx)};
  for (const auto& abc : kCmTriples) {
    const CMQuadratic q = CMQuadratic::make(abc[0], abc[1], abc[2]);
    out.push_back(quasiperiod_relation_check(q, ctx));
    out.push_back(theorem_general_check(q, ctx));
  }
  return out;
}

std::vector<FormulaReport> run_selftest(const PrecisionCtx& ctx, std::uint64_t seed) {
  std::vector<FormulaReport> out = run_verify_all(ctx);
  auto append = [&out](std::vector<FormulaReport> more) {
    for (FormulaReport& r : more) out.push_back(std::move(r));
  };
  out.push_back(exact_coeff_report(ctx));
  append(cm_lambda_values(ctx));

  const TauPoint i = TauPoint::make(ctx.complex(0, 1), ctx);
  out.push_back(make_report("E2(i) = 3/pi", eisenstein(2, i, ctx),
                            BigComplex(3 / pi_reference(ctx), ctx.real(0)), ctx));

  append(functional_equations(ctx, seed));
  out.push_back(agm_property(ctx, seed));
  append(residual_grid(ctx));
  append(period_theorems(ctx));
  append(homothety_consistency(ctx));
  return out;
}

std::vector<FormulaReport> homothety_consistency(const PrecisionCtx& ctx) {
  const HomothetyReport at2 = homothety_mu(TauPoint::make(imag_tau(2, 1, ctx), ctx), ctx);
  const HomothetyReport at3 = homothety_mu(TauPoint::make(imag_tau(3, 1, ctx), ctx), ctx);
  const std::array<const char*, 3> names = {"sqrt_g3_g2_form", "j_form", "closed_form"};
  std::vector<FormulaReport> out;
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<std::string> flags = at2.branch_flags;
    flags.insert(flags.end(), at3.branch_flags.begin(), at3.branch_flags.end());
    flags.push_back("measured mu / (pi F(lambda)) = " + at2.ratios[k].to_string(20));
    out.push_back(make_report(std::string("homothety ") + names[k] + " ratio tau=2i vs 3i",
                              at2.ratios[k], at3.ratios[k], ctx, std::move(flags)));
  }
  return out;
}

FormulaReport around1_discrepancy(const BigComplex& tau, const PrecisionCtx& ctx) {
  const TauPoint t = TauPoint::make(tau, ctx);
  Around1Sides sides = evaluate_theorem_around1(t, ctx);
  std::vector<std::string> flags = std::move(sides.branch_flags);
  flags.push_back("as printed: |lhs - rhs| = " + abs(sides.lhs - sides.rhs).to_string(6));
  flags.push_back("with (tau-1) in place of (tau+1): |lhs - rhs| = " +
                  abs(sides.lhs - sides.rhs_tau_minus_1).to_string(6));
  return make_report("theorem_around1 lhs/rhs = (tau+1)/(tau-1) tau=" + tau.to_string(8),
                     sides.lhs / sides.rhs, (tau + 1) / (tau - 1), ctx, std::move(flags));
}

}  // namespace legpi
