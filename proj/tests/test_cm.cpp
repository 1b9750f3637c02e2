// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include <array>
#include <string>

#include "doctest.h"
#include "legpi/cm.hpp"
#include "legpi/error.hpp"
#include "legpi/hypergeometric.hpp"
#include "legpi/legendre.hpp"
#include "support.hpp"

using namespace legpi;
using legpi::testing::close;

namespace {

BigComplex real_point(const BigReal& x, const PrecisionCtx& ctx) {
  return BigComplex(x, ctx.real(0));
}

BigComplex parsed(const std::string& s, const PrecisionCtx& ctx) { return ctx.complex(s); }

}  // namespace

TEST_CASE("CM forms") {
  CHECK_THROWS_AS(CMQuadratic::make(0, 0, 1), Error);
  CHECK_THROWS_AS(CMQuadratic::make(-1, 0, -1), Error);
  CHECK_THROWS_AS(CMQuadratic::make(2, 0, 2), Error);
  CHECK_THROWS_AS(CMQuadratic::make(1, 4, 1), Error);
  CHECK_THROWS_AS(CMQuadratic::make(1, 2, 1), Error);
  const CMQuadratic q = CMQuadratic::make(1, 0, 4);
  CHECK(q.d() == 16);
  CHECK(q.to_string() == "1,0,4");
  const CMQuadratic t = CMQuadratic::make(1, 0, 1).translated();
  CHECK(t.a() == 1);
  CHECK(t.b() == -2);
  CHECK(t.c() == 2);
}

TEST_CASE("cm_tau") {
  const auto ctx = PrecisionCtx::make(40);
  CHECK(close(cm_tau(CMQuadratic::make(1, 0, 1), ctx).tau(), ctx.complex(0, 1), 45, ctx));
  CHECK(close(cm_tau(CMQuadratic::make(1, -2, 2), ctx).tau(), ctx.complex(1, 1), 45, ctx));
  const TauPoint half = cm_tau(CMQuadratic::make(2, -2, 1), ctx);
  CHECK(close(half.tau(), BigComplex(ctx.rational(1, 2), ctx.rational(1, 2)), 45, ctx));
  CHECK(close(lambda_tau_reduced(half, ctx), ctx.complex(2), 42, ctx));
  // a tau^2 + b tau + c = 0 for a random admissible form
  const CMQuadratic q = CMQuadratic::make(3, 1, 5);
  const BigComplex tau = cm_tau(q, ctx).tau();
  CHECK(abs(tau * tau * 3 + tau + 5) < ctx.pow10(-45));
}

TEST_CASE("combined s2 term") {
  const auto ctx = PrecisionCtx::make(50);
  for (auto abc : {std::array<long, 3>{1, 0, 1}, std::array<long, 3>{1, -2, 2}}) {
    const TauPoint t = cm_tau(CMQuadratic::make(abc[0], abc[1], abc[2]), ctx);
    const BigComplex f = legendre_F(snap_to_real(lambda_tau_reduced(t, ctx), ctx), ctx);
    CHECK(abs(combined_s2_term(t, f, ctx)) < ctx.pow10(-55));
  }
  SUBCASE("agrees with the raw form at 2i") {
    const auto cross = combined_term_cross_check(CMQuadratic::make(1, 0, 4), ctx);
    REQUIRE(cross.has_value());
    CHECK(cross->pass);
    CHECK(parsed(cross->lhs, ctx).re().sign() != 0);
  }
  SUBCASE("raw form undefined at i") {
    CHECK_FALSE(combined_term_cross_check(CMQuadratic::make(1, 0, 1), ctx).has_value());
  }
}

TEST_CASE("quasi-period relation at the CM triples") {
  const auto ctx = PrecisionCtx::make(60);
  for (auto abc : {std::array<long, 3>{1, 0, 1}, std::array<long, 3>{1, -2, 2},
                   std::array<long, 3>{1, 0, 4}}) {
    const FormulaReport r = quasiperiod_relation_check(CMQuadratic::make(abc[0], abc[1], abc[2]), ctx);
    CHECK_MESSAGE(r.pass, r.label << " abs_error " << r.abs_error);
    CHECK(r.digits_requested == 60);
  }
}

TEST_CASE("general formula at the CM triples") {
  const auto ctx = PrecisionCtx::make(60);
  const BigReal pi = pi_reference(ctx);
  const FormulaReport r1 = theorem_general_check(CMQuadratic::make(1, 0, 1), ctx);
  const FormulaReport r2 = theorem_general_check(CMQuadratic::make(1, -2, 2), ctx);
  const FormulaReport r4 = theorem_general_check(CMQuadratic::make(1, 0, 4), ctx);
  CHECK(r1.pass);
  CHECK(r2.pass);
  CHECK(r4.pass);
  // at tau = i it reduces to (1/8) F(1/2) F2(1/2) = 1/pi
  const BigComplex half = real_point(ctx.rational(1, 2), ctx);
  const BigComplex reduced = legendre_F(half, ctx) * legendre_F2(half, ctx) / 8;
  CHECK(close(parsed(r1.lhs, ctx), reduced, 55, ctx));
  // at tau = 1+i to F(-1)^2 - F(-1) F2(-1)
  const BigComplex m1 = ctx.complex(-1);
  const BigComplex f = legendre_F(m1, ctx);
  CHECK(close(parsed(r2.lhs, ctx), f * f - f * legendre_F2(m1, ctx), 55, ctx));
  // at 2i the right side is 2/(4 pi) = 1/(2 pi)
  CHECK(close(parsed(r4.rhs, ctx), real_point(1 / (2 * pi), ctx), 55, ctx));

  SUBCASE("translated form gives the same value after lambda -> lambda/(lambda-1)") {
    const CMQuadratic q = CMQuadratic::make(1, 0, 1);
    const BigComplex l = lambda_tau_reduced(cm_tau(q, ctx), ctx);
    const BigComplex lt = lambda_tau_reduced(cm_tau(q.translated(), ctx), ctx);
    CHECK(close(lt, l / (l - 1), 55, ctx));
    const FormulaReport a = theorem_general_check(q, ctx);
    const FormulaReport b = theorem_general_check(q.translated(), ctx);
    CHECK(close(parsed(a.lhs, ctx), parsed(b.lhs, ctx), 55, ctx));
  }
  SUBCASE("consistent with the quasi-period relation divided by Im tau") {
    for (auto abc : {std::array<long, 3>{1, 0, 1}, std::array<long, 3>{1, -2, 2},
                     std::array<long, 3>{1, 0, 4}}) {
      const CMQuadratic q = CMQuadratic::make(abc[0], abc[1], abc[2]);
      const FormulaReport g = theorem_general_check(q, ctx);
      const FormulaReport p = quasiperiod_relation_check(q, ctx);
      const BigComplex g_ratio = parsed(g.lhs, ctx) / parsed(g.rhs, ctx);
      const BigComplex p_ratio = parsed(p.lhs, ctx) / parsed(p.rhs, ctx);
      CHECK(close(g_ratio, p_ratio, 55, ctx));
    }
  }
}

TEST_CASE("1/pi identities") {
  for (long digits : {10L, 100L}) {
    const auto ctx = PrecisionCtx::make(digits);
    const FormulaReport a = identity1_check(ctx);
    const FormulaReport b = identity2_check(ctx);
    CHECK(a.pass);
    CHECK(b.pass);
    CHECK(ctx.real(a.abs_error) < ctx.pow10(-(digits - 5)));
    CHECK(ctx.real(b.abs_error) < ctx.pow10(-(digits - 5)));
  }
}

TEST_CASE("pi engine") {
  CHECK(pi_from_identity(1, 10) == "3.141592653");
  CHECK(pi_from_identity(2, 10) == "3.141592653");
  CHECK(pi_reference_digits(10) == "3.141592653");
  CHECK(pi_from_identity(1, 100) == testing::frozen::kPi100);
  CHECK(pi_from_identity(1, 1) == "3");
  for (long d : {10L, 100L, 1000L}) {
    const std::string ref = pi_reference_digits(d);
    CHECK(ref.size() == static_cast<std::size_t>(d + 1));
    CHECK(pi_from_identity(1, d) == ref);
    CHECK(pi_from_identity(2, d) == ref);
  }
  CHECK_THROWS_AS(pi_from_identity(3, 10), Error);
  CHECK_THROWS_AS(pi_from_identity(1, 0), Error);
}
