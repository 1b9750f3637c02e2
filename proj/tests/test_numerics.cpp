// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include <cmath>
#include <string>

#include "doctest.h"
#include "legpi/error.hpp"
#include "legpi/numerics.hpp"
#include "support.hpp"

using namespace legpi;
using legpi::testing::Rng;

TEST_CASE("precision context guard digits") {
  SUBCASE("50 digits") {
    const auto ctx = PrecisionCtx::make(50);
    CHECK(ctx.working_digits() >= 60);
    CHECK(ctx.guard_digits() >= 10);
  }
  SUBCASE("1000 digits") {
    const auto ctx = PrecisionCtx::make(1000);
    CHECK(ctx.working_digits() >= 1013);
  }
  SUBCASE("invariant over a range") {
    for (long d : {1L, 9L, 10L, 99L, 100L, 12345L, 1000000L}) {
      const auto ctx = PrecisionCtx::make(d);
      const long log_term = static_cast<long>(std::ceil(std::log10(static_cast<double>(d)))) + 10;
      CHECK(ctx.guard_digits() >= 10);
      CHECK(ctx.guard_digits() >= log_term);
      CHECK(ctx.working_digits() == d + ctx.guard_digits());
      // bits carry at least the working digits
      CHECK(static_cast<double>(ctx.bits()) >= ctx.working_digits() * std::log2(10.0));
    }
  }
  SUBCASE("zero and negative are rejected") {
    CHECK_THROWS_AS(PrecisionCtx::make(0), Error);
    CHECK_THROWS_AS(PrecisionCtx::make(-3), Error);
  }
}

TEST_CASE("decimal parse and print") {
  const auto ctx = PrecisionCtx::make(40);
  SUBCASE("plain forms") {
    CHECK(ctx.real("1.5") == ctx.rational(3, 2));
    CHECK(ctx.real("-2e3") == ctx.real(-2000));
    CHECK(ctx.real("+0.25e+1") == ctx.rational(5, 2));
    CHECK(ctx.real(7).to_string(10) == "7.000000000");
    CHECK(ctx.real(0).to_string(10) == "0");
    CHECK(ctx.rational(1, 4).to_string(10) == "0.2500000000");
    CHECK(ctx.real("1e-30").to_string(3) == "1.00e-30");
  }
  SUBCASE("truncation versus rounding") {
    const BigReal x = ctx.real("2.71828182845904523536");
    CHECK(x.to_string(5) == "2.7183");
    CHECK(x.to_string(5, Rounding::kTruncate) == "2.7182");
  }
  SUBCASE("complex forms") {
    const BigComplex z = ctx.complex("1.5-2i");
    CHECK(z.re() == ctx.rational(3, 2));
    CHECK(z.im() == ctx.real(-2));
    CHECK(ctx.complex("0+2i").im() == ctx.real(2));
    CHECK(ctx.complex("3i").im() == ctx.real(3));
    CHECK(ctx.complex("-i").im() == ctx.real(-1));
    CHECK(ctx.complex("-1e-3+4.5e2i").re() == ctx.rational(-1, 1000));
    CHECK(ctx.complex("-4").re() == ctx.real(-4));
    CHECK(ctx.complex("2-3i").to_string(5) == "2.0000-3.0000i");
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(ctx.real("abc"), Error);
    CHECK_THROWS_AS(ctx.real("1.5x"), Error);
    CHECK_THROWS_AS(ctx.real(""), Error);
    CHECK_THROWS_AS(ctx.complex("1+2j"), Error);
    CHECK_THROWS_AS(ctx.complex("1++2i"), Error);
  }
}

TEST_CASE("print then parse round trips at working precision") {
  const auto ctx = PrecisionCtx::make(50);
  Rng rng(11);
  const int w = static_cast<int>(ctx.working_digits());
  for (int k = 0; k < 50; ++k) {
    const BigReal x = BigReal::from_double(rng.uniform(-1, 1), ctx.bits()) *
                      ctx.pow10(rng.integer(-40, 40)) / ctx.real(3);
    const BigReal back = ctx.real(x.to_string(w + 2));
    CHECK(abs(back - x) <= abs(x) * ctx.pow10(-w));
    const BigComplex z(x, x * 7);
    const BigComplex zback = ctx.complex(z.to_string(w + 2));
    CHECK(abs(zback - z) <= abs(z) * ctx.pow10(-w));
  }
}

TEST_CASE("elementary functions") {
  const auto ctx = PrecisionCtx::make(50);
  const BigReal pi = pi_reference(ctx);
  const BigComplex i_pi(ctx.real(0), pi);
  CHECK(testing::close(exp(i_pi), ctx.complex(-1), 55, ctx));
  CHECK(testing::close(log(ctx.complex(-1)), i_pi, 55, ctx));
  CHECK(testing::close(sqrt(ctx.complex(-4)), ctx.complex(0, 2), 55, ctx));
  CHECK(testing::close(pow(ctx.complex(0, 1), 4), ctx.complex(1), 55, ctx));
  CHECK(testing::close(pow(ctx.complex(8), ctx.rational(1, 3)), ctx.complex(2), 55, ctx));
  CHECK(testing::close(inverse(ctx.complex(0, 2)), BigComplex(ctx.real(0), -ctx.rational(1, 2)),
                       55, ctx));
  // principal branch: arg in (-pi, pi]
  CHECK(testing::close(arg(ctx.complex(-1)), pi, 55, ctx));
  CHECK(sqrt(ctx.complex(-1, -1)).im().sign() < 0);
}

TEST_CASE("snap_to_real drops rounding noise only") {
  const auto ctx = PrecisionCtx::make(30);
  const BigComplex noisy(ctx.rational(1, 2), ctx.pow10(-35));
  CHECK(snap_to_real(noisy, ctx).im().is_zero());
  const BigComplex genuine(ctx.rational(1, 2), ctx.pow10(-5));
  CHECK_FALSE(snap_to_real(genuine, ctx).im().is_zero());
}

TEST_CASE("agm examples") {
  const auto ctx = PrecisionCtx::make(50);
  CHECK(testing::close(agm(ctx.real(1), ctx.rational(1, 2), ctx),
                       testing::frozen_value(testing::frozen::kAgmOneHalf, ctx), 58, ctx));
  const BigReal x = ctx.real("1.2345");
  CHECK(testing::close(agm(x, x, ctx), x, 58, ctx));
  CHECK(testing::close(agm(ctx.real(3), ctx.real(7), ctx), agm(ctx.real(7), ctx.real(3), ctx), 58,
                       ctx));
  CHECK_THROWS_AS(agm(ctx.real(0), ctx.real(1), ctx), Error);
  CHECK_THROWS_AS(agm(ctx.real(1), ctx.real(-2), ctx), Error);
}

TEST_CASE("agm properties: betweenness, symmetry and scaling") {
  const auto ctx = PrecisionCtx::make(50);
  Rng rng(2);
  for (int k = 0; k < 40; ++k) {
    const BigReal a = BigReal::from_double(rng.uniform(0.01, 100), ctx.bits());
    const BigReal b = BigReal::from_double(rng.uniform(0.01, 100), ctx.bits());
    const BigReal s = BigReal::from_double(rng.uniform(0.01, 100), ctx.bits());
    const BigReal m = agm(a, b, ctx);
    CHECK(m >= (a < b ? a : b));
    CHECK(m <= (a < b ? b : a));
    CHECK(abs(m - agm(b, a, ctx)) <= m * ctx.pow10(-ctx.working_digits() + 2));
    CHECK(abs(agm(a * s, b * s, ctx) - m * s) <= m * s * ctx.pow10(-ctx.working_digits() + 2));
  }
}

TEST_CASE("pi_reference") {
  SUBCASE("ten digits") {
    const auto ctx = PrecisionCtx::make(10);
    // rounded to ten significant digits
    CHECK(pi_reference(ctx).to_string(10) == "3.141592654");
  }
  SUBCASE("frozen 100 digits") {
    const auto ctx = PrecisionCtx::make(100);
    CHECK(pi_reference(ctx).to_string(100, Rounding::kTruncate) == testing::frozen::kPi100);
  }
  SUBCASE("precision monotonicity") {
    const std::string p50 = pi_reference(PrecisionCtx::make(50)).to_string(50, Rounding::kTruncate);
    const std::string p100 = pi_reference(PrecisionCtx::make(100)).to_string(50, Rounding::kTruncate);
    CHECK(p50 == p100);
  }
  SUBCASE("D and 2D agree on D-2 digits") {
    for (long d : {20L, 64L, 300L}) {
      const auto lo = pi_reference(PrecisionCtx::make(d)).to_string(static_cast<int>(d - 2),
                                                                    Rounding::kTruncate);
      const auto hi = pi_reference(PrecisionCtx::make(2 * d))
                          .to_string(static_cast<int>(d - 2), Rounding::kTruncate);
      CHECK(lo == hi);
    }
  }
  SUBCASE("cross-check against 4 atan(1)") {
    const auto ctx = PrecisionCtx::make(60);
    const BigReal quarter_turn = atan2(ctx.real(1), ctx.real(1)) * 4;
    CHECK(testing::close(pi_reference(ctx), quarter_turn, 65, ctx));
  }
}
