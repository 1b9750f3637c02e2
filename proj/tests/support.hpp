// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

// Test-only helpers: a seeded generator, frozen reference values and small
// oracles that share no code with the library routines they check.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "legpi/numerics.hpp"

namespace legpi::testing {

// SplitMix64; fixed seeds keep every property test reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  long integer(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Values produced with mpmath at 60 digits.
namespace frozen {
inline constexpr const char* kAgmOneHalf =
    "0.728395515523453434593216191632540987486931971610652795397086";
inline constexpr const char* kFHalf = "1.18034059901609622604533794055848858723371663488144729951586";
inline constexpr const char* kFMinusOne =
    "0.834626841674073186281429732799046808993993013490347002449827";
inline constexpr const char* kF2MinusOne =
    "0.453246959923166592250266742317238912347678394816310544841292";
inline constexpr const char* kEtaI = "0.768225422326056659002594179576180644517866914464805014676703";
inline constexpr const char* kLambda2i =
    "0.0294372515228594143797353094836230571639374954766231218798433";
// 2^{2/3}/27
inline constexpr const char* kClosedFormRatio =
    "0.0587926315543777583241372458989743800144997528851797411040106";
inline constexpr const char* kPi100 =
    "3.141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825"
    "342117067";  // 100 significant digits, truncated
}  // namespace frozen

inline BigReal frozen_value(const char* text, const PrecisionCtx& ctx) { return ctx.real(text); }

// |a - b| < 10^-digits
inline bool close(const BigComplex& a, const BigComplex& b, long digits, const PrecisionCtx& ctx) {
  return abs(a - b) < ctx.pow10(-digits);
}
inline bool close(const BigReal& a, const BigReal& b, long digits, const PrecisionCtx& ctx) {
  return abs(a - b) < ctx.pow10(-digits);
}

// eta(tau) = e^{pi i tau/12} prod (1 - q^n), summed as a product rather than
// the pentagonal series.
inline BigComplex eta_product(const BigComplex& tau, const PrecisionCtx& ctx) {
  const BigComplex two_pi_i(ctx.real(0), ldexp(pi_reference(ctx), 1));
  const BigComplex q = exp(two_pi_i * tau);
  BigComplex prod = ctx.complex(1);
  BigComplex qn = q;
  const BigReal eps = ctx.pow10(-ctx.working_digits() - 5);
  for (int n = 1; n < 100000 && abs(qn) > eps; ++n) {
    prod *= 1 - qn;
    qn *= q;
  }
  return exp(two_pi_i * tau / 24) * prod;
}

// 2F1(1/2,1/2;1;-1) by the alternating series, with repeated averaging of
// consecutive partial sums to accelerate it. Long double only.
inline long double legendre_F_minus_one_direct() {
  constexpr int kTerms = 4000;
  constexpr int kLevels = 40;
  std::vector<long double> partial(kTerms);
  long double c = 1.0L, sum = 0.0L;
  for (int n = 0; n < kTerms; ++n) {
    sum += (n % 2 == 0 ? c : -c);
    partial[n] = sum;
    const long double r = (n + 0.5L) / (n + 1.0L);
    c *= r * r;
  }
  int len = kTerms;
  for (int level = 0; level < kLevels; ++level, --len)
    for (int k = 0; k + 1 < len; ++k) partial[k] = 0.5L * (partial[k] + partial[k + 1]);
  return partial[len - 1];
}

// 16x - 128x^2 + 704x^3 with x = e^{pi i tau}.
inline BigComplex lambda_prefix(const BigComplex& tau, const PrecisionCtx& ctx) {
  const BigComplex x = exp(BigComplex(ctx.real(0), pi_reference(ctx)) * tau);
  return x * 16 - x * x * 128 + x * x * x * 704;
}

}  // namespace legpi::testing
