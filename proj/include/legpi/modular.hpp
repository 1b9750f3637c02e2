// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

// q-series for the Dedekind eta function, the Eisenstein series E2/E4/E6,
// the discriminant, the modular lambda function and s2, plus the reduction
// of tau into the region where those series are used directly.
//
// Direct evaluation needs Im(tau) >= 1/4 (|q| <= e^{-pi/2}); lambda needs
// Im(tau) >= 1/2 because of its eta(tau/2) factor. lambda_tau_reduced covers
// the rest of the upper half plane.

#pragma once

#include <cstdint>
#include <vector>

#include "legpi/numerics.hpp"

namespace legpi {

// A point of the upper half plane with q = e^{2 pi i tau} and x = e^{pi i tau}.
class TauPoint {
 public:
  // Throws Error(kInvalidArgument) unless Im(tau) > 0.
  static TauPoint make(const BigComplex& tau, const PrecisionCtx& ctx);

  const BigComplex& tau() const { return tau_; }
  const BigComplex& q() const { return q_; }
  const BigComplex& x() const { return x_; }
  const BigReal& imag() const { return tau_.im(); }

 private:
  TauPoint(BigComplex tau, BigComplex q, BigComplex x)
      : tau_(std::move(tau)), q_(std::move(q)), x_(std::move(x)) {}

  BigComplex tau_;
  BigComplex q_;
  BigComplex x_;
};

enum class Letter { kT, kTInv, kS };  // tau+1, tau-1, -1/tau

struct TransformStep {
  Letter letter;
  long power = 1;  // T and T^-1 are run-length encoded; S always has power 1
};

// A word in T, T^-1, S. apply() acts on tau; apply_to_lambda() acts on lambda
// through lambda(tau+1) = lambda/(lambda-1) and lambda(-1/tau) = 1 - lambda.
class TransformWord {
 public:
  const std::vector<TransformStep>& steps() const { return steps_; }
  void push_back(TransformStep step) { steps_.push_back(step); }
  std::size_t size() const { return steps_.size(); }

  // Steps are applied first to last.
  BigComplex apply(const BigComplex& tau) const;
  BigComplex apply_to_lambda(const BigComplex& lambda) const;

 private:
  std::vector<TransformStep> steps_;
};

struct Reduction {
  BigComplex reduced;  // Im >= 1/2, |Re| <= 1/2
  TransformWord word;  // word.apply(reduced) == original tau
};

// Greedy reduction: translate to |Re| <= 1/2, invert when Im < 1/2; at most
// 64 rounds.
Reduction reduce_tau(const BigComplex& tau, const PrecisionCtx& ctx);

BigComplex eta(const TauPoint& t, const PrecisionCtx& ctx);

// k in {2, 4, 6}
BigComplex eisenstein(int k, const TauPoint& t, const PrecisionCtx& ctx);

// g2(tau) = (4 pi^4/3) E4, g3(tau) = (8 pi^6/27) E6 for the lattice Z + Z tau.
BigComplex g2_tau(const TauPoint& t, const PrecisionCtx& ctx);
BigComplex g3_tau(const TauPoint& t, const PrecisionCtx& ctx);

// (2 pi)^12 eta^24
BigComplex delta_tau(const TauPoint& t, const PrecisionCtx& ctx);
// g2^3 - 27 g3^2, the Eisenstein cross-check of delta_tau.
BigComplex delta_tau_eisenstein(const TauPoint& t, const PrecisionCtx& ctx);

// 16 eta(tau/2)^8 eta(2tau)^16 / eta(tau)^24; Im(tau) >= 1/2.
BigComplex lambda_tau(const TauPoint& t, const PrecisionCtx& ctx);
BigComplex lambda_tau_reduced(const TauPoint& t, const PrecisionCtx& ctx);

// (theta2/theta3)^4 summed directly in x = e^{pi i tau}, for any Im(tau) > 0.
// Shares no code with the eta quotient; used only to cross-check it.
BigComplex lambda_theta_oracle(const TauPoint& t, const PrecisionCtx& ctx);

// Coefficients of x^1 .. x^n of lambda as a series in x = q^{1/2}; n <= 32.
std::vector<std::int64_t> lambda_q_coeffs(int n);
// Coefficients of x^0 .. x^order.
std::vector<std::int64_t> lambda_x_series(int order);

BigComplex s2_bracket(const TauPoint& t, const PrecisionCtx& ctx);
// (E4/E6)(E2 - 3/(pi Im tau)); Error(kIndeterminate) where |E6| is below
// 10^-(working/2).
BigComplex s2(const TauPoint& t, const PrecisionCtx& ctx);

// J = (4/27)(l^2 - l + 1)^3 / (l^2 (1-l)^2); lambda in {0, 1} is singular.
BigComplex normalized_j(const BigComplex& lambda);

}  // namespace legpi
