// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include "legpi/modular.hpp"

#include <algorithm>
#include <cmath>

namespace legpi {
namespace {

// Threshold test with a 10^-(working/2) rounding slack.
bool imag_at_least(const BigReal& im, long num, long den, const PrecisionCtx& ctx) {
  return im >= ctx.rational(num, den) - ctx.pow10(-ctx.working_digits() / 2);
}

void require_series_region(const TauPoint& t, const PrecisionCtx& ctx, const char* what) {
  if (!imag_at_least(t.imag(), 1, 4, ctx))
    throw Error(ErrorCode::kRegion, std::string(what) + " requires Im(tau) >= 1/4");
}

double series_target(const PrecisionCtx& ctx) {
  return -static_cast<double>(ctx.working_digits() + 5);
}

// e^{pi i tau / 12}
BigComplex eta_prefactor(const TauPoint& t, const PrecisionCtx& ctx) {
  const BigReal pi = pi_reference(ctx);
  return exp(i_times(t.tau()) * pi / 12);
}

using Series = std::vector<__int128>;

Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// prod_{k>=1} (1 - x^{step k})^power, truncated to `size` coefficients.
Series euler_product(std::size_t size, std::size_t step, int power) {
  Series s(size, 0);
  s[0] = 1;
  for (std::size_t k = 1; k * step < size; ++k) {
    for (int p = 0; p < power; ++p) {
      // multiply by (1 - x^{step k}) in place, highest index first
      for (std::size_t i = size; i-- > k * step;) s[i] -= s[i - k * step];
    }
  }
  return s;
}

Series reciprocal(const Series& a) {
  Series b(a.size(), 0);
  b[0] = 1;  // a[0] == 1 for every product used here
  for (std::size_t n = 1; n < a.size(); ++n) {
    __int128 acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b[n] = -acc;
  }
  return b;
}

}  // namespace

TauPoint TauPoint::make(const BigComplex& tau, const PrecisionCtx& ctx) {
  if (tau.im().sign() <= 0)
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in the upper half plane");
  const BigReal pi = pi_reference(ctx);
  const BigComplex pi_i_tau = i_times(tau) * pi;
  BigComplex x = exp(pi_i_tau);
  BigComplex q = exp(pi_i_tau * 2);
  return TauPoint(tau, std::move(q), std::move(x));
}

BigComplex TransformWord::apply(const BigComplex& tau) const {
  BigComplex t = tau;
  for (const TransformStep& step : steps_) {
    switch (step.letter) {
      case Letter::kT: t = t + step.power; break;
      case Letter::kTInv: t = t - step.power; break;
      case Letter::kS: t = -inverse(t); break;
    }
  }
  return t;
}

BigComplex TransformWord::apply_to_lambda(const BigComplex& lambda) const {
  BigComplex l = lambda;
  for (const TransformStep& step : steps_) {
    if (step.letter == Letter::kS) {
      l = 1 - l;
    } else if (step.power % 2 != 0) {
      // lambda is 2-periodic, so only odd translations act
      l = l / (l - 1);
    }
  }
  return l;
}

Reduction reduce_tau(const BigComplex& tau, const PrecisionCtx& ctx) {
  if (tau.im().sign() <= 0)
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in the upper half plane");
  std::vector<TransformStep> forward;  // moves taking the original to the reduced point
  BigComplex t = tau;
  for (int round = 0; round < 64; ++round) {
    const long m = t.re().to_long_round();
    if (m != 0) {
      t = t - m;
      forward.push_back({m > 0 ? Letter::kTInv : Letter::kT, std::labs(m)});
    }
    if (imag_at_least(t.im(), 1, 2, ctx)) {
      Reduction out{t, {}};
      for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
        TransformStep inv = *it;
        if (inv.letter == Letter::kT) inv.letter = Letter::kTInv;
        else if (inv.letter == Letter::kTInv) inv.letter = Letter::kT;
        out.word.push_back(inv);
      }
      return out;
    }
    t = -inverse(t);
    forward.push_back({Letter::kS, 1});
  }
  throw Error(ErrorCode::kNonTermination, "tau reduction exceeded 64 rounds");
}

BigComplex eta(const TauPoint& t, const PrecisionCtx& ctx) {
  require_series_region(t, ctx, "eta");
  // Pentagonal numbers: sum_n (-1)^n (q^{n(3n-1)/2} + q^{n(3n+1)/2}).
  const double log_q = t.q().log10_abs();
  const double slack = std::log10(2.0 / (1.0 - std::pow(10.0, log_q)));
  const double target = series_target(ctx);

  BigComplex sum(ctx.real(1), ctx.real(0));
  BigComplex pent = t.q();                  // q^{n(3n-1)/2}
  BigComplex qn = t.q();                    // q^n
  BigComplex step = pow(t.q(), 4);          // q^{3n+1}
  const BigComplex q3 = pow(t.q(), 3);
  for (long n = 1;; ++n) {
    BigComplex pair = pent + pent * qn;
    if (n % 2 != 0) sum -= pair;
    else sum += pair;
    const double next_exp = static_cast<double>((n + 1) * (3 * (n + 1) - 1) / 2);
    if (next_exp * log_q + slack < target) break;
    pent *= step;
    step *= q3;
    qn *= t.q();
  }
  return eta_prefactor(t, ctx) * sum;
}

BigComplex eisenstein(int k, const TauPoint& t, const PrecisionCtx& ctx) {
  long coefficient = 0;
  switch (k) {
    case 2: coefficient = -24; break;
    case 4: coefficient = 240; break;
    case 6: coefficient = -504; break;
    default: throw Error(ErrorCode::kInvalidArgument, "Eisenstein weight must be 2, 4 or 6");
  }
  require_series_region(t, ctx, "Eisenstein series");
  const double log_q = t.q().log10_abs();
  const double abs_q = std::pow(10.0, log_q);
  const double target = series_target(ctx) - std::log10(static_cast<double>(std::labs(coefficient)));

  // Lambert series sum n^{k-1} q^n/(1-q^n). Term n is bounded by
  // b_n = n^{k-1}|q|^n/(1-|q|); once b_{n+1}/b_n < 1 the tail after n is at
  // most b_{n+1}/(1 - rho).
  BigComplex sum(ctx.bits());
  BigComplex qn = t.q();
  for (long n = 1;; ++n) {
    BigComplex term = qn / (1 - qn);
    term *= pow(ctx.real(n), k - 1);
    sum += term;
    const double next = static_cast<double>(n + 1);
    const double rho = std::pow((next + 1) / next, k - 1) * abs_q;
    if (rho < 1.0) {
      const double log_b = (k - 1) * std::log10(next) + next * log_q - std::log10(1.0 - abs_q);
      if (log_b - std::log10(1.0 - rho) < target) break;
    }
    qn *= t.q();
  }
  return sum * coefficient + 1;
}

BigComplex g2_tau(const TauPoint& t, const PrecisionCtx& ctx) {
  const BigReal pi = pi_reference(ctx);
  return eisenstein(4, t, ctx) * (pow(pi, 4) * 4 / 3);
}

BigComplex g3_tau(const TauPoint& t, const PrecisionCtx& ctx) {
  const BigReal pi = pi_reference(ctx);
  return eisenstein(6, t, ctx) * (pow(pi, 6) * 8 / 27);
}

BigComplex delta_tau(const TauPoint& t, const PrecisionCtx& ctx) {
  const BigReal two_pi = ldexp(pi_reference(ctx), 1);
  return pow(eta(t, ctx), 24) * pow(two_pi, 12);
}

BigComplex delta_tau_eisenstein(const TauPoint& t, const PrecisionCtx& ctx) {
  const BigComplex g2 = g2_tau(t, ctx);
  const BigComplex g3 = g3_tau(t, ctx);
  return pow(g2, 3) - 27 * g3 * g3;
}

BigComplex lambda_tau(const TauPoint& t, const PrecisionCtx& ctx) {
  if (!imag_at_least(t.imag(), 1, 2, ctx))
    throw Error(ErrorCode::kRegion,
                "direct lambda(tau) requires Im(tau) >= 1/2; use lambda_tau_reduced");
  const TauPoint half = TauPoint::make(t.tau() / 2, ctx);
  const TauPoint twice = TauPoint::make(t.tau() * 2, ctx);
  const BigComplex num = pow(eta(half, ctx), 8) * pow(eta(twice, ctx), 16);
  return 16 * num / pow(eta(t, ctx), 24);
}

BigComplex lambda_tau_reduced(const TauPoint& t, const PrecisionCtx& ctx) {
  const Reduction r = reduce_tau(t.tau(), ctx);
  const BigComplex base = lambda_tau(TauPoint::make(r.reduced, ctx), ctx);
  return r.word.apply_to_lambda(base);
}

BigComplex lambda_theta_oracle(const TauPoint& t, const PrecisionCtx& ctx) {
  const double log_x = t.x().log10_abs();
  const double target = series_target(ctx);
  // theta3 = 1 + 2 sum x^{n^2}, theta2 = 2 x^{1/4} sum_{n>=0} x^{n(n+1)}
  BigComplex theta3(ctx.real(1), ctx.real(0));
  BigComplex theta2_sum(ctx.real(1), ctx.real(0));
  for (long n = 1; static_cast<double>(n * n) * log_x + 1 >= target; ++n) {
    if (n > 100000) throw Error(ErrorCode::kNonTermination, "theta series exceeded its term cap");
    theta3 += pow(t.x(), n * n) * 2;
    theta2_sum += pow(t.x(), n * (n + 1));
  }
  const BigComplex quarter = exp(i_times(t.tau()) * pi_reference(ctx) / 4);
  return pow(quarter * theta2_sum * 2 / theta3, 4);
}

std::vector<std::int64_t> lambda_x_series(int order) {
  if (order < 0 || order > 32)
    throw Error(ErrorCode::kInvalidArgument, "lambda series order must be in [0, 32]");
  const std::size_t size = static_cast<std::size_t>(order) + 1;
  // lambda = 16 x prod(1-x^n)^8 prod(1-x^{4n})^16 / prod(1-x^{2n})^24
  const Series body = multiply(multiply(euler_product(size, 1, 8), euler_product(size, 4, 16)),
                               reciprocal(euler_product(size, 2, 24)));
  std::vector<std::int64_t> out(size, 0);
  for (std::size_t i = 1; i < size; ++i) out[i] = static_cast<std::int64_t>(16 * body[i - 1]);
  return out;
}

std::vector<std::int64_t> lambda_q_coeffs(int n) {
  if (n < 0 || n > 32)
    throw Error(ErrorCode::kInvalidArgument, "lambda_q_coeffs supports n in [0, 32]");
  const std::vector<std::int64_t> series = lambda_x_series(n);
  return {series.begin() + 1, series.end()};
}

BigComplex s2_bracket(const TauPoint& t, const PrecisionCtx& ctx) {
  const BigReal pi = pi_reference(ctx);
  const BigComplex e2 = eisenstein(2, t, ctx);
  return e2 - BigComplex(3 / (pi * t.imag()), ctx.real(0));
}

BigComplex s2(const TauPoint& t, const PrecisionCtx& ctx) {
  const BigComplex e6 = eisenstein(6, t, ctx);
  if (abs(e6) <= ctx.pow10(-ctx.working_digits() / 2))
    throw Error(ErrorCode::kIndeterminate,
                "E6(tau) vanishes here; s2 is 0/0, use the combined form (cm::combined_s2_term)");
  return eisenstein(4, t, ctx) / e6 * s2_bracket(t, ctx);
}

BigComplex normalized_j(const BigComplex& lambda) {
  const BigComplex one_minus = 1 - lambda;
  if (lambda.is_zero() || one_minus.is_zero())
    throw Error(ErrorCode::kSingular, "J(lambda) is singular at lambda = 0, 1");
  const BigComplex quad = lambda * lambda - lambda + 1;
  const BigComplex den = lambda * lambda * one_minus * one_minus;
  return pow(quad, 3) * 4 / 27 / den;
}

}  // namespace legpi
