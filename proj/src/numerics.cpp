// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include "legpi/numerics.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <memory>

namespace legpi {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kRegion: return "outside evaluation region";
    case ErrorCode::kSingular: return "singular point";
    case ErrorCode::kIndeterminate: return "indeterminate form";
    case ErrorCode::kNonTermination: return "iteration cap exceeded";
  }
  return "unknown error";
}

// ---------------------------------------------------------------------------
// BigReal

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal BigReal::from_double(double value, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(std::string_view text, mpfr_prec_t bits) {
  const std::string s(text);
  if (s.empty() || std::isspace(static_cast<unsigned char>(s.front())))
    throw Error(ErrorCode::kParse, "cannot parse decimal '" + s + "'");
  BigReal r(bits);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end != s.c_str() + s.size() || !mpfr_number_p(r.value_))
    throw Error(ErrorCode::kParse, "cannot parse decimal '" + s + "'");
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, value_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

std::string BigReal::to_string(int digits, Rounding mode) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  mpfr_exp_t exponent = 0;
  const mpfr_rnd_t rnd = mode == Rounding::kTruncate ? MPFR_RNDZ : MPFR_RNDN;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(digits), value_, rnd),
      [](char* p) { mpfr_free_str(p); });
  std::string mantissa(raw.get());
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.<mantissa> * 10^exponent
  const long n = static_cast<long>(mantissa.size());
  std::string out;
  if (exponent > 0 && exponent <= n) {
    out = mantissa.substr(0, exponent);
    if (exponent < n) out += "." + mantissa.substr(exponent);
  } else if (exponent <= 0 && exponent > -5) {
    out = "0." + std::string(static_cast<size_t>(-exponent), '0') + mantissa;
  } else {
    out = mantissa.substr(0, 1);
    if (n > 1) out += "." + mantissa.substr(1);
    out += "e" + std::to_string(exponent - 1);
  }
  return sign + out;
}

BigReal BigReal::operator-() const {
  BigReal r(bits());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

namespace {

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(a.bits(), b.bits());
}

template <typename Fn>
BigReal unary(const BigReal& x, Fn fn) {
  BigReal r(x.bits());
  fn(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

template <typename Fn>
BigReal binary(const BigReal& a, const BigReal& b, Fn fn) {
  BigReal r(wider(a, b));
  fn(r.get_mutable(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

std::partial_ordering from_cmp(int c) {
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul); }
BigReal operator/(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_div); }

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.bits());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.bits());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.bits());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.bits());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.bits());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.bits());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp(a.value_, b.value_));
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp_si(a.value_, b));
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal atan2(const BigReal& y, const BigReal& x) { return binary(y, x, mpfr_atan2); }
BigReal pow(const BigReal& x, const BigReal& y) { return binary(x, y, mpfr_pow); }

BigReal pow(const BigReal& x, long n) {
  BigReal r(x.bits());
  mpfr_pow_si(r.get_mutable(), x.get(), n, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x.bits());
  mpfr_mul_2si(r.get_mutable(), x.get(), e, MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// BigComplex

BigComplex BigComplex::parse(std::string_view text, mpfr_prec_t bits) {
  const std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty complex literal");
  if (s.back() != 'i') return BigComplex(BigReal::parse(s, bits), BigReal(bits));

  const std::string body = s.substr(0, s.size() - 1);
  // The split point is the last sign that is not leading and not part of an
  // exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    // pure imaginary: "2i", "-i", "i"
    std::string im = body;
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return BigComplex(BigReal(bits), BigReal::parse(im, bits));
  }
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  if (im.front() == '+') im.erase(0, 1);
  return BigComplex(BigReal::parse(body.substr(0, split), bits), BigReal::parse(im, bits));
}

double BigComplex::log10_abs() const {
  return std::max(re_.log10_abs(), im_.log10_abs());
}

std::string BigComplex::to_string(int digits, Rounding mode) const {
  if (im_.is_zero()) return re_.to_string(digits, mode);
  std::string im = im_.to_string(digits, mode);
  if (im.front() != '-') im = "+" + im;
  return re_.to_string(digits, mode) + im + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal re = re_ * rhs.re_ - im_ * rhs.im_;
  BigReal im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kSingular, "complex division by zero");
  const BigReal den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  BigReal re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
  BigReal im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(long rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

BigReal abs(const BigComplex& z) {
  BigReal r(z.bits());
  mpfr_hypot(r.get_mutable(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

BigReal arg(const BigComplex& z) {
  if (z.im().is_zero()) {
    BigReal r(z.bits());
    mpfr_atan2(r.get_mutable(), BigReal(z.bits()).get(), z.re().get(), MPFR_RNDN);
    return r;
  }
  return atan2(z.im(), z.re());
}

BigComplex conj(const BigComplex& z) { return {z.re(), -z.im()}; }

BigComplex exp(const BigComplex& z) {
  const BigReal mag = exp(z.re());
  BigReal s(z.bits()), c(z.bits());
  mpfr_sin_cos(s.get_mutable(), c.get_mutable(), z.im().get(), MPFR_RNDN);
  return {mag * c, mag * s};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw Error(ErrorCode::kSingular, "log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return BigComplex(z.bits());
  const BigReal t = sqrt(ldexp(abs(z.re()) + abs(z), -1));
  if (z.re().sign() >= 0) return {t, z.im() / ldexp(t, 1)};
  BigReal im = z.im().sign() < 0 ? -t : t;
  return {abs(z.im()) / ldexp(t, 1), std::move(im)};
}

BigComplex pow(const BigComplex& z, const BigReal& w) {
  if (z.is_zero()) {
    if (w.sign() > 0) return BigComplex(z.bits());
    throw Error(ErrorCode::kSingular, "zero to a non-positive power");
  }
  return exp(log(z) * w);
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return inverse(pow(z, -n));
  BigComplex result(BigReal(1, z.bits()), BigReal(z.bits()));
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

BigComplex inverse(const BigComplex& z) {
  return BigComplex(BigReal(1, z.bits()), BigReal(z.bits())) / z;
}

BigComplex i_times(const BigComplex& z) { return {-z.im(), z.re()}; }

// ---------------------------------------------------------------------------
// PrecisionCtx and oracles

PrecisionCtx PrecisionCtx::make(long target_digits) {
  if (target_digits < 1)
    throw Error(ErrorCode::kInvalidArgument, "target_digits must be >= 1");
  const long log_term =
      static_cast<long>(std::ceil(std::log10(static_cast<double>(target_digits))));
  return PrecisionCtx(target_digits, std::max(10L, log_term + 10));
}

mpfr_prec_t PrecisionCtx::bits() const {
  return static_cast<mpfr_prec_t>(
             std::ceil(static_cast<double>(working_digits()) * std::log2(10.0))) +
         8;
}

BigReal PrecisionCtx::rational(long num, long den) const {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return real(num) / den;
}

BigComplex PrecisionCtx::complex(long re, long im) const {
  return {real(re), real(im)};
}

BigReal PrecisionCtx::pow10(long exponent) const {
  BigReal r(bits());
  mpfr_ui_pow_ui(r.get_mutable(), 10, static_cast<unsigned long>(std::labs(exponent)),
                 MPFR_RNDN);
  if (exponent < 0) return 1 / r;
  return r;
}

BigComplex snap_to_real(const BigComplex& z, const PrecisionCtx& ctx) {
  const BigReal scale = max(abs(z.re()), ctx.real(1));
  if (abs(z.im()) <= ctx.pow10(-ctx.working_digits() / 2) * scale)
    return BigComplex(z.re(), BigReal(z.bits()));
  return z;
}

BigReal agm(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw Error(ErrorCode::kInvalidArgument, "agm requires positive arguments");
  BigReal x = a, y = b;
  x = BigReal(ctx.bits()) + x;
  y = BigReal(ctx.bits()) + y;
  const BigReal tol = ctx.epsilon();
  const int cap = static_cast<int>(std::log2(static_cast<double>(ctx.working_digits()) + 1)) +
                  64;
  for (int iter = 0; iter < cap; ++iter) {
    if (abs(x - y) <= tol * x) return ldexp(x + y, -1);
    BigReal next = ldexp(x + y, -1);
    y = sqrt(x * y);
    x = std::move(next);
  }
  throw Error(ErrorCode::kNonTermination, "agm did not converge");
}

BigReal pi_reference(const PrecisionCtx& ctx) {
  // Gauss-Legendre: a0 = 1, b0 = 1/sqrt 2, t0 = 1/4, p0 = 1.
  BigReal a = ctx.real(1);
  BigReal b = 1 / sqrt(ctx.real(2));
  BigReal t = ctx.rational(1, 4);
  long p = 1;
  const BigReal tol = ctx.epsilon();
  for (int iter = 0; iter < 64; ++iter) {
    if (abs(a - b) < tol) {
      const BigReal s = a + b;
      return s * s / ldexp(t, 2);
    }
    BigReal next = ldexp(a + b, -1);
    b = sqrt(a * b);
    const BigReal d = a - next;
    t -= d * d * p;
    a = std::move(next);
    p *= 2;
  }
  throw Error(ErrorCode::kNonTermination, "Gauss-Legendre iteration did not converge");
}

}  // namespace legpi
