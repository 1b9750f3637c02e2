// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

// Arbitrary-precision scalars and the precision policy.
//
// BigReal owns an mpfr_t. Every value carries its own binary precision; a
// binary operation rounds (to nearest) to the larger precision of its
// operands, so values created from one PrecisionCtx stay at one working
// precision. All values are immutable from the caller's point of view and
// nothing here touches global state, so any function may run concurrently
// with any other.

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "legpi/error.hpp"

namespace legpi {

enum class Rounding { kNearest, kTruncate };

class BigReal {
 public:
  BigReal() : BigReal(mpfr_prec_t{64}) {}
  explicit BigReal(mpfr_prec_t bits);
  BigReal(long value, mpfr_prec_t bits);
  static BigReal from_double(double value, mpfr_prec_t bits);
  // Decimal literal: optional sign, digits, optional fraction, optional
  // exponent e[+-]n. Throws Error(kParse).
  static BigReal parse(std::string_view text, mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get_mutable() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long_round() const { return mpfr_get_si(value_, MPFR_RNDN); }
  // log10|x|; -infinity for zero. Used for series tail bookkeeping.
  double log10_abs() const;

  // `digits` significant decimal digits.
  std::string to_string(int digits, Rounding mode = Rounding::kNearest) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator/(long a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) {
    return mpfr_cmp_si(a.value_, b) == 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal max(const BigReal& a, const BigReal& b);
// x * 2^e
BigReal ldexp(const BigReal& x, long e);

class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
  explicit BigComplex(BigReal re) : re_(std::move(re)), im_(re_.bits()) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  // Accepts a real literal, `<re>+<im>i`, `<re>-<im>i`, or `<im>i`.
  static BigComplex parse(std::string_view text, mpfr_prec_t bits);

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  mpfr_prec_t bits() const { return std::max(re_.bits(), im_.bits()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  double log10_abs() const;

  std::string to_string(int digits, Rounding mode = Rounding::kNearest) const;

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator*=(long rhs);
  BigComplex& operator/=(long rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator*(const BigReal& a, BigComplex b) { return b *= a; }
  friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
  friend BigComplex operator*(long a, BigComplex b) { return b *= a; }
  friend BigComplex operator/(BigComplex a, long b) { return a /= b; }
  friend BigComplex operator+(BigComplex a, long b) {
    a.re_ = a.re_ + b;
    return a;
  }
  friend BigComplex operator-(BigComplex a, long b) {
    a.re_ = a.re_ - b;
    return a;
  }
  friend BigComplex operator-(long a, const BigComplex& b) {
    return {a - b.re_, -b.im_};
  }

 private:
  BigReal re_;
  BigReal im_;
};

BigReal abs(const BigComplex& z);
// Principal argument in (-pi, pi]; a signed zero imaginary part counts as +0.
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
BigComplex sqrt(const BigComplex& z);  // principal branch
BigComplex pow(const BigComplex& z, const BigReal& w);  // exp(w log z)
BigComplex pow(const BigComplex& z, long n);
BigComplex inverse(const BigComplex& z);
BigComplex i_times(const BigComplex& z);

// Target/working precision shared by every evaluation in one computation.
class PrecisionCtx {
 public:
  // Throws Error(kInvalidArgument) for target_digits < 1.
  static PrecisionCtx make(long target_digits);

  long target_digits() const { return target_digits_; }
  long guard_digits() const { return guard_digits_; }
  long working_digits() const { return target_digits_ + guard_digits_; }
  mpfr_prec_t bits() const;

  BigReal real(long value) const { return BigReal(value, bits()); }
  BigReal real(std::string_view text) const { return BigReal::parse(text, bits()); }
  BigReal rational(long num, long den) const;
  BigComplex complex(long re, long im = 0) const;
  BigComplex complex(std::string_view text) const {
    return BigComplex::parse(text, bits());
  }
  BigReal pow10(long exponent) const;
  // 10^-working_digits
  BigReal epsilon() const { return pow10(-working_digits()); }

 private:
  PrecisionCtx(long target, long guard) : target_digits_(target), guard_digits_(guard) {}

  long target_digits_;
  long guard_digits_;
};

// Drops an imaginary part below 10^-(working/2) * max(1, |re|), i.e. one that
// is rounding noise, so principal roots of real quantities stay on the real
// branch.
BigComplex snap_to_real(const BigComplex& z, const PrecisionCtx& ctx);

// Arithmetic-geometric mean; both arguments must be positive.
BigReal agm(const BigReal& a, const BigReal& b, const PrecisionCtx& ctx);

// pi at working precision by the Gauss-Legendre iteration. This is the only
// source of "known" pi in the library and never goes through the
// hypergeometric identities it is used to check.
BigReal pi_reference(const PrecisionCtx& ctx);

}  // namespace legpi
