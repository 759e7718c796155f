#pragma once

// Arbitrary-precision real and complex numbers on top of MPFR.
//
// Every Real carries its own precision. Binary operations round to the larger
// of the two operand precisions, so values created inside a PrecisionContext
// stay at the context's working precision.

#include <mpfr.h>

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "cmheight/exact.hpp"

namespace cmheight {

class Real {
 public:
  explicit Real(mpfr_prec_t precision = 64);
  Real(long value, mpfr_prec_t precision);
  Real(int value, mpfr_prec_t precision) : Real(static_cast<long>(value), precision) {}
  Real(double value, mpfr_prec_t precision);
  Real(const Rational& value, mpfr_prec_t precision);
  Real(const Integer& value, mpfr_prec_t precision);
  /// Parses a decimal literal such as "-1.25e-3".
  static Real parse(std::string_view text, mpfr_prec_t precision);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Rounds to a new precision.
  Real with_precision(mpfr_prec_t precision) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Fixed notation with `digits` digits after the decimal point.
  std::string to_fixed(int digits) const;
  /// Scientific notation with `digits` significant digits.
  std::string to_scientific(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;

  Real& operator+=(const Real& b);
  Real& operator-=(const Real& b);
  Real& operator*=(const Real& b);
  Real& operator/=(const Real& b);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  /// Multiplies by a double that must be exactly representable (quarters).
  friend Real mul_exact(const Real& a, double b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) >= 0; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real pow(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// Nearest integer (ties away from zero).
Integer round_to_integer(const Real& x);
/// 2^e at the given precision.
Real pow2(long e, mpfr_prec_t precision);

/// Precision settings plus constants computed once at construction.
class PrecisionContext {
 public:
  static constexpr long kDefaultBits = 256;
  static constexpr long kDefaultGuard = 32;
  static constexpr long kMinimumBits = 64;

  explicit PrecisionContext(long bits = kDefaultBits, long guard = kDefaultGuard);

  long bits() const { return bits_; }
  long guard() const { return guard_; }
  /// Precision used for internal arithmetic: bits + guard.
  mpfr_prec_t working_bits() const { return static_cast<mpfr_prec_t>(bits_ + guard_); }

  Real real(long v) const { return Real(v, working_bits()); }
  Real real(const Rational& v) const { return Real(v, working_bits()); }
  Real parse(std::string_view text) const { return Real::parse(text, working_bits()); }

  const Real& pi() const { return constants_->pi; }
  const Real& log2() const { return constants_->log2; }
  /// 2^(-bits): the target accuracy of every emitted value.
  Real epsilon() const { return pow2(-bits_, working_bits()); }
  /// 2^(-bits/2): slack for geometric predicates (domain membership).
  Real tolerance() const { return pow2(-bits_ / 2, working_bits()); }

  /// The same settings with doubled precision.
  PrecisionContext doubled() const { return PrecisionContext(2 * bits_, guard_); }

 private:
  struct Constants {
    Real pi;
    Real log2;
  };
  long bits_;
  long guard_;
  std::shared_ptr<const Constants> constants_;
};

class Complex {
 public:
  explicit Complex(mpfr_prec_t precision = 64) : re_(precision), im_(precision) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  static Complex from_real(const Real& re) { return Complex(re, Real(0L, re.precision())); }
  /// Parses "a", "a+b*i", "a-b*i" or "b*i" with decimal a, b.
  static Complex parse(std::string_view text, mpfr_prec_t precision);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  Complex& operator+=(const Complex& b);
  Complex& operator-=(const Complex& b);
  Complex& operator*=(const Complex& b);
  Complex operator-() const { return Complex(-re_, -im_); }

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& b);
  friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
  friend Complex operator/(const Complex& a, const Real& b);
  friend Complex operator*(const Complex& a, long b);

  std::string to_string(int digits) const;

 private:
  Real re_, im_;
};

Complex conj(const Complex& z);
/// |z|^2.
Real norm(const Complex& z);
Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long e);
/// Multiplies by i^k.
Complex times_i_power(const Complex& z, int k);

}  // namespace cmheight
