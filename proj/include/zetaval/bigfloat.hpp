#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "zetaval/rational.hpp"

namespace zetaval {

/// Requested accuracy in significant decimal digits. Every numeric routine
/// takes one explicitly; there is no global precision state.
struct Precision {
  int digits = 50;

  static constexpr int kGuardDigits = 10;

  /// Throws DomainError for fewer than 10 digits.
  static Precision of(int digits);

  /// Working bits: requested digits plus guard digits plus `extra_digits`.
  mpfr_prec_t bits(int extra_digits = 0) const;
};

mpfr_prec_t digits_to_bits(int digits);

/// Arbitrary-precision real backed by MPFR. Each value carries its own
/// precision; binary operations produce the larger of the operand precisions.
class BigFloat {
public:
  explicit BigFloat(mpfr_prec_t bits = 64);
  BigFloat(long value, mpfr_prec_t bits);
  BigFloat(int value, mpfr_prec_t bits) : BigFloat(static_cast<long>(value), bits) {}
  BigFloat(double value, mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits);
  /// Decimal string, e.g. "0.25" or "-1e-40".
  BigFloat(const std::string& decimal, mpfr_prec_t bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  static BigFloat pi(mpfr_prec_t bits);
  static BigFloat log2(mpfr_prec_t bits);
  /// 10^exponent.
  static BigFloat pow10(long exponent, mpfr_prec_t bits);

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator/(const BigFloat& a, long b);
  friend BigFloat operator+(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a, long b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, long b);

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent2() const;

  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  BigFloat with_bits(mpfr_prec_t bits) const;

private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat floor(const BigFloat& x);
BigFloat round(const BigFloat& x);
BigFloat gamma(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// Complex number over BigFloat components.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit BigComplex(BigFloat real) : re(std::move(real)), im(0L, re.bits()) {}

  static BigComplex i(mpfr_prec_t bits) { return {BigFloat(0L, bits), BigFloat(1L, bits)}; }
  /// e^{2 pi i * numerator / denominator}.
  static BigComplex unit_root(long numerator, long denominator, mpfr_prec_t bits);
  /// e^{i theta}.
  static BigComplex polar(const BigFloat& theta);

  mpfr_prec_t bits() const { return re.bits() > im.bits() ? re.bits() : im.bits(); }
  bool is_real() const { return im.is_zero(); }

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigFloat& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
  friend BigComplex operator*(const BigFloat& b, BigComplex a) { return a *= b; }
  friend BigComplex operator+(BigComplex a, const BigFloat& b) {
    a.re += b;
    return a;
  }
  friend BigComplex operator-(BigComplex a, const BigFloat& b) {
    a.re -= b;
    return a;
  }

  std::string to_string(int digits) const;
};

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
/// base^z for real base > 0.
BigComplex pow(const BigFloat& base, const BigComplex& z);
/// Principal branch z^w.
BigComplex pow(const BigComplex& z, const BigComplex& w);

} // namespace zetaval
