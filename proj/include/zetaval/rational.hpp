#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zetaval {

using Integer = mpz_class;

/// Exact rational in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}

  /// Reduces numerator/denominator; throws DivisionByZero when denominator == 0.
  Rational(const Integer& numerator, const Integer& denominator);
  Rational(long numerator, long denominator) : Rational(Integer(numerator), Integer(denominator)) {}

  /// Accepts "p", "p/q", "-p/q" (surrounding whitespace ignored).
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const;
  /// Integer power; negative exponents invert (DivisionByZero on 0^-k).
  Rational pow(long exponent) const;

  /// "p/q", or "p" when q = 1, with an ASCII leading '-' for negatives.
  std::string to_string() const;

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_{0};
};

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

} // namespace zetaval
