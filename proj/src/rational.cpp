#include "zetaval/rational.hpp"

#include <cctype>

#include "zetaval/errors.hpp"

namespace zetaval {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool parse_integer(std::string_view digits, Integer& out) {
  if (digits.empty()) return false;
  std::size_t i = 0;
  if (digits[0] == '-' || digits[0] == '+') i = 1;
  if (i == digits.size()) return false;
  for (std::size_t j = i; j < digits.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(digits[j]))) return false;
  std::string buf(digits[0] == '+' ? digits.substr(1) : digits);
  return out.set_str(buf, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  Integer num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(t, num)) throw ParseError("malformed rational '" + std::string(text) + "'");
  } else {
    const auto den_text = t.substr(slash + 1);
    if (!parse_integer(t.substr(0, slash), num) || den_text.empty() || den_text[0] == '-' ||
        den_text[0] == '+' || !parse_integer(den_text, den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero("zero to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

} // namespace zetaval
