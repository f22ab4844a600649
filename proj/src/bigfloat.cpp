#include "zetaval/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>

#include "zetaval/errors.hpp"

namespace zetaval {

Precision Precision::of(int digits) {
  if (digits < 10) throw DomainError("precision must be at least 10 digits");
  return Precision{digits};
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

mpfr_prec_t Precision::bits(int extra_digits) const {
  return digits_to_bits(digits + kGuardDigits + extra_digits);
}

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return a.bits() > b.bits() ? a.bits() : b.bits(); }

} // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, kRnd);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, kRnd);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.raw().get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const std::string& decimal, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, kRnd) != 0) {
    mpfr_clear(v_);
    throw ParseError("malformed decimal '" + decimal + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

BigFloat BigFloat::log2(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_log2(r.v_, kRnd);
  return r;
}

BigFloat BigFloat::pow10(long exponent, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(std::labs(exponent)), kRnd);
  if (exponent < 0) mpfr_ui_div(r.v_, 1, r.v_, kRnd);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(bits());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw DivisionByZero();
  BigFloat r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a.bits());
  mpfr_mul_si(r.v_, a.v_, b, kRnd);
  return r;
}

BigFloat operator/(const BigFloat& a, long b) {
  if (b == 0) throw DivisionByZero();
  BigFloat r(a.bits());
  mpfr_div_si(r.v_, a.v_, b, kRnd);
  return r;
}

BigFloat operator+(const BigFloat& a, long b) {
  BigFloat r(a.bits());
  mpfr_add_si(r.v_, a.v_, b, kRnd);
  return r;
}

BigFloat operator-(const BigFloat& a, long b) {
  BigFloat r(a.bits());
  mpfr_sub_si(r.v_, a.v_, b, kRnd);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

long BigFloat::exponent2() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(digits > 1 ? digits - 1 : 0) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::to_fixed(int decimals) const {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(decimals) + "Rf";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat BigFloat::with_bits(mpfr_prec_t bits) const {
  BigFloat r(bits);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

#define ZETAVAL_UNARY(name, fn)            \
  BigFloat name(const BigFloat& x) {       \
    BigFloat r(x.bits());                  \
    fn(r.get(), x.get(), kRnd);            \
    return r;                              \
  }

ZETAVAL_UNARY(abs, mpfr_abs)
ZETAVAL_UNARY(sqrt, mpfr_sqrt)
ZETAVAL_UNARY(exp, mpfr_exp)
ZETAVAL_UNARY(log, mpfr_log)
ZETAVAL_UNARY(sin, mpfr_sin)
ZETAVAL_UNARY(cos, mpfr_cos)
ZETAVAL_UNARY(gamma, mpfr_gamma)

#undef ZETAVAL_UNARY

BigFloat floor(const BigFloat& x) {
  BigFloat r(x.bits());
  mpfr_floor(r.get(), x.get());
  return r;
}

BigFloat round(const BigFloat& x) {
  BigFloat r(x.bits());
  mpfr_round(r.get(), x.get());
  return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r(wider(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), kRnd);
  return r;
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat r(base.bits());
  mpfr_pow_si(r.get(), base.get(), exponent, kRnd);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------

BigComplex BigComplex::unit_root(long numerator, long denominator, mpfr_prec_t bits) {
  const BigFloat theta = BigFloat::pi(bits) * (2 * numerator) / denominator;
  return polar(theta);
}

BigComplex BigComplex::polar(const BigFloat& theta) {
  BigFloat s(theta.bits()), c(theta.bits());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), kRnd);
  return {std::move(c), std::move(s)};
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigFloat r = re * rhs.re - im * rhs.im;
  BigFloat i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  const BigFloat den = rhs.re * rhs.re + rhs.im * rhs.im;
  if (den.is_zero()) throw DivisionByZero();
  BigFloat r = (re * rhs.re + im * rhs.im) / den;
  BigFloat i = (im * rhs.re - re * rhs.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

std::string BigComplex::to_string(int digits) const {
  std::string out = re.to_string(digits);
  out += im.sign() < 0 ? " - " : " + ";
  out += abs(im).to_string(digits) + "i";
  return out;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.bits());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), kRnd);
  return r;
}

BigComplex exp(const BigComplex& z) {
  if (z.im.is_zero()) return BigComplex(exp(z.re));
  BigComplex unit = BigComplex::polar(z.im);
  return unit * exp(z.re);
}

BigComplex log(const BigComplex& z) {
  BigFloat arg(z.bits());
  mpfr_atan2(arg.get(), z.im.get(), z.re.get(), kRnd);
  return {log(abs(z)), std::move(arg)};
}

BigComplex sin(const BigComplex& z) {
  if (z.im.is_zero()) return BigComplex(sin(z.re));
  BigFloat sh(z.bits()), ch(z.bits());
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im.get(), kRnd);
  return {sin(z.re) * ch, cos(z.re) * sh};
}

BigComplex cos(const BigComplex& z) {
  if (z.im.is_zero()) return BigComplex(cos(z.re));
  BigFloat sh(z.bits()), ch(z.bits());
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im.get(), kRnd);
  return {cos(z.re) * ch, -(sin(z.re) * sh)};
}

BigComplex pow(const BigFloat& base, const BigComplex& z) {
  if (z.im.is_zero()) return BigComplex(pow(base, z.re));
  const BigFloat lb = log(base);
  return exp(BigComplex(z.re * lb, z.im * lb));
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.im.is_zero() && z.re.sign() > 0) return pow(z.re, w);
  if (z.re.is_zero() && z.im.is_zero()) {
    if (w.re.sign() > 0) return BigComplex(w.bits());
    throw DivisionByZero("zero to a non-positive power");
  }
  return exp(w * log(z));
}

} // namespace zetaval
