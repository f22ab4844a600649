#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zetaval/rational.hpp"

namespace zetaval {

/// Dense univariate polynomial; coeffs()[i] multiplies x^i. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no coefficients
/// and degree -1.
///
/// Coeff must provide is_zero(), +, -, * and construction from Rational.
template <class Coeff>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
  /// c * x^k.
  static Polynomial monomial(Coeff c, std::size_t k) {
    std::vector<Coeff> v(k + 1, Coeff(Rational(0)));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k (zero beyond the degree).
  Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(Rational(0)); }
  const Coeff& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(Rational(0)));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(Rational(0)));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const { return Polynomial() - *this; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(Rational(0)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial scaled(const Coeff& c) const {
    std::vector<Coeff> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return Polynomial(std::move(out));
  }

  /// Horner evaluation; Value must accept Value * Coeff and Value + Coeff.
  template <class Value>
  Value evaluate(const Value& x, Value zero) const {
    Value acc = std::move(zero);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(x + shift), re-expanded in the x-basis.
  Polynomial shifted(const Coeff& shift) const {
    // Horner with polynomial accumulator: acc = acc * (x + shift) + c.
    const Polynomial linear(std::vector<Coeff>{shift, Coeff(Rational(1))});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + constant(*it);
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// (x + c)^n with rational coefficients.
RationalPolynomial linear_power(const Rational& c, unsigned n);

/// Quotient and remainder of a / b over Q; throws DivisionByZero for b = 0.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

/// Text form in the variable `var`, highest power first, e.g. "-1/2*a^2 + 1/2*a - 1/12".
std::string to_string(const RationalPolynomial& p, const std::string& var = "a");

} // namespace zetaval
