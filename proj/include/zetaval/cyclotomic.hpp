#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zetaval/bigfloat.hpp"
#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"

namespace zetaval {

/// Phi_q as integer coefficients, lowest degree first. Computed by exact
/// division of x^q - 1 by the product of Phi_d over proper divisors d of q;
/// results are cached.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t q);

/// Element of Q(zeta_q), zeta_q = e^{2 pi i / q}, stored as the unique
/// remainder modulo Phi_q: sum_j coeffs[j] * zeta_q^j with j < phi(q).
///
/// Binary operations between different moduli lift both operands to the lcm.
class Cyclotomic {
public:
  /// Zero of Q (modulus 1).
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  /// A rational, modulus 1.
  Cyclotomic(const Rational& value); // NOLINT(google-explicit-constructor)

  /// Folds exponents of `raw` (coefficient of zeta_q^j at index j, any length)
  /// modulo q, then reduces modulo Phi_q.
  static Cyclotomic from_powers(std::int64_t q, std::span<const Rational> raw);
  /// zeta_q^k.
  static Cyclotomic root_of_unity(std::int64_t q, std::int64_t k = 1);
  static Cyclotomic zero(std::int64_t q);
  static Cyclotomic one(std::int64_t q);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws DomainError unless is_rational().
  Rational rational_value() const;

  /// Image under zeta_q -> zeta_Q^{Q/q}; throws IncompatibleModuli if q does not divide Q.
  Cyclotomic lift(std::int64_t target) const;
  /// Complex conjugate: zeta_q -> zeta_q^{q-1}.
  Cyclotomic conj() const;
  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_q.
  Cyclotomic inv() const;
  /// Galois action zeta_q -> zeta_q^k for k coprime to q.
  Cyclotomic galois(std::int64_t k) const;
  /// Same number expressed over the smallest modulus whose field contains it.
  Cyclotomic simplified() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }
  Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
  Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
  Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

  /// Numeric value as an element of C. Uses the working precision of `prec`.
  BigComplex embed(const Precision& prec) const;
  BigComplex embed_bits(mpfr_prec_t bits) const;

  /// "[q=Q] c0 + c1*z + c2*z^2 ..." with zero terms omitted, "[q=Q] 0" for zero.
  std::string to_string() const;

  /// Equal as complex numbers (compared after lifting to a common modulus).
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

private:
  Cyclotomic(std::int64_t q, std::vector<Rational> reduced);

  std::int64_t modulus_ = 1;
  std::vector<Rational> coeffs_;
};

using CycPolynomial = Polynomial<Cyclotomic>;

/// Lifts every coefficient to modulus q.
CycPolynomial lift(const CycPolynomial& p, std::int64_t q);
CycPolynomial conj(const CycPolynomial& p);
/// Rational polynomial viewed over Q(zeta_q).
CycPolynomial to_cyc(const RationalPolynomial& p, std::int64_t q);
/// Smallest modulus that holds every coefficient (1 for the zero polynomial).
std::int64_t common_modulus(const CycPolynomial& p);
std::string to_string(const CycPolynomial& p, const std::string& var = "a");

} // namespace zetaval
