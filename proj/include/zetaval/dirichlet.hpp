#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetaval/bigfloat.hpp"
#include "zetaval/cyclotomic.hpp"
#include "zetaval/special_value.hpp"

namespace zetaval {

/// (Z/q)* as a product of cyclic groups: generators[i] has order orders[i].
/// Odd prime powers contribute their smallest primitive root; 4 contributes -1;
/// 2^k (k >= 3) contributes -1 and 5. Each local generator is CRT-lifted to be
/// 1 modulo the other prime-power factors. Product of orders = phi(q).
struct UnitGroup {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> generators;
  std::vector<std::int64_t> orders;
};

UnitGroup unit_group(std::int64_t q);

/// A Dirichlet character mod q of order n, stored as exponents:
/// chi(a) = zeta_n^{e(a)} on units, 0 elsewhere.
class DirichletCharacter {
public:
  /// label[i] in [0, orders[i]) sends generators[i] to e^{2 pi i label[i]/orders[i]}.
  DirichletCharacter(const UnitGroup& group, std::vector<std::int64_t> label);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& label() const { return label_; }
  /// e(a) for a unit, -1 when gcd(a, q) > 1. Any integer a is accepted.
  std::int64_t exponent(std::int64_t a) const;
  /// chi(a) as an element of Q(zeta_n).
  Cyclotomic value(std::int64_t a) const;
  BigComplex value_numeric(std::int64_t a, mpfr_prec_t bits) const;

  bool is_principal() const { return order_ == 1; }
  bool is_even() const { return exponent(-1) == 0; }
  bool is_odd() const { return !is_even(); }
  std::int64_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus_; }

  DirichletCharacter conj() const;

  /// "chi[q=5; 2]" style label (exponent tuple).
  std::string name() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_;
  }

private:
  DirichletCharacter() = default;

  std::int64_t modulus_ = 1;
  std::int64_t order_ = 1;
  std::int64_t conductor_ = 1;
  UnitGroup group_;
  std::vector<std::int64_t> label_;
  std::vector<std::int64_t> exponents_; // indexed by residue 0..q-1
};

/// All phi(q) characters, lexicographic in the label, so index 0 is principal.
/// Tables are cached per modulus; the returned reference stays valid.
const std::vector<DirichletCharacter>& characters(std::int64_t q);

/// characters(q)[index]; DomainError when out of range.
const DirichletCharacter& character(std::int64_t q, std::size_t index);

/// Smallest d | q with chi(a) = 1 for every unit a = 1 (mod d).
std::int64_t conductor(const DirichletCharacter& chi);

/// tau(chi) = sum_a chi(a) zeta_q^a over modulus lcm(n, q).
Cyclotomic gauss_sum(const DirichletCharacter& chi);

/// S(-m, chi) = sum_{a=1}^q chi(a) a^m.
Cyclotomic power_sum(unsigned m, const DirichletCharacter& chi);

/// Exact L(-m, chi) as a rational combination of power sums S(-j) = S(-j, chi):
///   sum_{k=1}^m C(m,k) zeta(-k) q^k S(k-m) + (zeta(0) + 1) S(-m) - S(-m-1)/(q(m+1)).
/// Cross-checked against q^m sum_a chi(a) zeta(-m, a/q); a disagreement throws
/// InternalError.
Cyclotomic l_neg(unsigned m, const DirichletCharacter& chi);

/// sum_{k<m} q^{m-k} C(m,k) L(-k, chi) + S(-m, chi). Zero for nonprincipal chi.
/// UnsupportedCharacter for principal chi.
Cyclotomic character_shift_residual(unsigned m, const DirichletCharacter& chi);

/// L(n, chi) = c * pi^n for primitive chi whose parity matches n.
/// NotPrimitive, ParityObstruction (n and chi of opposite parity, or n = 1 with
/// chi even).
SpecialValue l_value_closed(unsigned n, const DirichletCharacter& chi);

/// L(1, chi) = -i pi/(q tau(conj chi)) sum_a a conj(chi(a)) for odd primitive chi.
/// With drop_i_factor the factor i is dropped; that variant is wrong by a factor
/// of -i and exists only to document the discrepancy.
SpecialValue l1_odd_exact(const DirichletCharacter& chi, bool drop_i_factor = false);

/// L(1, chi) = -(1/tau(conj chi)) sum_a conj(chi(a)) log sin(pi a/q) for even
/// primitive nonprincipal chi. NotEven, NotPrimitive.
BigComplex l1_even_numeric(const DirichletCharacter& chi, const Precision& prec);

/// L(s, chi) for nonprincipal chi from the k-shifted power series
///   sum_{1<=n<=qk} chi(n) n^{-s}
///   + sum_{n>=1} (-1)^n/n! q^{-s-n} (s)_n zeta_k(s+n) S(-n, chi),
/// zeta_k(w) = zeta(w) - sum_{1<=l<k} l^{-w}. Converges like ((q-1)/(qk))^n.
/// UnsupportedCharacter for principal chi.
BigComplex l_series_numeric(const BigComplex& s, const DirichletCharacter& chi, unsigned k, const Precision& prec);

/// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q), switching to the power series
/// near s = 1 where the Hurwitz terms have poles that cancel.
BigComplex l_numeric(const BigComplex& s, const DirichletCharacter& chi, const Precision& prec);

} // namespace zetaval
