#pragma once

#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"
#include "zetaval/special_value.hpp"

namespace zetaval {

/// zeta(-m), computed by the alpha = 1 bootstrap recurrence
///   sum_{k<m} C(m,k) zeta(-k) + 1 = 1/(m+1)
/// solved for successive m. Values are memoized in a process-wide append-only
/// table that is safe under concurrent use. The trivial zeros come out of the
/// recurrence; they are not special-cased.
Rational zeta_neg(unsigned m);

/// zeta(-m, a) as a polynomial in a:
///   sum_{k=0}^m C(m,k) zeta(-k) a^{m-k} + a^m - a^{m+1}/(m+1).
/// Degree m+1, leading coefficient -1/(m+1).
RationalPolynomial hurwitz_poly(unsigned m);

/// Exact zeta(-m, a) for rational a (Horner on hurwitz_poly).
Rational hurwitz_value(unsigned m, const Rational& a);

/// Centre of a Taylor expansion of zeta(-m, a).
enum class ExpansionPoint {
  Half,      ///< about a = 1/2, via zeta(s, 1/2) = (2^s - 1) zeta(s)
  MinusHalf, ///< zeta(s, 1+a) about a = -1/2
  One,       ///< about a = 1
};

/// The Taylor expansion about the chosen point, re-expanded in the a-basis.
/// Agrees with hurwitz_poly(m) identically.
RationalPolynomial hurwitz_poly_about(unsigned m, ExpansionPoint point);

/// sum_{k<m} C(m,k) zeta(-k, a) + a^m - 1/(m+1), built symbolically from the
/// Hurwitz polynomials. The zero polynomial whenever the identity holds. m >= 1.
RationalPolynomial shift_identity_residual(unsigned m);

/// Bernoulli polynomial B_n(a), n >= 0, obtained from B_{m+1}(a) = -(m+1) zeta(-m, a)
/// (and B_0 = 1). Monic of degree n.
RationalPolynomial bernoulli_poly(unsigned n);

/// B_n = B_n(1). Under this convention B_1 = +1/2.
Rational bernoulli_number(unsigned n);

/// zeta(2m) = (-1)^m 2^{2m-1} zeta(1-2m) / (2m-1)! * pi^{2m}, m >= 1.
SpecialValue zeta_even(unsigned m);

/// L(2m+1) for the odd character mod 4:
///   (-1)^m 2^{2m} zeta(-2m, 1/4) / (2m)! * pi^{2m+1}.
SpecialValue chi4_odd_L(unsigned m);

} // namespace zetaval
