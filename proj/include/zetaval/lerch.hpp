#pragma once

#include "zetaval/cyclotomic.hpp"
#include "zetaval/rational.hpp"

namespace zetaval {

// Lerch zeta phi(lambda, alpha, s) = sum_{n>=0} e^{2 pi i lambda n} (n + alpha)^{-s}
// and phi(lambda, s) = sum_{n>=1} e^{2 pi i lambda n} n^{-s}, for rational
// non-integer lambda = p/q. Values lie in Q(zeta_q); p is taken mod q.
// Integer lambda throws NotLerch (that case is the Hurwitz zeta function).

/// phi(lambda, -k) = q^k sum_{a=1}^q zeta_q^{pa} zeta(-k, a/q).
Cyclotomic lerch_neg(const Rational& lambda, unsigned k);

/// phi(lambda, alpha, -m) = alpha^m + sum_{k=0}^m C(m,k) phi(lambda, -k) alpha^{m-k}.
/// Degree exactly m: phi is entire in s, so no alpha^{m+1} pole term appears.
CycPolynomial lerch_poly(const Rational& lambda, unsigned m);

/// (w - 1) phi(lambda, alpha, -m) - w alpha^m - sum_{k<m} C(m,k) phi(lambda, alpha, -k)
/// with w = e^{-2 pi i lambda}. The zero polynomial when the shift recurrence holds.
CycPolynomial lerch_shift_residual(const Rational& lambda, unsigned m);

} // namespace zetaval
