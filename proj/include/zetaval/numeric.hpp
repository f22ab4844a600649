#pragma once

#include <functional>

#include "zetaval/bigfloat.hpp"

namespace zetaval {

// High-precision evaluators. Every routine takes the target precision
// explicitly and returns values rounded to prec.bits() (requested digits plus
// guard digits). Internally extra digits are added where cancellation is
// expected.

/// Hurwitz zeta(s, alpha) for complex s != 1 and real alpha > 0, by
/// Euler-Maclaurin summation. The cutoff is N = ceil(T/2) + 10 + max(|Im s|, -Re s, 0)
/// with T = digits + guard digits; correction terms are added until they fall
/// below 10^{-T}, doubling N if they stop decreasing first.
BigComplex hurwitz_numeric(const BigComplex& s, const BigFloat& alpha, const Precision& prec);

/// Riemann zeta(s) = hurwitz_numeric(s, 1).
BigComplex zeta_numeric(const BigComplex& s, const Precision& prec);

/// Gamma(z) for complex z off the non-positive integers. Real arguments go
/// through MPFR; complex ones use Stirling's series after shifting Re z up,
/// with reflection for Re z < 1/2.
BigComplex gamma_numeric(const BigComplex& z, const Precision& prec);

/// zeta(s, alpha) from the k-shifted power series about alpha = 0:
///   sum_{n<k} (n+alpha)^{-s} + zeta_k(s) + sum_{n>=1} (-alpha)^n/n! (s)_n zeta_k(s+n),
/// where zeta_k(w) = zeta(w) - sum_{1<=l<k} l^{-w}. Requires |alpha| < k
/// (RadiusViolation otherwise). At s = -m the pole of zeta_k at s+n = 1 meets
/// the zero factor of (s)_n; the term takes its limiting value and the series
/// terminates.
BigComplex shifted_power_series(const BigComplex& s, const BigComplex& alpha, unsigned k, const Precision& prec);

/// zeta_k(w) = zeta(w) - sum_{1<=l<k} l^{-w} = zeta(w, k), accurate relative to its size. w != 1.
BigComplex zeta_tail(const BigComplex& w, unsigned k, const Precision& prec);

/// Which phase the trigonometric series uses.
enum class FormulaPhase {
  HalfS,       ///< sin(pi s/2 + 2 pi n alpha): reproduces zeta(s, alpha)
  HalfNPrinted ///< sin(pi n/2 + 2 pi n alpha): the misprinted phase, kept for the errata suite
};

/// zeta(s, alpha) for real s < 0 and alpha in (0, 1] from
///   2^s pi^{s-1} Gamma(1-s) sum_{n>=1} sin(pi s/2 + 2 pi n alpha) n^{s-1}.
/// The series is summed directly up to a cutoff N and the oscillating tail
/// sum_{n>=N} z^n n^{s-1} (z = e^{2 pi i alpha}) is expanded asymptotically
/// through 1/(1 - z e^t) = sum a_k t^k; for z = 1 the tail is Euler-Maclaurin.
BigFloat hurwitz_formula_eval(const BigFloat& s, const BigFloat& alpha, const Precision& prec,
                              FormulaPhase phase = FormulaPhase::HalfS);

/// f'(center) as the mean (1/(n r)) sum_k f(center + r w^k) w^{-k}, w = e^{2 pi i/n}.
/// Exact for polynomials of degree < n; error decays like (r/R)^n inside a disc of
/// analyticity of radius R.
BigComplex cauchy_derivative(const std::function<BigComplex(const BigComplex&)>& f, const BigComplex& center,
                             const BigFloat& radius, int nodes);

/// B_n (B_1 = +1/2) from the numeric layer's own Akiyama-Tanigawa table; shares
/// no code with the exact core.
Rational bernoulli_reference(unsigned n);

/// B_{2k}/(2k)! from the numeric layer's own Bernoulli table (Akiyama-Tanigawa).
BigFloat bernoulli_over_factorial(unsigned two_k, mpfr_prec_t bits);

/// True when z is real and an integer <= bound.
bool is_integer_at_most(const BigComplex& z, long bound);

} // namespace zetaval
