#pragma once

#include <string>

#include "zetaval/bigfloat.hpp"
#include "zetaval/dirichlet.hpp"

namespace zetaval {

/// An absolute residual and the threshold it is held to. pass == (value <= bound).
struct Residual {
  BigFloat value;
  BigFloat bound;
  bool pass = false;
};

Residual make_residual(BigFloat value, BigFloat bound);

/// |zeta(s) - 2^s pi^{s-1} Gamma(1-s) sin(pi s/2) zeta(1-s)|, bound 10^{-(P-12)}.
/// PoleAtOne at s = 1. At integers s >= 0 the right side has a removable
/// singularity and is evaluated as its mean over a circle of radius 1/4.
Residual functional_eq_residual(const BigComplex& s, const Precision& prec);

/// Functional equation of L(s, chi) for primitive nonprincipal chi:
///   even: L(s) = q^{-s} 2^s pi^{s-1} Gamma(1-s) tau sin(pi s/2) L(1-s, conj chi)
///   odd:  L(s) = -i q^{-s} 2^s pi^{s-1} Gamma(1-s) tau cos(pi s/2) L(1-s, conj chi)
/// Bound 10^{-(P-12)}.
Residual l_functional_residual(const BigComplex& s, const DirichletCharacter& chi, const Precision& prec);

enum class ChainKind { Zeta, LEven, LOdd };

/// Odd zeta values and opposite-parity L-values against derivatives at
/// negative integers (Cauchy mean, radius 1/4, digits + 10 nodes):
///   Zeta  (m >= 1): zeta(2m+1) = (-1)^m 2^{2m+1} pi^{2m}/(2m)! zeta'(-2m)
///   LEven (m >= 0): L(2m+1, chi) = (-1)^m 2^{2m+1} pi^{2m} q^{-2m}/(tau(conj chi) (2m)!) L'(-2m, conj chi)
///   LOdd  (m >= 1): L(2m, chi) = i (-1)^{m+1} 2^{2m} pi^{2m-1} q^{1-2m}/(tau(conj chi) (2m-1)!) L'(1-2m, conj chi)
/// Bound 10^{-P/2}. chi is ignored for Zeta.
Residual derivative_chain_residual(ChainKind kind, unsigned m, const DirichletCharacter* chi, const Precision& prec);

enum class ClassSumVariant { SineOdd, CosineEven };

/// Exact zeta(-2m, 1/q) (SineOdd) or zeta(1-2m, 1/q) (CosineEven) against the
/// trigonometrically weighted congruence-class sums
///   SineOdd:    (-1)^m 2^{-2m} pi^{-2m-1} (2m)! sum_{r<=(q-1)/2} sin(2 pi r/q) (C_r - C_{q-r}),
///               C_r = sum_{n = r mod q} n^{-2m-1}
///   CosineEven: (-1)^m 2^{1-2m} pi^{-2m} (2m-1)! sum_{r=1}^q cos(2 pi r/q) sum_{n = r mod q} n^{-2m}
/// Each class sum is q^{-k} zeta(k, r/q). Bound 10^{-(P-8)}.
Residual class_sum_residual(ClassSumVariant variant, unsigned m, std::int64_t q, const Precision& prec);

/// |closed-form L(1, chi) - l_series_numeric(1, chi)|: log-sine sum for even chi,
/// the exact odd value otherwise. Bound 10^{-(P-10)}. NotPrimitive for principal chi.
Residual l1_cross_check(const DirichletCharacter& chi, const Precision& prec);

/// Outcome of scanning for a rational p/q, q <= bound, near a real ratio.
struct RationalScan {
  BigFloat ratio;
  Rational nearest;     ///< best convergent with denominator <= bound
  BigFloat distance;    ///< |ratio - nearest|
  bool found = false;   ///< distance <= tolerance
};

/// Best approximation with denominator <= bound via continued-fraction
/// convergents. Any p/q within 1/(2 q^2) of x is a convergent, so for
/// tolerance < 1/(2 bound^2) this finds every hit a full scan would.
RationalScan scan_rationals(const BigFloat& x, const Integer& bound, const BigFloat& tolerance);

struct ConjectureReport {
  unsigned m = 1;
  Integer denominator_bound;
  BigFloat tolerance;
  RationalScan odd_zeta;  ///< zeta(2m+1)/pi^{2m+1}
  RationalScan control;   ///< L(3, chi_4)/pi^3 numerically; expected hit 1/32
  Rational control_exact; ///< exact coefficient of L(3, chi_4)
  bool control_hit = false;

  /// "no rational found up to bound" or the hit, never a claim of irrationality.
  std::string summary() const;
};

/// Scans zeta(2m+1)/pi^{2m+1}; tolerance 10^{-(P-10)}. Always returns a report.
ConjectureReport conjecture_probe(unsigned m, const Precision& prec, const Integer& denominator_bound);

} // namespace zetaval
