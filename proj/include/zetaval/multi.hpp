#pragma once

#include <vector>

#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"

namespace zetaval {

// Z_r(s, alpha) = sum_{n>=0} C(n+r-1, r-1) (n + alpha)^{-s}: the number of
// r-tuples of non-negative integers with sum n weights each term.

/// C(N+r-1, r-1) = sum_{i<r} coeffs[i] N^i, so coeffs[i] * (r-1)! is the
/// elementary symmetric sum e_{r-1-i}(1, ..., r-1) and coeffs[r-1] * (r-1)! = 1.
struct MultiplicityDecomposition {
  unsigned r = 2;
  std::vector<Rational> coeffs;
};

/// r >= 2.
MultiplicityDecomposition multiplicity_decomposition(unsigned r);

/// zeta_r(-k) for zeta_r(s) = sum_{N>=1} C(N+r-1, r-1) N^{-s} = sum_i c_i zeta(s - i).
Rational zeta_r_neg(unsigned r, unsigned k);

/// Z_r(-m, alpha) = alpha^m + sum_{n<=m} C(m,n) zeta_r(n-m) alpha^n
///   + sum_{i<r} (-1)^{i+1} c_i alpha^{m+i+1} / ((i+1) C(m+i+1, m)).
/// Degree m + r.
RationalPolynomial z_r_poly(unsigned r, unsigned m);

/// Z_r(-m, alpha) by rebasing: C(n+r-1, r-1) = sum_k w_k(alpha) (n+alpha)^k, so
/// Z_r(-m, alpha) = sum_k w_k(alpha) zeta(-m-k, alpha). Shares only hurwitz_poly
/// with z_r_poly.
RationalPolynomial z_r_oracle(unsigned r, unsigned m);

/// The expansion with zeta_r(s) read as Z_r(s, 1) = (1/(r-1)!) sum_{j=1}^{r-1} A_j zeta(s-j),
/// A_j = e_{r-1-j}(1, ..., r-2), and pole terms only for j >= 1.
struct LiteralExpansion {
  RationalPolynomial literal;
  /// z_r_oracle(r, m) - literal. Reported, never assumed zero.
  RationalPolynomial discrepancy;
};

LiteralExpansion multi_literal_expansion(unsigned r, unsigned m);

} // namespace zetaval
