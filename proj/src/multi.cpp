#include "zetaval/multi.hpp"

#include "zetaval/errors.hpp"
#include "zetaval/hurwitz.hpp"

namespace zetaval {

namespace {

void require_r(unsigned r) {
  if (r < 2) throw DomainError("multiple sums need r >= 2");
}

// prod_{j in [lo, hi]} (x + j), coefficients lowest first.
RationalPolynomial rising_product(long lo, long hi) {
  RationalPolynomial p = RationalPolynomial::constant(Rational(1));
  for (long j = lo; j <= hi; ++j) p = p * RationalPolynomial(std::vector<Rational>{Rational(j), Rational(1)});
  return p;
}

} // namespace

MultiplicityDecomposition multiplicity_decomposition(unsigned r) {
  require_r(r);
  const Rational scale = Rational(1) / Rational(factorial(r - 1));
  const RationalPolynomial p = rising_product(1, r - 1).scaled(scale);
  MultiplicityDecomposition d;
  d.r = r;
  for (unsigned i = 0; i < r; ++i) d.coeffs.push_back(p.coeff(i));
  return d;
}

Rational zeta_r_neg(unsigned r, unsigned k) {
  const auto d = multiplicity_decomposition(r);
  Rational acc;
  for (unsigned i = 0; i < r; ++i) acc += d.coeffs[i] * zeta_neg(k + i);
  return acc;
}

RationalPolynomial z_r_poly(unsigned r, unsigned m) {
  const auto d = multiplicity_decomposition(r);
  std::vector<Rational> c(m + r + 1);
  c[m] += Rational(1);
  for (unsigned n = 0; n <= m; ++n) c[n] += Rational(binomial(m, n)) * zeta_r_neg(r, m - n);
  for (unsigned i = 0; i < r; ++i) {
    const Rational sign = i % 2 == 0 ? Rational(-1) : Rational(1);
    c[m + i + 1] += sign * d.coeffs[i] / (Rational(i + 1) * Rational(binomial(m + i + 1, m)));
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial z_r_oracle(unsigned r, unsigned m) {
  require_r(r);
  // weights[k] is the alpha-polynomial multiplying x^k in prod_{j<r} (x + j - alpha).
  std::vector<RationalPolynomial> weights{RationalPolynomial::constant(Rational(1))};
  for (unsigned j = 1; j < r; ++j) {
    const RationalPolynomial shift(std::vector<Rational>{Rational(j), Rational(-1)});
    std::vector<RationalPolynomial> next(weights.size() + 1);
    for (std::size_t k = 0; k < weights.size(); ++k) {
      next[k + 1] += weights[k];
      next[k] += weights[k] * shift;
    }
    weights = std::move(next);
  }
  const Rational scale = Rational(1) / Rational(factorial(r - 1));
  RationalPolynomial out;
  for (std::size_t k = 0; k < weights.size(); ++k) out += weights[k] * hurwitz_poly(m + static_cast<unsigned>(k));
  return out.scaled(scale);
}

LiteralExpansion multi_literal_expansion(unsigned r, unsigned m) {
  require_r(r);
  // A_j = coefficient of x^j in x (x+1) ... (x+r-2).
  const RationalPolynomial a = RationalPolynomial::monomial(Rational(1), 1) * rising_product(1, static_cast<long>(r) - 2);
  const Rational scale = Rational(1) / Rational(factorial(r - 1));
  auto zeta_lit = [&](unsigned k) {
    Rational acc;
    for (unsigned j = 1; j < r; ++j) acc += a.coeff(j) * zeta_neg(k + j);
    return acc * scale;
  };
  std::vector<Rational> c(m + r + 1);
  c[m] += Rational(1);
  for (unsigned n = 0; n <= m; ++n) c[n] += Rational(binomial(m, n)) * zeta_lit(m - n);
  for (unsigned j = 1; j < r; ++j) {
    const Rational sign = j % 2 == 0 ? Rational(-1) : Rational(1);
    c[m + j + 1] += scale * sign * a.coeff(j) / (Rational(j + 1) * Rational(binomial(m + j + 1, m)));
  }
  LiteralExpansion out;
  out.literal = RationalPolynomial(std::move(c));
  out.discrepancy = z_r_oracle(r, m) - out.literal;
  return out;
}

} // namespace zetaval
