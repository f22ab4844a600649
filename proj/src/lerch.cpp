#include "zetaval/lerch.hpp"

#include "zetaval/errors.hpp"
#include "zetaval/hurwitz.hpp"
#include "zetaval/number_theory.hpp"

namespace zetaval {

namespace {

struct Fraction {
  std::int64_t p;
  std::int64_t q;
};

Fraction reduce_mod_one(const Rational& lambda) {
  if (lambda.is_integer()) throw NotLerch("integer lambda gives the Hurwitz zeta function; use zeta-neg / hurwitz");
  if (!lambda.denominator().fits_slong_p()) throw DomainError("denominator of lambda too large");
  const std::int64_t q = lambda.denominator().get_si();
  const std::int64_t p = mod(Integer(lambda.numerator() % q).get_si(), q);
  return {p, q};
}

} // namespace

Cyclotomic lerch_neg(const Rational& lambda, unsigned k) {
  const auto [p, q] = reduce_mod_one(lambda);
  const RationalPolynomial poly = hurwitz_poly(k);
  std::vector<Rational> raw(static_cast<std::size_t>(q));
  for (std::int64_t a = 1; a <= q; ++a)
    raw[static_cast<std::size_t>(mod(p * a, q))] += poly.evaluate(Rational(a, q), Rational(0));
  return Cyclotomic(Rational(q).pow(k)) * Cyclotomic::from_powers(q, raw);
}

CycPolynomial lerch_poly(const Rational& lambda, unsigned m) {
  std::vector<Cyclotomic> c(m + 1);
  for (unsigned k = 0; k <= m; ++k) c[m - k] = Cyclotomic(Rational(binomial(m, k))) * lerch_neg(lambda, k);
  c[m] += Cyclotomic(Rational(1));
  return CycPolynomial(std::move(c));
}

CycPolynomial lerch_shift_residual(const Rational& lambda, unsigned m) {
  const auto [p, q] = reduce_mod_one(lambda);
  const Cyclotomic w = Cyclotomic::root_of_unity(q, -p);
  CycPolynomial r = lerch_poly(lambda, m).scaled(w - Cyclotomic(Rational(1)));
  r -= CycPolynomial::monomial(w, m);
  for (unsigned k = 0; k < m; ++k) r -= lerch_poly(lambda, k).scaled(Cyclotomic(Rational(binomial(m, k))));
  return r;
}

} // namespace zetaval
