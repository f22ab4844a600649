#include "zetaval/hurwitz.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "zetaval/errors.hpp"

namespace zetaval {

namespace {

struct ZetaNegMemo {
  std::shared_mutex mutex;
  std::vector<Rational> values; // values[j] = zeta(-j)
};

ZetaNegMemo& memo() {
  static ZetaNegMemo instance;
  return instance;
}

Rational pow2(long e) { return Rational(2).pow(e); }

} // namespace

Rational zeta_neg(unsigned m) {
  auto& table = memo();
  {
    std::shared_lock lock(table.mutex);
    if (m < table.values.size()) return table.values[m];
  }
  std::unique_lock lock(table.mutex);
  auto& v = table.values;
  // Recurrence at M = j + 1 isolates the last unknown zeta(-j):
  //   C(M, j) zeta(-j) = 1/(M+1) - 1 - sum_{k<j} C(M,k) zeta(-k).
  for (unsigned j = static_cast<unsigned>(v.size()); j <= m; ++j) {
    const unsigned big_m = j + 1;
    Rational rhs = Rational(1, big_m + 1) - Rational(1);
    for (unsigned k = 0; k < j; ++k) rhs -= Rational(binomial(big_m, k)) * v[k];
    v.push_back(rhs / Rational(binomial(big_m, j)));
  }
  return v[m];
}

RationalPolynomial hurwitz_poly(unsigned m) {
  std::vector<Rational> c(m + 2);
  for (unsigned k = 0; k <= m; ++k) c[m - k] += Rational(binomial(m, k)) * zeta_neg(k);
  c[m] += Rational(1);
  c[m + 1] = -Rational(1, m + 1);
  return RationalPolynomial(std::move(c));
}

Rational hurwitz_value(unsigned m, const Rational& a) {
  return hurwitz_poly(m).evaluate(a, Rational(0));
}

RationalPolynomial hurwitz_poly_about(unsigned m, ExpansionPoint point) {
  // Build the expansion in t = a - centre, then substitute t = a - centre.
  std::vector<Rational> t_coeffs(m + 2);
  Rational centre;
  switch (point) {
  case ExpansionPoint::Half:
  case ExpansionPoint::MinusHalf:
    centre = point == ExpansionPoint::Half ? Rational(1, 2) : Rational(-1, 2);
    for (unsigned n = 0; n < m; ++n)
      t_coeffs[n] = Rational(binomial(m, n)) * (pow2(static_cast<long>(n) - m) - Rational(1)) * zeta_neg(m - n);
    break;
  case ExpansionPoint::One:
    centre = Rational(1);
    for (unsigned n = 0; n <= m; ++n) t_coeffs[n] = Rational(binomial(m, n)) * zeta_neg(m - n);
    break;
  }
  t_coeffs[m + 1] = -Rational(1, m + 1);
  RationalPolynomial result = RationalPolynomial(std::move(t_coeffs)).shifted(-centre);
  if (point == ExpansionPoint::MinusHalf) result += RationalPolynomial::monomial(Rational(1), m);
  return result;
}

RationalPolynomial shift_identity_residual(unsigned m) {
  RationalPolynomial lhs = RationalPolynomial::monomial(Rational(1), m);
  for (unsigned k = 0; k < m; ++k) lhs += hurwitz_poly(k).scaled(Rational(binomial(m, k)));
  return lhs - RationalPolynomial::constant(Rational(1, m + 1));
}

RationalPolynomial bernoulli_poly(unsigned n) {
  if (n == 0) return RationalPolynomial::constant(Rational(1));
  return hurwitz_poly(n - 1).scaled(Rational(-static_cast<long>(n)));
}

Rational bernoulli_number(unsigned n) { return bernoulli_poly(n).evaluate(Rational(1), Rational(0)); }

SpecialValue zeta_even(unsigned m) {
  if (m == 0) throw DomainError("zeta_even needs m >= 1");
  const long sign = m % 2 == 0 ? 1 : -1;
  const Rational c = Rational(sign) * pow2(2L * m - 1) * zeta_neg(2 * m - 1) / Rational(factorial(2 * m - 1));
  return SpecialValue(Cyclotomic(c), 2 * m);
}

SpecialValue chi4_odd_L(unsigned m) {
  const long sign = m % 2 == 0 ? 1 : -1;
  const Rational c = Rational(sign) * pow2(2L * m) * hurwitz_value(2 * m, Rational(1, 4)) / Rational(factorial(2 * m));
  return SpecialValue(Cyclotomic(c), 2 * m + 1);
}

} // namespace zetaval
