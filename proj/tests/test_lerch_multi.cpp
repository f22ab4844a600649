#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/hurwitz.hpp"
#include "zetaval/lerch.hpp"
#include "zetaval/multi.hpp"
#include "zetaval/number_theory.hpp"

using namespace zetaval;

namespace {

std::vector<Rational> reduced_fractions(std::int64_t max_q) {
  std::vector<Rational> out;
  for (std::int64_t q = 2; q <= max_q; ++q)
    for (std::int64_t p = 1; p < q; ++p)
      if (gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

} // namespace

TEST_CASE("Lerch polynomials against the polylogarithm expansion") {
  for (const Rational& l : reduced_fractions(8)) {
    const auto p = l.numerator().get_si(), q = l.denominator().get_si();
    for (unsigned m = 0; m <= 8; ++m) CHECK_MESSAGE(lerch_poly(l, m) == oracle::lerch_poly(p, q, m), l.to_string());
  }
}

TEST_CASE("Lerch values at negative integers") {
  // phi(1/2, -k) is the alternating sum: eta-type values.
  CHECK(lerch_neg(Rational(1, 2), 0) == Cyclotomic(Rational(-1, 2)));
  CHECK(lerch_neg(Rational(1, 2), 1) == Cyclotomic(Rational(-1, 4)));
  CHECK(lerch_neg(Rational(1, 2), 2).is_zero());
  CHECK(lerch_neg(Rational(3, 2), 1) == lerch_neg(Rational(1, 2), 1));
  CHECK_THROWS_AS(lerch_neg(Rational(2), 1), NotLerch);
  CHECK_THROWS_AS(lerch_poly(Rational(0), 1), NotLerch);
}

TEST_CASE("Lerch degree, conjugation and shift recurrence") {
  for (const Rational& l : reduced_fractions(8))
    for (unsigned m = 0; m <= 8; ++m) {
      CHECK(lerch_poly(l, m).degree() == static_cast<long>(m));
      CHECK(lerch_poly(Rational(1) - l, m) == conj(lerch_poly(l, m)));
      CHECK(lerch_shift_residual(l, m).is_zero());
    }
}

TEST_CASE("multiplicity decomposition") {
  for (unsigned r = 2; r <= 7; ++r) {
    const auto d = multiplicity_decomposition(r);
    REQUIRE(d.coeffs.size() == r);
    for (long n = 0; n <= 12; ++n) {
      Rational v;
      for (std::size_t i = 0; i < r; ++i) v += d.coeffs[i] * Rational(n).pow(static_cast<long>(i));
      CHECK(v == Rational(binomial(static_cast<unsigned long>(n) + r - 1, r - 1)));
    }
  }
  CHECK_THROWS_AS(multiplicity_decomposition(1), DomainError);
}

TEST_CASE("multiple sums: two constructions agree") {
  for (unsigned r = 2; r <= 5; ++r)
    for (unsigned m = 0; m <= 10; ++m) {
      const RationalPolynomial p = z_r_poly(r, m);
      CHECK(p == z_r_oracle(r, m));
      CHECK(p.degree() == static_cast<long>(m + r));
    }
}

TEST_CASE("multiple sums at a = 1 reduce to Riemann zeta values") {
  for (unsigned r = 2; r <= 5; ++r)
    for (unsigned m = 0; m <= 8; ++m)
      CHECK(z_r_poly(r, m).evaluate(Rational(1), Rational(0)) == oracle::multi_at_one(r, m));
  for (unsigned m = 0; m <= 10; ++m) CHECK(z_r_poly(2, m).evaluate(Rational(1), Rational(0)) == zeta_neg(m + 1));
}

TEST_CASE("Z_r(-m, a) - Z_r(-m, a + 1) = Z_{r-1}(-m, a)") {
  for (unsigned m = 0; m <= 6; ++m) {
    const RationalPolynomial two = z_r_poly(2, m);
    CHECK(two - two.shifted(Rational(1)) == hurwitz_poly(m));
    for (unsigned r = 3; r <= 5; ++r) {
      const RationalPolynomial p = z_r_poly(r, m);
      CHECK(p - p.shifted(Rational(1)) == z_r_poly(r - 1, m));
    }
  }
}

TEST_CASE("zeta_r at negative integers") {
  // zeta_2(s) = zeta(s - 1) + zeta(s).
  for (unsigned k = 0; k <= 10; ++k) CHECK(zeta_r_neg(2, k) == zeta_neg(k + 1) + zeta_neg(k));
}

TEST_CASE("literal expansion differs from the true value") {
  const auto t = multi_literal_expansion(2, 0);
  CHECK(t.discrepancy == RationalPolynomial(std::vector<Rational>{Rational(-1, 2), Rational(-1)}));
  CHECK(t.literal + t.discrepancy == z_r_poly(2, 0));
}
