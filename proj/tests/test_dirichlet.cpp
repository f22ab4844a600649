#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zetaval/dirichlet.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/number_theory.hpp"

using namespace zetaval;

namespace {

// Exponent table rescaled to Z/phi(q), the form the brute-force oracle uses.
std::vector<std::int64_t> normalized(const DirichletCharacter& chi) {
  const std::int64_t n = totient(chi.modulus());
  std::vector<std::int64_t> t;
  for (std::int64_t a = 0; a < chi.modulus(); ++a) {
    const std::int64_t e = chi.exponent(a);
    t.push_back(e < 0 ? -1 : e * (n / chi.order()));
  }
  return t;
}

// L(-m, chi) = -B_{m+1, chi}/(m+1), B_{n, chi} = q^{n-1} sum_a chi(a) B_n(a/q).
Cyclotomic generalized_bernoulli_value(unsigned m, const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  const RationalPolynomial b = oracle::bernoulli_poly(m + 1);
  Cyclotomic acc;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (chi.exponent(a) < 0) continue;
    acc += chi.value(a) * Cyclotomic(b.evaluate(Rational(a, q), Rational(0)));
  }
  return acc * Cyclotomic(Rational(q).pow(static_cast<long>(m)) * Rational(-1, static_cast<long>(m) + 1));
}

} // namespace

TEST_CASE("character tables match brute-force enumeration") {
  for (std::int64_t q = 1; q <= 30; ++q) {
    const auto expected = oracle::brute_characters(q);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& chi : characters(q)) got.insert(normalized(chi));
    CHECK_MESSAGE(got == expected, "q = " << q);
    CHECK(static_cast<std::int64_t>(characters(q).size()) == totient(q));
  }
}

TEST_CASE("index order is stable and starts at the principal character") {
  for (std::int64_t q = 1; q <= 24; ++q) {
    CHECK(characters(q)[0].is_principal());
    CHECK(&characters(q) == &characters(q));
  }
  CHECK_THROWS_AS(character(5, 4), DomainError);
  // Named characters used throughout the suites.
  CHECK(character(4, 1).is_odd());
  CHECK(character(4, 1).value(3) == Cyclotomic(Rational(-1)));
  CHECK(character(5, 2).order() == 2);
  CHECK(character(8, 1).is_even());
  CHECK(character(8, 1).conductor() == 8);
  CHECK(unit_group(5).orders == std::vector<std::int64_t>{4});
  CHECK(unit_group(8).orders == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("characters mod 12") {
  const auto& c = characters(12);
  REQUIRE(c.size() == 4);
  CHECK(c[0].conductor() == 1);
  CHECK((c[1].conductor() == 3 && c[1].is_odd()));
  CHECK((c[2].conductor() == 4 && c[2].is_odd()));
  CHECK((c[3].conductor() == 12 && c[3].is_even()));
}

TEST_CASE("primitive counts and conductors") {
  for (std::int64_t q = 1; q <= 40; ++q) {
    std::int64_t primitive = 0;
    for (const auto& chi : characters(q)) {
      primitive += chi.is_primitive();
      CHECK(q % chi.conductor() == 0);
      CHECK(conductor(chi) == chi.conductor());
      // chi is trivial on units congruent to 1 modulo the conductor.
      for (std::int64_t a = 1; a < q; ++a)
        if (gcd(a, q) == 1 && a % chi.conductor() == 1 % chi.conductor()) CHECK(chi.exponent(a) == 0);
    }
    CHECK_MESSAGE(primitive == oracle::primitive_count(q), "q = " << q);
  }
}

TEST_CASE("multiplicativity, conjugation and orthogonality") {
  for (std::int64_t q = 2; q <= 20; ++q) {
    const auto& all = characters(q);
    for (const auto& chi : all) {
      CHECK(chi.conj().conj() == chi);
      for (std::int64_t a = 1; a <= q; ++a) {
        CHECK(chi.conj().value(a) == chi.value(a).conj());
        for (std::int64_t b = 1; b <= q; ++b) CHECK(chi.value(a * b) == chi.value(a) * chi.value(b));
      }
    }
    // sum over characters of chi(a) is phi(q) at a = 1 and 0 elsewhere.
    for (std::int64_t a = 1; a <= q; ++a) {
      Cyclotomic s;
      for (const auto& chi : all) s += chi.value(a);
      CHECK(s == Cyclotomic(Rational(a % q == 1 % q ? totient(q) : 0)));
    }
  }
}

TEST_CASE("Gauss sums") {
  for (std::int64_t q = 1; q <= 24; ++q)
    for (const auto& chi : characters(q)) {
      if (!chi.is_primitive()) continue;
      const Cyclotomic tau = gauss_sum(chi);
      CHECK(tau * tau.conj() == Cyclotomic(Rational(q)));
      const auto numeric = oracle::gauss_sum(normalized(chi), totient(q));
      const BigComplex exact = tau.embed_bits(64);
      CHECK(std::abs(numeric - std::complex<double>(exact.re.to_double(), exact.im.to_double())) < 1e-9);
      // tau(chi) tau(conj chi) = chi(-1) q.
      CHECK(tau * gauss_sum(chi.conj()) == Cyclotomic(Rational(chi.is_even() ? q : -q)));
    }
  CHECK(gauss_sum(character(4, 1)) == Cyclotomic(Rational(2)) * Cyclotomic::root_of_unity(4));
}

TEST_CASE("L at negative integers against generalized Bernoulli numbers") {
  for (std::int64_t q = 2; q <= 15; ++q)
    for (const auto& chi : characters(q)) {
      if (chi.is_principal()) continue;
      for (unsigned m = 0; m <= 6; ++m) CHECK_MESSAGE(l_neg(m, chi) == generalized_bernoulli_value(m, chi), chi.name());
    }
  const auto& chi4 = character(4, 1);
  CHECK(l_neg(0, chi4) == Cyclotomic(Rational(1, 2)));
  CHECK(l_neg(1, chi4).is_zero());
  CHECK(l_neg(2, chi4) == Cyclotomic(Rational(-1, 2)));
}

TEST_CASE("parity vanishing") {
  for (std::int64_t q = 3; q <= 12; ++q)
    for (const auto& chi : characters(q)) {
      if (!chi.is_primitive() || chi.is_principal()) continue;
      for (unsigned m = 1; m <= 5; ++m) CHECK(l_neg(chi.is_even() ? 2 * m : 2 * m - 1, chi).is_zero());
    }
}

TEST_CASE("character shift residual vanishes") {
  for (std::int64_t q = 2; q <= 12; ++q)
    for (const auto& chi : characters(q)) {
      if (chi.is_principal()) {
        CHECK_THROWS_AS(character_shift_residual(1, chi), UnsupportedCharacter);
        continue;
      }
      for (unsigned m = 1; m <= 8; ++m) CHECK(character_shift_residual(m, chi).is_zero());
    }
}

TEST_CASE("closed forms") {
  const auto& chi4 = character(4, 1);
  CHECK(l_value_closed(3, chi4).to_string() == "(1/32) * pi^3");
  CHECK(l_value_closed(1, chi4).to_string() == "(1/4) * pi");
  CHECK(l_value_closed(5, chi4).to_string() == "(5/1536) * pi^5");
  // 4/(25 sqrt 5), with sqrt 5 = 1 + 2(z + z^4).
  const Cyclotomic z = Cyclotomic::root_of_unity(5);
  const Cyclotomic sqrt5 = Cyclotomic(Rational(1)) + Cyclotomic(Rational(2)) * (z + z.conj());
  CHECK(l_value_closed(2, character(5, 2)).coeff() == Cyclotomic(Rational(4, 125)) * sqrt5);
  // Quadratic characters give real rational multiples of sqrt(q) times powers of pi.
  const Cyclotomic c8 = l_value_closed(2, character(8, 1)).coeff();
  CHECK((c8 * c8).is_rational());
  CHECK(l1_odd_exact(character(3, 1)).coeff() * l1_odd_exact(character(3, 1)).coeff() ==
        Cyclotomic(Rational(1, 27)));
}

TEST_CASE("closed-form preconditions") {
  CHECK_THROWS_AS(l_value_closed(2, character(4, 1)), ParityObstruction);
  CHECK_THROWS_AS(l_value_closed(3, character(5, 2)), ParityObstruction);
  CHECK_THROWS_AS(l_value_closed(1, character(5, 2)), ParityObstruction);
  CHECK_THROWS_AS(l_value_closed(2, character(12, 1)), NotPrimitive);
  CHECK_THROWS_AS(l1_odd_exact(character(5, 2)), NotOdd);
  CHECK_THROWS_AS(l1_even_numeric(character(4, 1), Precision::of(20)), NotEven);
  CHECK_THROWS_AS(l1_even_numeric(character(5, 0), Precision::of(20)), NotPrimitive);
  CHECK_THROWS_AS(l_series_numeric(BigComplex(BigFloat(2L, 64)), character(5, 0), 2, Precision::of(20)),
                  UnsupportedCharacter);
  try {
    (void)l_value_closed(2, character(4, 1));
  } catch (const ParityObstruction& e) {
    CHECK(std::string(e.what()).rfind("parity obstruction: no closed form; use numeric route", 0) == 0);
  }
}

TEST_CASE("L(1) for odd characters carries the factor i") {
  const auto& chi4 = character(4, 1);
  CHECK(l1_odd_exact(chi4) == SpecialValue(Cyclotomic(Rational(1, 4)), 1));
  CHECK(l1_odd_exact(chi4, true).coeff() == Cyclotomic(Rational(-1, 4)) * Cyclotomic::root_of_unity(4));
}

TEST_CASE("numeric L-values") {
  const Precision prec = Precision::of(30);
  const mpfr_prec_t bits = prec.bits();
  const BigComplex catalan = l_series_numeric(BigComplex(BigFloat(2L, bits)), character(4, 1), 2, prec);
  CHECK(abs(catalan.re - BigFloat(oracle::kCatalan, bits)) < BigFloat::pow10(-30, bits));
  // The Hurwitz route and the shifted series agree away from s = 1, for complex characters too.
  for (const auto& chi : characters(7)) {
    if (chi.is_principal()) continue;
    const BigComplex s(BigFloat(Rational(-3, 2), bits), BigFloat(Rational(1, 3), bits));
    CHECK(abs(l_numeric(s, chi, prec) - l_series_numeric(s, chi, 2, prec)) < BigFloat::pow10(-28, bits));
  }
}
