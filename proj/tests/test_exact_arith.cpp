#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zetaval/bigfloat.hpp"
#include "zetaval/cyclotomic.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/number_theory.hpp"
#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"

using namespace zetaval;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  return Rational(num(rng), den(rng));
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng, std::int64_t q) {
  std::vector<Rational> raw(static_cast<std::size_t>(q));
  for (auto& c : raw) c = random_rational(rng);
  return Cyclotomic::from_powers(q, raw);
}

} // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(10, 5).is_integer());
  CHECK(Rational::parse(" -12/18 ") == Rational(-2, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  for (const char* bad : {"", "1/", "/2", "1/-2", "a/b", "1.5", "1//2"}) CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(0).pow(-1), DivisionByZero);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.to_string()) == a);
  }
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("small number theory") {
  CHECK(totient(1) == 1);
  CHECK(totient(24) == 8);
  CHECK(gcd(-12, 18) == 6);
  CHECK(lcm(4, 6) == 12);
  CHECK(mod(-7, 5) == 3);
  CHECK(pow_mod(3, 200, 7) == 2);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(2, 8) == 0);
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("polynomials") {
  const RationalPolynomial p(std::vector<Rational>{Rational(1), Rational(-3), Rational(0), Rational(2)});
  CHECK(p.degree() == 3);
  CHECK(to_string(p) == "2*a^3 - 3*a + 1");
  CHECK(p.evaluate(Rational(1, 2), Rational(0)) == Rational(-1, 4));
  CHECK(RationalPolynomial(std::vector<Rational>{Rational(0), Rational(0)}).is_zero());
  CHECK(to_string(RationalPolynomial()) == "0");
  // Shift composes: p(x + 1)(x - 1) = p(x).
  CHECK(p.shifted(Rational(1)).shifted(Rational(-1)) == p);
  CHECK(linear_power(Rational(1), 3) ==
        RationalPolynomial(std::vector<Rational>{Rational(1), Rational(3), Rational(3), Rational(1)}));
  const auto [quo, rem] = divmod(p, linear_power(Rational(-1), 1));
  CHECK(quo * linear_power(Rational(-1), 1) + rem == p);
  CHECK(rem.degree() <= 0);
  CHECK_THROWS_AS(divmod(p, RationalPolynomial()), DivisionByZero);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  bool has_two = false;
  for (const auto& c : cyclotomic_polynomial(105)) has_two = has_two || abs(c) == 2;
  CHECK(has_two);
  for (std::int64_t q = 1; q <= 40; ++q)
    CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(q).size()) - 1 == totient(q));
}

TEST_CASE("cyclotomic field arithmetic") {
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  CHECK(i * i == Cyclotomic(Rational(-1)));
  CHECK(i.to_string() == "[q=4] z");
  CHECK(Cyclotomic::zero(5).to_string() == "[q=5] 0");
  const Cyclotomic w = Cyclotomic::root_of_unity(3);
  CHECK(w * w * w == Cyclotomic(Rational(1)));
  CHECK(Cyclotomic(Rational(1)) + w + w * w == Cyclotomic(Rational(0)));
  // sqrt(-3) = 2w + 1 and sqrt(5) from the golden ratio.
  const Cyclotomic s3 = Cyclotomic(Rational(2)) * w + Cyclotomic(Rational(1));
  CHECK(s3 * s3 == Cyclotomic(Rational(-3)));
  const Cyclotomic z5 = Cyclotomic::root_of_unity(5);
  const Cyclotomic s5 = Cyclotomic(Rational(1)) + Cyclotomic(Rational(2)) * (z5 + z5.conj());
  CHECK(s5 * s5 == Cyclotomic(Rational(5)));
  // Mixed moduli lift to the lcm.
  CHECK((i * w).modulus() == 12);
  CHECK((i * w).simplified().modulus() == 12);
  CHECK((i * i.conj()).simplified().modulus() == 1);
  CHECK(Cyclotomic::root_of_unity(12, 3) == i);
  CHECK_THROWS_AS(i.lift(6), IncompatibleModuli);
  CHECK_THROWS_AS(Cyclotomic::zero(7).inv(), DivisionByZero);
  CHECK_THROWS_AS(w.rational_value(), DomainError);
}

TEST_CASE("cyclotomic inverse, conjugation and Galois action on random elements") {
  std::mt19937_64 rng(11);
  for (std::int64_t q : {3, 4, 5, 7, 8, 9, 12, 15, 20}) {
    for (int t = 0; t < 5; ++t) {
      const Cyclotomic x = random_cyclotomic(rng, q), y = random_cyclotomic(rng, q);
      if (x.is_zero()) continue;
      CHECK(x * x.inv() == Cyclotomic::one(q));
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(x.conj().conj() == x);
      for (std::int64_t k = 1; k < q; ++k) {
        if (gcd(k, q) != 1) continue;
        CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
      }
      CHECK(x.galois(q - 1) == x.conj());
      // The norm x conj(x) embeds as a non-negative real.
      const BigComplex n = (x * x.conj()).embed_bits(128);
      CHECK(abs(n.im).to_double() < 1e-30);
      CHECK(n.re.sign() > 0);
      // Embedding is a ring homomorphism.
      const BigComplex lhs = (x * y).embed_bits(160), rhs = x.embed_bits(160) * y.embed_bits(160);
      CHECK(abs(lhs - rhs).to_double() < 1e-35 * (1 + abs(lhs).to_double()));
    }
  }
}

TEST_CASE("bigfloat basics") {
  const mpfr_prec_t bits = Precision::of(50).bits();
  CHECK(Precision::of(50).bits() >= digits_to_bits(60));
  CHECK_THROWS_AS(Precision::of(5), DomainError);
  const BigFloat pi = BigFloat::pi(bits);
  CHECK(pi.to_string(20).rfind("3.141592653589793238", 0) == 0);
  CHECK(abs(sin(pi)) < BigFloat::pow10(-55, bits));
  CHECK(BigFloat(Rational(1, 4), bits) == BigFloat("0.25", bits));
  CHECK(abs(exp(log(BigFloat(7L, bits))) - BigFloat(7L, bits)) < BigFloat::pow10(-55, bits));
  const BigComplex i = BigComplex::i(bits);
  CHECK(abs(exp(i * pi) + BigFloat(1L, bits)) < BigFloat::pow10(-55, bits));
  CHECK(abs(pow(BigComplex(BigFloat(-8L, bits)), BigComplex(BigFloat(Rational(1, 3), bits))) -
            BigComplex(BigFloat(1L, bits), sqrt(BigFloat(3L, bits)))) < BigFloat::pow10(-55, bits));
}
