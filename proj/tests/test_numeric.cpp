#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/hurwitz.hpp"
#include "zetaval/numeric.hpp"
#include "zetaval/suites.hpp"
#include "zetaval/verify.hpp"

using namespace zetaval;

namespace {

const Precision kPrec = Precision::of(50);
const mpfr_prec_t kBits = kPrec.bits();

BigComplex rc(long num, long den = 1) { return BigComplex(BigFloat(Rational(num, den), kBits)); }
BigFloat tol(long digits) { return BigFloat::pow10(-digits, kBits); }

} // namespace

TEST_CASE("Riemann zeta at classical points") {
  CHECK(abs(zeta_numeric(rc(3), kPrec).re - BigFloat(oracle::kZeta3, kBits)) < tol(39));
  const BigFloat pi = BigFloat::pi(kBits);
  CHECK(abs(zeta_numeric(rc(2), kPrec) - BigComplex(pi * pi / 6L)) < tol(48));
  CHECK(abs(zeta_numeric(rc(-1), kPrec) - rc(-1, 12)) < tol(48));
  CHECK(abs(zeta_numeric(rc(0), kPrec) - rc(-1, 2)) < tol(48));
  // First nontrivial zero: |zeta(1/2 + 14.1347251417346937904572519836 i)| is tiny.
  const BigComplex rho(BigFloat(Rational(1, 2), kBits), BigFloat("14.134725141734693790457251983562470270784", kBits));
  CHECK(abs(zeta_numeric(rho, kPrec)) < tol(38));
}

TEST_CASE("Hurwitz zeta, numeric routes") {
  for (const Rational& s : {Rational(-5, 2), Rational(-1), Rational(-3, 10)})
    for (const Rational& a : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      const BigComplex sc(BigFloat(s, kBits));
      const BigComplex em = hurwitz_numeric(sc, BigFloat(a, kBits), kPrec);
      CHECK(abs(em - shifted_power_series(sc, BigComplex(BigFloat(a, kBits)), 2, kPrec)) < tol(40));
      CHECK(abs(em.re - hurwitz_formula_eval(BigFloat(s, kBits), BigFloat(a, kBits), kPrec)) < tol(40));
    }
  // zeta(s, 1/2) = (2^s - 1) zeta(s) off the real axis.
  const BigComplex s(BigFloat(Rational(3, 7), kBits), BigFloat(5L, kBits));
  const BigComplex lhs = hurwitz_numeric(s, BigFloat(Rational(1, 2), kBits), kPrec);
  const BigComplex rhs = (pow(BigFloat(2L, kBits), s) - BigFloat(1L, kBits)) * zeta_numeric(s, kPrec);
  CHECK(abs(lhs - rhs) < tol(45));
}

TEST_CASE("shifted power series preconditions and termination") {
  CHECK_THROWS_AS(shifted_power_series(rc(2), rc(5, 2), 2, kPrec), RadiusViolation);
  // At s = -m the series terminates on the exact polynomial value.
  for (unsigned m = 0; m <= 4; ++m) {
    const BigComplex v = shifted_power_series(rc(-static_cast<long>(m)), rc(1, 3), 1, kPrec);
    CHECK(abs(v - BigComplex(BigFloat(hurwitz_value(m, Rational(1, 3)), kBits))) < tol(45));
  }
}

TEST_CASE("trigonometric series phase") {
  const BigFloat s(-2L, kBits), a(Rational(1, 4), kBits);
  CHECK(abs(hurwitz_formula_eval(s, a, kPrec) + BigFloat(Rational(1, 64), kBits)) < tol(45));
  CHECK(abs(hurwitz_formula_eval(s, a, kPrec, FormulaPhase::HalfNPrinted) + BigFloat(Rational(1, 64), kBits)) >
        tol(5));
}

TEST_CASE("Gamma") {
  CHECK(abs(gamma_numeric(rc(5), kPrec) - rc(24)) < tol(45));
  const BigComplex half = gamma_numeric(rc(1, 2), kPrec);
  CHECK(abs(half * half - BigComplex(BigFloat::pi(kBits))) < tol(45));
  const BigComplex g = gamma_numeric(BigComplex(BigFloat(1L, kBits), BigFloat(1L, kBits)), kPrec);
  CHECK(abs(g - BigComplex(BigFloat("0.49801566811835604271369111746219809195296", kBits),
                           BigFloat("-0.1549498283018106851249551304838866051958797", kBits))) < tol(38));
  // Recurrence Gamma(z + 1) = z Gamma(z) at a point that needs reflection.
  const BigComplex z(BigFloat(Rational(-7, 3), kBits), BigFloat(Rational(1, 5), kBits));
  CHECK(abs(gamma_numeric(z + BigFloat(1L, kBits), kPrec) - z * gamma_numeric(z, kPrec)) < tol(44));
}

TEST_CASE("Cauchy derivative") {
  auto cube = [](const BigComplex& w) { return w * w * w; };
  const BigComplex d = cauchy_derivative(cube, rc(2), BigFloat(Rational(1, 4), kBits), 8);
  CHECK(abs(d - rc(12)) < tol(50));
}

TEST_CASE("Bernoulli reference table") {
  for (unsigned n = 0; n <= 40; ++n) CHECK(bernoulli_reference(n) == oracle::bernoulli_plus(n));
}

TEST_CASE("functional equation residuals") {
  for (const BigComplex& s : {rc(-1, 2), rc(5, 2), rc(2), rc(-3)}) CHECK(functional_eq_residual(s, kPrec).pass);
  CHECK_THROWS_AS(functional_eq_residual(rc(1), kPrec), PoleAtOne);
  for (std::size_t i : {1u, 2u, 3u}) CHECK(l_functional_residual(rc(-3, 4), character(5, i), kPrec).pass);
  CHECK(l_functional_residual(rc(2), character(3, 1), kPrec).pass);
}

TEST_CASE("derivative chains") {
  const Residual z3 = derivative_chain_residual(ChainKind::Zeta, 1, nullptr, kPrec);
  CHECK(z3.pass);
  CHECK(z3.value < tol(20));
  const Residual cat = derivative_chain_residual(ChainKind::LOdd, 1, &character(4, 1), kPrec);
  CHECK(cat.pass);
  CHECK(cat.value < tol(20));
  CHECK_THROWS_AS(derivative_chain_residual(ChainKind::LOdd, 1, &character(5, 2), kPrec), NotOdd);
}

TEST_CASE("class sums and L(1) cross-check") {
  CHECK(class_sum_residual(ClassSumVariant::SineOdd, 1, 4, kPrec).pass);
  CHECK(class_sum_residual(ClassSumVariant::CosineEven, 2, 5, kPrec).pass);
  for (std::int64_t q : {5, 8, 12}) {
    const auto& all = characters(q);
    for (const auto& chi : all)
      if (chi.is_primitive() && !chi.is_principal()) CHECK(l1_cross_check(chi, kPrec).pass);
  }
}

TEST_CASE("rational scan") {
  const RationalScan hit =
      scan_rationals(BigFloat(Rational(22, 7), kBits), Integer(1000), BigFloat::pow10(-40, kBits));
  CHECK(hit.found);
  CHECK(hit.nearest == Rational(22, 7));
  const RationalScan miss = scan_rationals(BigFloat::pi(kBits), Integer(1000), BigFloat::pow10(-40, kBits));
  CHECK_FALSE(miss.found);
  CHECK(miss.nearest == Rational(355, 113));
  const ConjectureReport r = conjecture_probe(1, kPrec, Integer(100000));
  CHECK_FALSE(r.odd_zeta.found);
  CHECK(r.control_hit);
  CHECK(r.control.nearest == Rational(1, 32));
  CHECK(r.summary().find("no rational found") != std::string::npos);
}

TEST_CASE("suites are deterministic and sorted") {
  const auto a = run_suite("lerch-multi", kPrec), b = run_suite("lerch-multi", kPrec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].detail == b[i].detail);
    if (i > 0) CHECK(a[i - 1].id < a[i].id);
  }
  CHECK_THROWS_AS(run_suite("nope", kPrec), DomainError);
}
