#include "zetaval/verify.hpp"

#include <functional>

#include "zetaval/errors.hpp"
#include "zetaval/hurwitz.hpp"
#include "zetaval/numeric.hpp"

namespace zetaval {

namespace {

BigFloat pow10(int exponent, mpfr_prec_t bits) { return BigFloat::pow10(exponent, bits); }

BigComplex real(long x, mpfr_prec_t bits) { return BigComplex(BigFloat(x, bits)); }

// (1/n) sum_k f(c + r w^k): equals f(c) for f analytic on the closed disc, and
// so evaluates expressions whose singularity at c is removable.
BigComplex circle_mean(const std::function<BigComplex(const BigComplex&)>& f, const BigComplex& center,
                       const BigFloat& radius, int nodes) {
  const mpfr_prec_t bits = center.bits();
  BigComplex acc(bits);
  for (int k = 0; k < nodes; ++k) acc += f(center + BigComplex::unit_root(k, nodes, bits) * radius);
  return acc * (BigFloat(1L, bits) / BigFloat(static_cast<long>(nodes), bits));
}

bool is_integer_at_least(const BigComplex& s, long bound) {
  return s.im.is_zero() && s.re.is_integer() && s.re >= bound;
}

int node_count(const Precision& prec) { return prec.digits + Precision::kGuardDigits; }

// Radius 1/4 with the nearest singularity at distance >= 1: error ~ 4^{-nodes}.
int circle_nodes(const Precision& prec) { return 2 * (prec.digits + Precision::kGuardDigits) + 10; }

void require_primitive_nonprincipal(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw UnsupportedCharacter("this identity needs a nonprincipal character");
  if (!chi.is_primitive()) throw NotPrimitive("character " + chi.name() + " is not primitive");
}

BigComplex at_bits(const BigComplex& z, mpfr_prec_t bits) { return {z.re.with_bits(bits), z.im.with_bits(bits)}; }

} // namespace

Residual make_residual(BigFloat value, BigFloat bound) {
  Residual r{std::move(value), std::move(bound), false};
  r.pass = r.value <= r.bound;
  return r;
}

Residual functional_eq_residual(const BigComplex& s_in, const Precision& prec) {
  if (s_in.im.is_zero() && s_in.re == 1L) throw PoleAtOne();
  const Precision inner{prec.digits + 5};
  const mpfr_prec_t bits = inner.bits();
  const BigComplex s = at_bits(s_in, bits);
  const BigFloat pi = BigFloat::pi(bits);
  auto rhs = [&](const BigComplex& w) {
    const BigComplex one_minus = real(1L, bits) - w;
    return pow(BigFloat(2L, bits), w) * pow(pi, w - BigFloat(1L, bits)) * gamma_numeric(one_minus, inner) *
           sin(w * pi * (BigFloat(1L, bits) / BigFloat(2L, bits))) * zeta_numeric(one_minus, inner);
  };
  // Integers s >= 0 meet a pole of Gamma(1-s) or of zeta(1-s) against a zero.
  const BigComplex right = is_integer_at_least(s, 0) ? circle_mean(rhs, s, BigFloat(0.25, bits), circle_nodes(inner))
                                                     : rhs(s);
  const BigComplex left = zeta_numeric(s, inner);
  return make_residual(abs(left - right).with_bits(prec.bits()), pow10(-(prec.digits - 12), prec.bits()));
}

Residual l_functional_residual(const BigComplex& s_in, const DirichletCharacter& chi, const Precision& prec) {
  require_primitive_nonprincipal(chi);
  const Precision inner{prec.digits + 5};
  const mpfr_prec_t bits = inner.bits();
  const BigComplex s = at_bits(s_in, bits);
  const BigFloat pi = BigFloat::pi(bits);
  const BigFloat q(chi.modulus(), bits);
  const BigComplex tau = gauss_sum(chi).embed_bits(bits);
  const DirichletCharacter bar = chi.conj();
  const bool even = chi.is_even();
  auto rhs = [&](const BigComplex& w) {
    const BigComplex one_minus = real(1L, bits) - w;
    const BigComplex half_angle = w * pi * (BigFloat(1L, bits) / BigFloat(2L, bits));
    BigComplex v = pow(q, -w) * pow(BigFloat(2L, bits), w) * pow(pi, w - BigFloat(1L, bits)) *
                   gamma_numeric(one_minus, inner) * tau * l_numeric(one_minus, bar, inner);
    if (even) return v * sin(half_angle);
    return v * cos(half_angle) * (-BigComplex::i(bits));
  };
  const BigComplex right = is_integer_at_least(s, 1) ? circle_mean(rhs, s, BigFloat(0.25, bits), circle_nodes(inner))
                                                     : rhs(s);
  const BigComplex left = l_numeric(s, chi, inner);
  return make_residual(abs(left - right).with_bits(prec.bits()), pow10(-(prec.digits - 12), prec.bits()));
}

Residual derivative_chain_residual(ChainKind kind, unsigned m, const DirichletCharacter* chi, const Precision& prec) {
  const Precision inner{prec.digits + 5};
  const mpfr_prec_t bits = inner.bits();
  const BigFloat pi = BigFloat::pi(bits);
  const BigFloat radius(0.25, bits);
  const int nodes = node_count(inner);
  auto sign = [](unsigned k) { return k % 2 == 0 ? 1L : -1L; };

  BigComplex left(bits), right(bits);
  if (kind == ChainKind::Zeta) {
    if (m == 0) throw DomainError("the odd-zeta chain needs m >= 1");
    left = zeta_numeric(real(static_cast<long>(2 * m + 1), bits), inner);
    const BigComplex deriv = cauchy_derivative([&](const BigComplex& w) { return zeta_numeric(w, inner); },
                                               real(-2L * m, bits), radius, nodes);
    const BigFloat c = BigFloat(sign(m), bits) * pow(BigFloat(2L, bits), 2L * m + 1) * pow(pi, 2L * m) /
                       BigFloat(Rational(factorial(2 * m)), bits);
    right = deriv * c;
  } else {
    if (chi == nullptr) throw DomainError("the L-function chains need a character");
    require_primitive_nonprincipal(*chi);
    const BigFloat q(chi->modulus(), bits);
    const DirichletCharacter bar = chi->conj();
    const BigComplex tau = gauss_sum(bar).embed_bits(bits);
    auto l_bar = [&](const BigComplex& w) { return l_numeric(w, bar, inner); };
    if (kind == ChainKind::LEven) {
      if (!chi->is_even()) throw NotEven("this chain needs an even character");
      left = l_numeric(real(static_cast<long>(2 * m + 1), bits), *chi, inner);
      const BigComplex deriv = cauchy_derivative(l_bar, real(-2L * m, bits), radius, nodes);
      const BigFloat c = BigFloat(sign(m), bits) * pow(BigFloat(2L, bits), 2L * m + 1) * pow(pi, 2L * m) *
                         pow(q, -2L * m) / BigFloat(Rational(factorial(2 * m)), bits);
      right = deriv * c / tau;
    } else {
      if (!chi->is_odd()) throw NotOdd("this chain needs an odd character");
      if (m == 0) throw DomainError("the odd-character chain needs m >= 1");
      left = l_numeric(real(static_cast<long>(2 * m), bits), *chi, inner);
      const BigComplex deriv = cauchy_derivative(l_bar, real(1L - 2L * m, bits), radius, nodes);
      const BigFloat c = BigFloat(sign(m + 1), bits) * pow(BigFloat(2L, bits), 2L * m) * pow(pi, 2L * m - 1) *
                         pow(q, 1L - 2L * m) / BigFloat(Rational(factorial(2 * m - 1)), bits);
      right = BigComplex::i(bits) * deriv * c / tau;
    }
  }
  return make_residual(abs(left - right).with_bits(prec.bits()), pow10(-(prec.digits / 2), prec.bits()));
}

Residual class_sum_residual(ClassSumVariant variant, unsigned m, std::int64_t q, const Precision& prec) {
  if (m == 0) throw DomainError("class_sum_residual needs m >= 1");
  if (q < 2) throw DomainError("class_sum_residual needs q >= 2");
  const Precision inner{prec.digits + 5};
  const mpfr_prec_t bits = inner.bits();
  const BigFloat pi = BigFloat::pi(bits);
  const BigFloat qf(q, bits);
  const long sign = m % 2 == 0 ? 1 : -1;
  auto class_sum = [&](std::int64_t r, long k) {
    return (pow(qf, -k) * hurwitz_numeric(real(k, bits), BigFloat(Rational(r, q), bits), inner).re);
  };

  Rational target;
  BigFloat series(0L, bits);
  if (variant == ClassSumVariant::SineOdd) {
    target = hurwitz_value(2 * m, Rational(1, q));
    const long k = 2L * m + 1;
    for (std::int64_t r = 1; 2 * r <= q - 1; ++r)
      series += sin(pi * 2L * r / q) * (class_sum(r, k) - class_sum(q - r, k));
    series *= BigFloat(sign, bits) * pow(BigFloat(2L, bits), -2L * m) * pow(pi, -2L * m - 1) *
              BigFloat(Rational(factorial(2 * m)), bits);
  } else {
    target = hurwitz_value(2 * m - 1, Rational(1, q));
    const long k = 2L * m;
    for (std::int64_t r = 1; r <= q; ++r) series += cos(pi * 2L * r / q) * class_sum(r, k);
    series *= BigFloat(sign, bits) * pow(BigFloat(2L, bits), 1L - 2L * m) * pow(pi, -2L * m) *
              BigFloat(Rational(factorial(2 * m - 1)), bits);
  }
  return make_residual(abs(series - BigFloat(target, bits)).with_bits(prec.bits()),
                       pow10(-(prec.digits - 8), prec.bits()));
}

Residual l1_cross_check(const DirichletCharacter& chi, const Precision& prec) {
  if (chi.is_principal()) throw NotPrimitive("the principal character has a pole at s = 1");
  if (!chi.is_primitive()) throw NotPrimitive("character " + chi.name() + " is not primitive");
  const Precision inner{prec.digits + 5};
  const mpfr_prec_t bits = inner.bits();
  const BigComplex closed =
      chi.is_even() ? l1_even_numeric(chi, inner) : l1_odd_exact(chi).embed(inner);
  const BigComplex series = l_series_numeric(real(1L, bits), chi, 2, inner);
  return make_residual(abs(closed - series).with_bits(prec.bits()), pow10(-(prec.digits - 10), prec.bits()));
}

RationalScan scan_rationals(const BigFloat& x, const Integer& bound, const BigFloat& tolerance) {
  const mpfr_prec_t bits = x.bits();
  RationalScan scan{x, Rational(0), abs(x), false};
  // Convergents h_k/k_k from h_k = a_k h_{k-1} + h_{k-2}.
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  BigFloat rest = x;
  for (int step = 0; step < 2000; ++step) {
    const BigFloat a_float = floor(rest);
    Integer a_int;
    mpfr_get_z(a_int.get_mpz_t(), a_float.get(), MPFR_RNDN);
    const Integer h = a_int * h_prev + h_prev2;
    const Integer k = a_int * k_prev + k_prev2;
    if (k > bound) break;
    const Rational convergent(h, k);
    const BigFloat distance = abs(x - BigFloat(convergent, bits));
    if (distance < scan.distance || step == 0) {
      scan.nearest = convergent;
      scan.distance = distance;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const BigFloat frac = rest - a_float;
    if (frac.is_zero() || distance.is_zero()) break;
    rest = BigFloat(1L, bits) / frac;
  }
  scan.found = scan.distance <= tolerance;
  return scan;
}

std::string ConjectureReport::summary() const {
  std::string s = "m=" + std::to_string(m) + ": zeta(" + std::to_string(2 * m + 1) + ")/pi^" +
                  std::to_string(2 * m + 1) + " = " + odd_zeta.ratio.to_string(30) + "; ";
  if (odd_zeta.found)
    s += "rational " + odd_zeta.nearest.to_string() + " within tolerance";
  else
    s += "no rational found with denominator <= " + denominator_bound.get_str() + " (nearest " +
         odd_zeta.nearest.to_string() + ", distance " + odd_zeta.distance.to_string(3) + ")";
  s += "; control L(3,chi_4)/pi^3 -> " + control.nearest.to_string() + (control_hit ? " (hit)" : " (MISSED)");
  return s;
}

ConjectureReport conjecture_probe(unsigned m, const Precision& prec, const Integer& denominator_bound) {
  if (m == 0) throw DomainError("conjecture_probe needs m >= 1");
  const Precision inner{prec.digits + 5};
  const mpfr_prec_t bits = inner.bits();
  const BigFloat pi = BigFloat::pi(bits);
  ConjectureReport report;
  report.m = m;
  report.denominator_bound = denominator_bound;
  report.tolerance = pow10(-(prec.digits - 10), bits);

  const BigFloat zeta_odd = zeta_numeric(real(static_cast<long>(2 * m + 1), bits), inner).re;
  report.odd_zeta = scan_rationals(zeta_odd / pow(pi, 2L * m + 1), denominator_bound, report.tolerance);

  const BigFloat l3 = l_numeric(real(3L, bits), character(4, 1), inner).re;
  report.control = scan_rationals(l3 / pow(pi, 3L), denominator_bound, report.tolerance);
  report.control_exact = chi4_odd_L(1).coeff().rational_value();
  report.control_hit = report.control.found && report.control.nearest == report.control_exact;
  return report;
}

} // namespace zetaval
