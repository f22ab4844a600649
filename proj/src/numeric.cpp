#include "zetaval/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "zetaval/errors.hpp"

namespace zetaval {

namespace {

constexpr double kLn10 = 2.302585092994046;

// Bernoulli numbers for the numeric layer, B_1 = +1/2 convention, generated by
// the Akiyama-Tanigawa transform. Deliberately independent of the exact core.
class BernoulliTable {
public:
  Rational get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      row_.emplace_back(1L, static_cast<long>(m + 1));
      for (std::size_t j = m; j >= 1; --j) row_[j - 1] = Rational(static_cast<long>(j)) * (row_[j - 1] - row_[j]);
      values_.push_back(row_[0]);
    }
    return values_[n];
  }

private:
  std::shared_mutex mutex_;
  std::vector<Rational> row_;
  std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

int target_digits(const Precision& prec) { return prec.digits + Precision::kGuardDigits; }

BigFloat tolerance(int digits, mpfr_prec_t bits) { return BigFloat::pow10(-digits, bits); }

BigComplex at_bits(const BigComplex& z, mpfr_prec_t bits) { return {z.re.with_bits(bits), z.im.with_bits(bits)}; }

BigComplex round_to(const BigComplex& z, const Precision& prec) { return at_bits(z, prec.bits()); }

bool is_one(const BigComplex& s) { return s.im.is_zero() && s.re == 1L; }

// One Euler-Maclaurin pass with cutoff n_cut. Returns false if the correction
// terms started growing before reaching the tolerance.
bool hurwitz_em(const BigComplex& s_in, const BigFloat& alpha_in, long n_cut, int digits, mpfr_prec_t bits,
                BigComplex& out) {
  const BigComplex s = at_bits(s_in, bits);
  const BigFloat a = alpha_in.with_bits(bits);
  const BigComplex minus_s = -s;

  BigComplex sum(bits);
  for (long n = 0; n < n_cut; ++n) sum += pow(a + n, minus_s);

  const BigFloat x = a + n_cut;
  const BigComplex xs = pow(x, minus_s);
  sum += xs * x / (s - BigFloat(1L, bits));
  sum += xs * BigFloat(0.5, bits);

  // Relative to the leading term a^{-s}, which dominates when Re s is large.
  BigFloat thr = tolerance(digits, bits);
  const BigFloat lead = abs(pow(a, minus_s));
  if (lead < 1L) thr *= lead;
  const BigFloat x2 = x * x;
  BigComplex poch = s;           // (s)_{2k-1}
  BigComplex xpow = xs * (BigFloat(1L, bits) / x); // x^{-s-2k+1}
  BigFloat prev(0L, bits);
  for (unsigned k = 1; k < 2000; ++k) {
    if (poch.re.is_zero() && poch.im.is_zero()) break;
    const BigComplex term = poch * xpow * bernoulli_over_factorial(2 * k, bits);
    const BigFloat mag = abs(term);
    sum += term;
    if (mag < thr) {
      out = sum;
      return true;
    }
    if (k > 2 && mag > prev) return false;
    prev = mag;
    poch *= (s + BigFloat(static_cast<long>(2 * k - 1), bits)) * (s + BigFloat(static_cast<long>(2 * k), bits));
    xpow *= BigFloat(1L, bits) / x2;
  }
  out = sum;
  return true;
}

} // namespace

Rational bernoulli_reference(unsigned n) { return bernoulli_table().get(n); }

BigFloat bernoulli_over_factorial(unsigned two_k, mpfr_prec_t bits) {
  return BigFloat(bernoulli_table().get(two_k) / Rational(factorial(two_k)), bits);
}

bool is_integer_at_most(const BigComplex& z, long bound) {
  return z.im.is_zero() && z.re.is_integer() && z.re <= bound;
}

BigComplex hurwitz_numeric(const BigComplex& s, const BigFloat& alpha, const Precision& prec) {
  if (is_one(s)) throw PoleAtOne();
  if (alpha.sign() <= 0) throw DomainError("hurwitz_numeric needs alpha > 0");
  const int digits = target_digits(prec);
  const double sigma = s.re.to_double();
  const double height = std::fabs(s.im.to_double());
  long n_cut = static_cast<long>(std::ceil(digits / 2.0)) + 10 +
               static_cast<long>(std::ceil(std::max({height, -sigma, 0.0})));
  for (int attempt = 0; attempt < 6; ++attempt, n_cut *= 2) {
    const double spread = std::max(0.0, 1.0 - sigma) * std::log10(n_cut + alpha.to_double() + 1.0);
    const mpfr_prec_t bits = prec.bits(static_cast<int>(std::ceil(spread)) + 5);
    BigComplex out(bits);
    if (hurwitz_em(s, alpha, n_cut, digits, bits, out)) return round_to(out, prec);
  }
  throw InternalError("Euler-Maclaurin failed to converge");
}

BigComplex zeta_numeric(const BigComplex& s, const Precision& prec) {
  return hurwitz_numeric(s, BigFloat(1L, prec.bits()), prec);
}

BigComplex gamma_numeric(const BigComplex& z_in, const Precision& prec) {
  const int digits = target_digits(prec);
  const mpfr_prec_t bits = prec.bits(8);
  const BigComplex z = at_bits(z_in, bits);
  if (z.im.is_zero()) {
    if (z.re.is_integer() && z.re <= 0L) throw DomainError("Gamma has a pole at non-positive integers");
    return round_to(BigComplex(gamma(z.re)), prec);
  }
  const BigFloat pi = BigFloat::pi(bits);
  if (z.re < BigFloat(0.5, bits)) {
    const BigComplex one_minus = BigComplex(BigFloat(1L, bits), BigFloat(0L, bits)) - z;
    const BigComplex g = gamma_numeric(one_minus, Precision{prec.digits + 8});
    return round_to(BigComplex(pi) / (sin(z * pi) * g), prec);
  }
  const long shift = std::max(0L, static_cast<long>(std::ceil(0.6 * digits + 10 - z.re.to_double())));
  BigComplex w = z + BigFloat(shift, bits);
  BigComplex lg = (w - BigFloat(0.5, bits)) * log(w) - w + BigFloat(0.5, bits) * log(pi * 2L);
  const BigComplex w2 = w * w;
  BigComplex wpow = w;
  const BigFloat thr = tolerance(digits + 3, bits);
  for (unsigned k = 1; k < 1000; ++k) {
    const Rational b = bernoulli_table().get(2 * k) / Rational(static_cast<long>(2 * k * (2 * k - 1)));
    const BigComplex term = BigComplex(BigFloat(b, bits)) / wpow;
    lg += term;
    if (abs(term) < thr) break;
    wpow *= w2;
  }
  BigComplex prod(BigFloat(1L, bits), BigFloat(0L, bits));
  for (long j = 0; j < shift; ++j) prod *= z + BigFloat(j, bits);
  return round_to(exp(lg) / prod, prec);
}

BigComplex zeta_tail(const BigComplex& w, unsigned k, const Precision& prec) {
  // zeta(w, k) directly: subtracting partial sums from zeta(w) would lose all
  // relative accuracy once k^{-w} is tiny.
  return hurwitz_numeric(w, BigFloat(static_cast<long>(k), prec.bits()), prec);
}

BigComplex shifted_power_series(const BigComplex& s_in, const BigComplex& alpha_in, unsigned k, const Precision& prec) {
  if (k == 0) throw DomainError("shifted_power_series needs k >= 1");
  if (is_one(s_in)) throw PoleAtOne();
  const int digits = target_digits(prec);
  const mpfr_prec_t bits = prec.bits(5);
  const BigComplex s = at_bits(s_in, bits);
  const BigComplex alpha = at_bits(alpha_in, bits);
  if (!(abs(alpha) < BigFloat(static_cast<long>(k), bits)))
    throw RadiusViolation("shifted_power_series needs |alpha| < k");

  const Precision inner{prec.digits + 5};
  auto zeta_k = [&](const BigComplex& w) { return zeta_tail(w, k, inner); };

  BigComplex result(bits);
  for (unsigned n = 0; n < k; ++n) {
    const BigComplex base = alpha + BigFloat(static_cast<long>(n), bits);
    if (base.re.is_zero() && base.im.is_zero()) throw DomainError("alpha is a non-positive integer");
    result += pow(base, -s);
  }
  result += zeta_k(s);

  const bool nonpositive_int = is_integer_at_most(s, 0);
  const long m = nonpositive_int ? -s.re.to_long() : -1;
  const BigFloat thr = tolerance(digits + 3, bits);
  BigComplex coef(BigFloat(1L, bits), BigFloat(0L, bits)); // (-alpha)^n/n! (s)_n
  int small_run = 0;
  for (long n = 1; n < 20000; ++n) {
    const BigComplex step = -alpha * (BigFloat(1L, bits) / BigFloat(n, bits));
    if (nonpositive_int && n == m + 1) {
      // (s)_n contains the factor s+n-1 = 0 while zeta_k(s+n) has residue 1 at 1.
      result += coef * step;
      return round_to(result, prec);
    }
    coef *= step * (s + BigFloat(n - 1, bits));
    const BigComplex term = coef * zeta_k(s + BigFloat(n, bits));
    result += term;
    if (abs(term) < thr && (s.re + n) > 2L) {
      if (++small_run >= 3) return round_to(result, prec);
    } else {
      small_run = 0;
    }
  }
  throw InternalError("shifted_power_series did not converge");
}

BigFloat hurwitz_formula_eval(const BigFloat& s_in, const BigFloat& alpha_in, const Precision& prec,
                              FormulaPhase phase) {
  if (s_in.sign() >= 0) throw DomainError("Hurwitz's formula needs s < 0");
  if (alpha_in.sign() <= 0 || alpha_in > 1L) throw DomainError("Hurwitz's formula needs alpha in (0, 1]");
  const int digits = target_digits(prec);

  // z = e^{2 pi i beta}; the printed phase pi n/2 amounts to beta = alpha + 1/4.
  BigFloat beta = alpha_in.with_bits(prec.bits(10));
  if (phase == FormulaPhase::HalfNPrinted) beta += BigFloat(0.25, beta.bits());
  BigFloat frac = beta - floor(beta);
  const double dist = std::min(frac.to_double(), 1.0 - frac.to_double());
  const bool at_one = frac.is_zero();

  long n_cut = at_one ? static_cast<long>(std::ceil(digits / 2.0)) + 10
                      : static_cast<long>(std::ceil(digits * kLn10 / (2 * M_PI * dist))) + 10;
  if (n_cut > 2'000'000) throw DomainError("alpha too close to an integer for the trigonometric series");
  const mpfr_prec_t bits = prec.bits(8 + static_cast<int>(std::ceil(std::log10(static_cast<double>(n_cut)))));

  const BigFloat s = s_in.with_bits(bits);
  const BigFloat sm1 = s - 1L;
  const BigFloat pi = BigFloat::pi(bits);
  const BigFloat thr = tolerance(digits + 3, bits);
  const BigFloat big_n(n_cut, bits);

  BigComplex sum(bits);
  BigFloat tail_real(0L, bits);
  if (at_one) {
    BigFloat acc(0L, bits);
    for (long n = 1; n < n_cut; ++n) acc += pow(BigFloat(n, bits), sm1);
    // Euler-Maclaurin tail of sum_{n>=N} n^{s-1}.
    const BigFloat ns = pow(big_n, s);
    acc += -ns / s + ns / big_n / 2L;
    BigFloat deriv = sm1 * pow(big_n, s - 2L); // f'(N)
    for (unsigned k = 1; k < 2000; ++k) {
      const BigFloat term = bernoulli_over_factorial(2 * k, bits) * deriv;
      acc -= term;
      if (abs(term) < thr) break;
      deriv *= (s - static_cast<long>(2 * k)) * (s - static_cast<long>(2 * k + 1)) / (big_n * big_n);
    }
    sum = BigComplex(acc);
  } else {
    const BigComplex z = BigComplex::polar(pi * 2L * beta.with_bits(bits));
    BigComplex zn = z;
    for (long n = 1; n < n_cut; ++n) {
      sum += zn * pow(BigFloat(n, bits), sm1);
      zn *= z;
    }
    // zn == z^N. Tail: z^N sum_k a_k f^{(k)}(N), 1/(1 - z e^t) = sum_k a_k t^k.
    const BigComplex one(BigFloat(1L, bits), BigFloat(0L, bits));
    const BigComplex inv_g0 = one / (one - z);
    const BigComplex ratio = z * inv_g0;
    std::vector<BigComplex> a{inv_g0};
    std::vector<BigFloat> inv_fact{BigFloat(1L, bits)};
    BigFloat fk = pow(big_n, sm1);
    BigComplex tail = a[0] * fk;
    int small_run = 0;
    for (long k = 1; k < 8 * n_cut; ++k) {
      inv_fact.push_back(inv_fact.back() / BigFloat(k, bits));
      BigComplex ak(bits);
      for (long j = 1; j <= k; ++j) ak += a[static_cast<std::size_t>(k - j)] * inv_fact[static_cast<std::size_t>(j)];
      ak *= ratio;
      a.push_back(ak);
      fk *= (s - k) / big_n;
      const BigComplex term = ak * fk;
      tail += term;
      if (abs(term) < thr) {
        if (++small_run >= 2) break;
      } else {
        small_run = 0;
      }
    }
    sum += zn * tail;
  }

  const BigComplex phase_factor = phase == FormulaPhase::HalfS ? BigComplex::polar(pi * s / 2L)
                                                               : BigComplex(BigFloat(1L, bits));
  const BigFloat series = (phase_factor * sum).im;
  const BigFloat pre = pow(BigFloat(2L, bits), s) * pow(pi, sm1) * gamma(BigFloat(1L, bits) - s);
  return (pre * series).with_bits(prec.bits());
}

BigComplex cauchy_derivative(const std::function<BigComplex(const BigComplex&)>& f, const BigComplex& center,
                             const BigFloat& radius, int nodes) {
  const mpfr_prec_t bits = center.bits();
  BigComplex acc(bits);
  for (int k = 0; k < nodes; ++k) {
    const BigComplex w = BigComplex::unit_root(k, nodes, bits);
    acc += f(center + w * radius) * conj(w);
  }
  return acc * (BigFloat(1L, bits) / (radius * static_cast<long>(nodes)));
}

} // namespace zetaval
