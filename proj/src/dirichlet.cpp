#include "zetaval/dirichlet.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "zetaval/errors.hpp"
#include "zetaval/hurwitz.hpp"
#include "zetaval/number_theory.hpp"
#include "zetaval/numeric.hpp"

namespace zetaval {

namespace {

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t smallest_primitive_root(std::int64_t prime_power, std::int64_t phi) {
  for (std::int64_t g = 2; g < prime_power; ++g)
    if (mult_order(g, prime_power) == phi) return g;
  return 1; // prime_power == 2
}

// x = local (mod pp), x = 1 (mod q/pp).
std::int64_t crt_lift(std::int64_t local, std::int64_t pp, std::int64_t q) {
  const std::int64_t rest = q / pp;
  for (std::int64_t x = local; x < q; x += pp)
    if (mod(x, rest) == 1 % rest) return x;
  throw InternalError("CRT lift failed");
}

// Exponent vectors of every unit on the generator basis: index = residue.
std::vector<std::vector<std::int64_t>> discrete_logs(const UnitGroup& g) {
  const std::int64_t q = g.modulus;
  std::vector<std::vector<std::int64_t>> logs(static_cast<std::size_t>(q));
  const std::int64_t total = std::accumulate(g.orders.begin(), g.orders.end(), std::int64_t{1}, std::multiplies<>());
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> tuple(g.orders.size());
    std::int64_t rest = idx;
    for (std::size_t i = tuple.size(); i-- > 0;) {
      tuple[i] = rest % g.orders[i];
      rest /= g.orders[i];
    }
    std::int64_t x = 1 % q;
    for (std::size_t i = 0; i < tuple.size(); ++i) x = mod(x * pow_mod(g.generators[i], tuple[i], q), q);
    logs[static_cast<std::size_t>(x)] = std::move(tuple);
  }
  return logs;
}

Rational pow_q(std::int64_t q, long e) { return Rational(q).pow(e); }

BigFloat tolerance_digits(int digits, mpfr_prec_t bits) { return BigFloat::pow10(-digits, bits); }

void require_primitive(const DirichletCharacter& chi) {
  if (!chi.is_primitive())
    throw NotPrimitive("character " + chi.name() + " is not primitive (conductor " +
                       std::to_string(chi.conductor()) + ")");
}

} // namespace

UnitGroup unit_group(std::int64_t q) {
  if (q < 1) throw DomainError("modulus must be positive");
  UnitGroup g;
  g.modulus = q;
  for (const auto& [p, k] : factorize(q)) {
    const std::int64_t pp = int_pow(p, k);
    if (p == 2) {
      if (k >= 2) {
        g.generators.push_back(crt_lift(pp - 1, pp, q));
        g.orders.push_back(2);
      }
      if (k >= 3) {
        g.generators.push_back(crt_lift(5, pp, q));
        g.orders.push_back(pp / 4);
      }
    } else {
      const std::int64_t phi = pp / p * (p - 1);
      g.generators.push_back(crt_lift(smallest_primitive_root(pp, phi), pp, q));
      g.orders.push_back(phi);
    }
  }
  return g;
}

DirichletCharacter::DirichletCharacter(const UnitGroup& group, std::vector<std::int64_t> label)
    : modulus_(group.modulus), group_(group), label_(std::move(label)) {
  if (label_.size() != group.orders.size()) throw DomainError("character label has the wrong length");
  order_ = 1;
  for (std::size_t i = 0; i < label_.size(); ++i) {
    label_[i] = mod(label_[i], group.orders[i]);
    order_ = lcm(order_, group.orders[i] / gcd(label_[i], group.orders[i]));
  }
  const auto logs = discrete_logs(group);
  exponents_.assign(static_cast<std::size_t>(modulus_), -1);
  for (std::int64_t a = 0; a < modulus_; ++a) {
    if (gcd(a, modulus_) != 1) continue;
    std::int64_t e = 0;
    for (std::size_t i = 0; i < label_.size(); ++i)
      e += label_[i] * order_ / group.orders[i] * logs[static_cast<std::size_t>(a)][i];
    exponents_[static_cast<std::size_t>(a)] = mod(e, order_);
  }
  // modulus 1: the single residue 0 is a unit.
  if (modulus_ == 1) exponents_[0] = 0;

  conductor_ = modulus_;
  for (std::int64_t d : divisors(modulus_)) {
    bool induced = true;
    for (std::int64_t a = 1; a < modulus_ && induced; a += d)
      if (gcd(a, modulus_) == 1 && exponents_[static_cast<std::size_t>(a)] != 0) induced = false;
    if (induced) {
      conductor_ = d;
      break;
    }
  }
}

std::int64_t DirichletCharacter::exponent(std::int64_t a) const {
  return exponents_[static_cast<std::size_t>(mod(a, modulus_))];
}

Cyclotomic DirichletCharacter::value(std::int64_t a) const {
  const std::int64_t e = exponent(a);
  return e < 0 ? Cyclotomic::zero(order_) : Cyclotomic::root_of_unity(order_, e);
}

BigComplex DirichletCharacter::value_numeric(std::int64_t a, mpfr_prec_t bits) const {
  const std::int64_t e = exponent(a);
  if (e < 0) return BigComplex(bits);
  return BigComplex::unit_root(e, order_, bits);
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<std::int64_t> negated(label_.size());
  for (std::size_t i = 0; i < label_.size(); ++i) negated[i] = mod(-label_[i], group_.orders[i]);
  return DirichletCharacter(group_, std::move(negated));
}

std::string DirichletCharacter::name() const {
  std::string s = "chi[q=" + std::to_string(modulus_) + ";";
  for (std::size_t i = 0; i < label_.size(); ++i) s += (i ? "," : " ") + std::to_string(label_[i]);
  return s + "]";
}

const std::vector<DirichletCharacter>& characters(std::int64_t q) {
  static std::shared_mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<std::vector<DirichletCharacter>>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(q); it != cache.end()) return *it->second;
  }
  const UnitGroup group = unit_group(q);
  auto table = std::make_unique<std::vector<DirichletCharacter>>();
  std::vector<std::int64_t> label(group.orders.size(), 0);
  while (true) {
    table->emplace_back(group, label);
    std::size_t i = label.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++label[i] < group.orders[i]) {
        done = false;
        break;
      }
      label[i] = 0;
    }
    if (done) break;
  }
  if (static_cast<std::int64_t>(table->size()) != totient(q)) throw InternalError("character count differs from phi(q)");
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(q, std::move(table));
  return *it->second;
}

const DirichletCharacter& character(std::int64_t q, std::size_t index) {
  const auto& all = characters(q);
  if (index >= all.size())
    throw DomainError("character index " + std::to_string(index) + " out of range: there are " +
                      std::to_string(all.size()) + " characters mod " + std::to_string(q));
  return all[index];
}

std::int64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }

Cyclotomic gauss_sum(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  const std::int64_t big = lcm(chi.order(), q);
  std::vector<Rational> raw(static_cast<std::size_t>(big));
  for (std::int64_t a = 1; a <= q; ++a) {
    const std::int64_t e = chi.exponent(a);
    if (e < 0) continue;
    raw[static_cast<std::size_t>(mod(e * (big / chi.order()) + a * (big / q), big))] += Rational(1);
  }
  return Cyclotomic::from_powers(big, raw);
}

Cyclotomic power_sum(unsigned m, const DirichletCharacter& chi) {
  std::vector<Rational> raw(static_cast<std::size_t>(chi.order()));
  for (std::int64_t a = 1; a <= chi.modulus(); ++a) {
    const std::int64_t e = chi.exponent(a);
    if (e >= 0) raw[static_cast<std::size_t>(e)] += Rational(Integer(a)).pow(m);
  }
  return Cyclotomic::from_powers(chi.order(), raw);
}

Cyclotomic l_neg(unsigned m, const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  Cyclotomic combination = Cyclotomic(zeta_neg(0) + Rational(1)) * power_sum(m, chi) -
                           Cyclotomic(Rational(1) / Rational(q * static_cast<long>(m + 1))) * power_sum(m + 1, chi);
  for (unsigned k = 1; k <= m; ++k)
    combination += Cyclotomic(Rational(binomial(m, k)) * zeta_neg(k) * pow_q(q, k)) * power_sum(m - k, chi);

  std::vector<Rational> raw(static_cast<std::size_t>(chi.order()));
  const RationalPolynomial poly = hurwitz_poly(m);
  for (std::int64_t a = 1; a <= q; ++a) {
    const std::int64_t e = chi.exponent(a);
    if (e >= 0) raw[static_cast<std::size_t>(e)] += poly.evaluate(Rational(a, q), Rational(0));
  }
  const Cyclotomic direct = Cyclotomic(pow_q(q, m)) * Cyclotomic::from_powers(chi.order(), raw);
  if (!(combination == direct)) throw InternalError("L(-m, chi): power-sum and Hurwitz routes disagree");
  return combination;
}

Cyclotomic character_shift_residual(unsigned m, const DirichletCharacter& chi) {
  if (chi.is_principal()) throw UnsupportedCharacter("the character identity needs a nonprincipal character");
  const std::int64_t q = chi.modulus();
  Cyclotomic acc = power_sum(m, chi);
  for (unsigned k = 0; k < m; ++k)
    acc += Cyclotomic(pow_q(q, static_cast<long>(m - k)) * Rational(binomial(m, k))) * l_neg(k, chi);
  return acc;
}

SpecialValue l_value_closed(unsigned n, const DirichletCharacter& chi) {
  if (n == 0) throw DomainError("l_value_closed needs n >= 1");
  require_primitive(chi);
  const bool n_even = n % 2 == 0;
  if (n_even != chi.is_even() || (n == 1 && chi.is_even()))
    throw ParityObstruction("parity obstruction: no closed form; use numeric route (L(" + std::to_string(n) +
                            ", chi) with " + (chi.is_even() ? "even" : "odd") +
                            " chi; closed pi-power forms exist only when n and chi share parity, otherwise the"
                            " value is tied to derivatives at negative integers)");
  const std::int64_t q = chi.modulus();
  const DirichletCharacter bar = chi.conj();
  const Cyclotomic tau_inv = gauss_sum(bar).inv();
  Cyclotomic coeff;
  if (n_even) {
    const unsigned m = n / 2;
    const Rational r = Rational(m % 2 == 0 ? 1 : -1) * Rational(2).pow(2L * m - 1) *
                       pow_q(q, 1L - 2L * m) / Rational(factorial(2 * m - 1));
    coeff = Cyclotomic(r) * l_neg(2 * m - 1, bar) * tau_inv;
  } else {
    const unsigned m = (n - 1) / 2;
    const Rational r = Rational(m % 2 == 0 ? 1 : -1) * Rational(2).pow(2L * m) * pow_q(q, -2L * m) /
                       Rational(factorial(2 * m));
    coeff = Cyclotomic::root_of_unity(4) * Cyclotomic(r) * l_neg(2 * m, bar) * tau_inv;
  }
  SpecialValue value(coeff, n);
  if (chi.order() > 2) return value;
  // Real characters give real values.
  const Precision check{50};
  const BigComplex z = value.coeff().embed(check);
  if (abs(z.im) > tolerance_digits(check.digits - 8, check.bits()) * max(BigFloat(1L, check.bits()), abs(z.re)))
    throw InternalError("closed form for L(n, chi) is not real");
  return value;
}

SpecialValue l1_odd_exact(const DirichletCharacter& chi, bool drop_i_factor) {
  if (chi.is_even()) throw NotOdd("L(1, chi) is exact only for odd characters");
  require_primitive(chi);
  const std::int64_t q = chi.modulus();
  const DirichletCharacter bar = chi.conj();
  const Cyclotomic weighted = power_sum(1, bar);
  Cyclotomic coeff = Cyclotomic(Rational(-1, q)) * weighted * gauss_sum(bar).inv();
  if (!drop_i_factor) coeff = Cyclotomic::root_of_unity(4) * coeff;
  return SpecialValue(coeff, 1);
}

BigComplex l1_even_numeric(const DirichletCharacter& chi, const Precision& prec) {
  if (chi.is_odd()) throw NotEven("the log-sine formula needs an even character");
  if (chi.is_principal()) throw NotPrimitive("the principal character has a pole at s = 1");
  require_primitive(chi);
  const std::int64_t q = chi.modulus();
  const mpfr_prec_t bits = prec.bits(5);
  const BigFloat pi = BigFloat::pi(bits);
  const DirichletCharacter bar = chi.conj();
  BigComplex acc(bits);
  for (std::int64_t a = 1; a < q; ++a) {
    if (bar.exponent(a) < 0) continue;
    acc += bar.value_numeric(a, bits) * log(sin(pi * a / q));
  }
  const BigComplex value = -(acc / gauss_sum(bar).embed_bits(bits));
  if (chi.order() <= 2 && abs(value.im) > tolerance_digits(prec.digits - 8, bits))
    throw InternalError("log-sine formula produced a non-real value");
  return {value.re.with_bits(prec.bits()), value.im.with_bits(prec.bits())};
}

BigComplex l_series_numeric(const BigComplex& s_in, const DirichletCharacter& chi, unsigned k, const Precision& prec) {
  if (chi.is_principal()) throw UnsupportedCharacter("the shifted series needs a nonprincipal character");
  if (k == 0) throw DomainError("l_series_numeric needs k >= 1");
  const std::int64_t q = chi.modulus();
  const int digits = prec.digits + Precision::kGuardDigits;
  const mpfr_prec_t bits = prec.bits(8);
  const BigComplex s(s_in.re.with_bits(bits), s_in.im.with_bits(bits));
  const Precision inner{prec.digits + 8};

  BigComplex result(bits);
  for (std::int64_t n = 1; n <= q * static_cast<std::int64_t>(k); ++n) {
    if (chi.exponent(n) < 0) continue;
    result += chi.value_numeric(n, bits) * pow(BigFloat(n, bits), -s);
  }

  // Powers (a/q)^n for the numeric power sums S(-n)/q^n.
  std::vector<BigComplex> weights;
  std::vector<BigFloat> ratios, powers;
  for (std::int64_t a = 1; a < q; ++a) {
    if (chi.exponent(a) < 0) continue;
    weights.push_back(chi.value_numeric(a, bits));
    ratios.push_back(BigFloat(Rational(a, q), bits));
    powers.push_back(BigFloat(1L, bits));
  }
  const BigComplex q_pow = pow(BigFloat(q, bits), -s);
  const bool nonpositive_int = is_integer_at_most(s, 0);
  const long m = nonpositive_int ? -s.re.to_long() : -1;
  const BigFloat thr = tolerance_digits(digits + 3, bits);

  BigComplex coef = q_pow; // (-1)^n/n! q^{-s} (s)_n
  int small_run = 0;
  for (long n = 1; n < 50000; ++n) {
    BigComplex sum(bits);
    for (std::size_t j = 0; j < weights.size(); ++j) {
      powers[j] *= ratios[j];
      sum += weights[j] * powers[j];
    }
    const BigFloat step = BigFloat(-1L, bits) / BigFloat(n, bits);
    if (nonpositive_int && n == m + 1) {
      // (s)_n vanishes through s+n-1 = 0 while zeta_k(s+n) has residue 1.
      result += coef * step * sum;
      return BigComplex(result.re.with_bits(prec.bits()), result.im.with_bits(prec.bits()));
    }
    coef *= (s + BigFloat(n - 1, bits)) * step;
    const BigComplex term = coef * sum * zeta_tail(s + BigFloat(n, bits), k, inner);
    result += term;
    if (abs(term) < thr && (s.re + n) > 2L) {
      if (++small_run >= 3) return BigComplex(result.re.with_bits(prec.bits()), result.im.with_bits(prec.bits()));
    } else {
      small_run = 0;
    }
  }
  throw InternalError("l_series_numeric did not converge");
}

BigComplex l_numeric(const BigComplex& s, const DirichletCharacter& chi, const Precision& prec) {
  const mpfr_prec_t bits = prec.bits(5);
  const BigComplex shift = s - BigFloat(1L, s.bits());
  if (!chi.is_principal() && abs(shift) < BigFloat(0.5, bits)) return l_series_numeric(s, chi, 3, prec);
  const std::int64_t q = chi.modulus();
  const Precision inner{prec.digits + 5};
  BigComplex acc(bits);
  for (std::int64_t a = 1; a <= q; ++a) {
    if (chi.exponent(a) < 0) continue;
    acc += chi.value_numeric(a, bits) * hurwitz_numeric(s, BigFloat(Rational(a, q), bits), inner);
  }
  const BigComplex value = pow(BigFloat(q, bits), -s) * acc;
  return BigComplex(value.re.with_bits(prec.bits()), value.im.with_bits(prec.bits()));
}

} // namespace zetaval
