#include "zetaval/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "zetaval/errors.hpp"
#include "zetaval/number_theory.hpp"

namespace zetaval {

// ---------------------------------------------------------------------------
// Rational polynomial helpers (declared in polynomial.hpp).

RationalPolynomial linear_power(const Rational& c, unsigned n) {
  std::vector<Rational> v(n + 1);
  Rational power(1);
  // (x + c)^n = sum_k C(n,k) c^(n-k) x^k
  for (unsigned k = n + 1; k-- > 0;) {
    v[k] = Rational(binomial(n, k)) * power;
    power *= c;
  }
  return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Rational f = rem[i] / bc[db];
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

namespace {

std::string term(const std::string& coeff, bool unit, const std::string& var, std::size_t k) {
  std::string mono;
  if (k == 1) mono = var;
  else if (k > 1) mono = var + "^" + std::to_string(k);
  if (k == 0) return coeff;
  if (unit) return mono;
  return coeff + "*" + mono;
}

} // namespace

std::string to_string(const RationalPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const bool neg = c[k].sign() < 0;
    const Rational mag = c[k].abs();
    const std::string t = term(mag.to_string(), mag == Rational(1), var, k);
    if (out.empty()) out = neg ? "-" + t : t;
    else out += (neg ? " - " : " + ") + t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials.

namespace {

using IntPoly = std::vector<Integer>;

// Exact division of monic-divisor integer polynomials.
IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
  IntPoly rem = num;
  const std::size_t dd = den.size() - 1;
  IntPoly quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Integer f = rem[i]; // den is monic
    quot[i - dd] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (rem[i] != 0) throw InternalError("cyclotomic division left a remainder");
  return quot;
}

struct PhiCache {
  std::shared_mutex mutex;
  std::map<std::int64_t, std::unique_ptr<IntPoly>> table;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t q) {
  if (q < 1) throw DomainError("cyclotomic polynomial needs q >= 1");
  auto& cache = phi_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(q);
    if (it != cache.table.end()) return *it->second;
  }
  IntPoly poly(static_cast<std::size_t>(q) + 1, Integer(0));
  poly[0] = -1;
  poly[static_cast<std::size_t>(q)] = 1;
  for (std::int64_t d : divisors(q)) {
    if (d == q) continue;
    poly = exact_div(poly, cyclotomic_polynomial(d));
  }
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.try_emplace(q, std::make_unique<IntPoly>(std::move(poly)));
  return *it->second;
}

// ---------------------------------------------------------------------------

namespace {

// Reduce a coefficient vector (power j at index j, degree < anything) modulo Phi_q.
std::vector<Rational> reduce_mod_phi(std::int64_t q, std::vector<Rational> v) {
  const auto& phi = cyclotomic_polynomial(q);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i].is_zero()) continue;
    const Rational c = v[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] == 0) continue;
      v[i - deg + j] -= c * Rational(phi[j]);
    }
  }
  v.resize(deg);
  return v;
}

RationalPolynomial phi_as_rational(std::int64_t q) {
  std::vector<Rational> v;
  for (const auto& c : cyclotomic_polynomial(q)) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

// Solves M y = b over Q; returns false when inconsistent. M is rows x cols.
bool solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> b, std::vector<Rational>& y) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(b[p], b[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return false;
  y.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = b[i];
  return true;
}

} // namespace

Cyclotomic::Cyclotomic(const Rational& value) : modulus_(1), coeffs_{value} {}

Cyclotomic::Cyclotomic(std::int64_t q, std::vector<Rational> reduced)
    : modulus_(q), coeffs_(std::move(reduced)) {}

Cyclotomic Cyclotomic::from_powers(std::int64_t q, std::span<const Rational> raw) {
  if (q < 1) throw DomainError("cyclotomic modulus must be positive");
  std::vector<Rational> folded(static_cast<std::size_t>(q));
  for (std::size_t j = 0; j < raw.size(); ++j) folded[j % static_cast<std::size_t>(q)] += raw[j];
  return Cyclotomic(q, reduce_mod_phi(q, std::move(folded)));
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t q, std::int64_t k) {
  std::vector<Rational> raw(static_cast<std::size_t>(q));
  raw[static_cast<std::size_t>(mod(k, q))] = Rational(1);
  return from_powers(q, raw);
}

Cyclotomic Cyclotomic::zero(std::int64_t q) {
  return Cyclotomic(q, std::vector<Rational>(static_cast<std::size_t>(totient(q))));
}

Cyclotomic Cyclotomic::one(std::int64_t q) {
  auto z = zero(q);
  z.coeffs_[0] = Rational(1);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (!coeffs_[j].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lift(std::int64_t target) const {
  if (target < 1 || target % modulus_ != 0)
    throw IncompatibleModuli("cannot lift modulus " + std::to_string(modulus_) + " to " + std::to_string(target));
  if (target == modulus_) return *this;
  const std::int64_t step = target / modulus_;
  std::vector<Rational> raw(static_cast<std::size_t>(target));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) raw[j * static_cast<std::size_t>(step)] = coeffs_[j];
  return from_powers(target, raw);
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (gcd(mod(k, modulus_), modulus_) != 1) throw DomainError("Galois exponent must be coprime to the modulus");
  std::vector<Rational> raw(static_cast<std::size_t>(modulus_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    raw[static_cast<std::size_t>(mod(static_cast<std::int64_t>(j) * k, modulus_))] += coeffs_[j];
  return from_powers(modulus_, raw);
}

Cyclotomic Cyclotomic::conj() const { return galois(modulus_ - 1); }

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (modulus_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  RationalPolynomial r0 = phi_as_rational(modulus_);
  RationalPolynomial r1(coeffs_);
  RationalPolynomial s0, s1 = RationalPolynomial::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    RationalPolynomial next = s0 - quot * s1;
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r0.degree() != 0) throw InternalError("cyclotomic polynomial shares a factor with an element");
  const Rational g = r0.coeffs()[0];
  std::vector<Rational> v = s0.scaled(Rational(1) / g).coeffs();
  return Cyclotomic(modulus_, reduce_mod_phi(modulus_, std::move(v)));
}

Cyclotomic Cyclotomic::simplified() const {
  if (is_rational()) return Cyclotomic(coeffs_.empty() ? Rational(0) : coeffs_[0]);
  for (std::int64_t d : divisors(modulus_)) {
    if (d == 1) continue;
    if (d == modulus_) break;
    bool fixed = true;
    for (std::int64_t k = 1 + d; k < modulus_ && fixed; k += d)
      if (gcd(k, modulus_) == 1 && !(galois(k).coeffs_ == coeffs_)) fixed = false;
    if (!fixed) continue;
    const std::size_t cols = static_cast<std::size_t>(totient(d));
    std::vector<std::vector<Rational>> m(coeffs_.size(), std::vector<Rational>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      const auto col = root_of_unity(d, static_cast<std::int64_t>(j)).lift(modulus_);
      for (std::size_t i = 0; i < coeffs_.size(); ++i) m[i][j] = col.coeffs_[i];
    }
    std::vector<Rational> y;
    if (solve_linear(std::move(m), coeffs_, y)) return Cyclotomic(d, std::move(y));
  }
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Cyclotomic(modulus_, std::move(v));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.modulus_ != b.modulus_) {
    const std::int64_t q = lcm(a.modulus_, b.modulus_);
    return a.lift(q) + b.lift(q);
  }
  std::vector<Rational> v = a.coeffs_;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] += b.coeffs_[j];
  return Cyclotomic(a.modulus_, std::move(v));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.modulus_ != b.modulus_) {
    const std::int64_t q = lcm(a.modulus_, b.modulus_);
    return a.lift(q) * b.lift(q);
  }
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic(a.modulus_, reduce_mod_phi(a.modulus_, std::move(v)));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.modulus_ == b.modulus_) return a.coeffs_ == b.coeffs_;
  const std::int64_t q = lcm(a.modulus_, b.modulus_);
  return a.lift(q).coeffs_ == b.lift(q).coeffs_;
}

BigComplex Cyclotomic::embed(const Precision& prec) const { return embed_bits(prec.bits()); }

BigComplex Cyclotomic::embed_bits(mpfr_prec_t bits) const {
  BigComplex acc(bits);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const BigFloat c(coeffs_[j], bits);
    if (j == 0) acc += BigComplex(c);
    else acc += BigComplex::unit_root(static_cast<long>(j), static_cast<long>(modulus_), bits) * c;
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::string body;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const bool neg = coeffs_[j].sign() < 0;
    const Rational mag = coeffs_[j].abs();
    const std::string t = term(mag.to_string(), mag == Rational(1), "z", j);
    if (body.empty()) body = neg ? "-" + t : t;
    else body += (neg ? " - " : " + ") + t;
  }
  if (body.empty()) body = "0";
  return "[q=" + std::to_string(modulus_) + "] " + body;
}

// ---------------------------------------------------------------------------

CycPolynomial lift(const CycPolynomial& p, std::int64_t q) {
  std::vector<Cyclotomic> v;
  for (const auto& c : p.coeffs()) v.push_back(c.lift(q));
  return CycPolynomial(std::move(v));
}

CycPolynomial conj(const CycPolynomial& p) {
  std::vector<Cyclotomic> v;
  for (const auto& c : p.coeffs()) v.push_back(c.conj());
  return CycPolynomial(std::move(v));
}

CycPolynomial to_cyc(const RationalPolynomial& p, std::int64_t q) {
  std::vector<Cyclotomic> v;
  for (const auto& c : p.coeffs()) v.push_back(Cyclotomic(c).lift(q));
  return CycPolynomial(std::move(v));
}

std::int64_t common_modulus(const CycPolynomial& p) {
  std::int64_t q = 1;
  for (const auto& c : p.coeffs()) q = lcm(q, c.modulus());
  return q;
}

std::string to_string(const CycPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string coeff = "(" + c[k].to_string() + ")";
    std::string t = k == 0 ? coeff : coeff + "*" + (k == 1 ? var : var + "^" + std::to_string(k));
    out += out.empty() ? t : " + " + t;
  }
  return out;
}

} // namespace zetaval
