#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace zetaval {

// Small-integer helpers for moduli and character groups.

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
/// Euler's totient.
std::int64_t totient(std::int64_t n);
/// Ascending list of positive divisors.
std::vector<std::int64_t> divisors(std::int64_t n);
/// (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
/// Non-negative residue of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);
/// Multiplicative order of a modulo m; 0 when gcd(a, m) != 1.
std::int64_t mult_order(std::int64_t a, std::int64_t m);

} // namespace zetaval
