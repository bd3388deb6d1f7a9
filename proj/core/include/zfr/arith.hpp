#pragma once

// Small exact integer arithmetic used by the character and coefficient
// machinery: factorization, prime powers, Kronecker symbols, primitive roots.
// Everything here is desk scale (n up to ~10^12 by trial division).

#include <cstdint>
#include <utility>
#include <vector>

namespace zfr::arith {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse of a mod m (gcd(a, m) = 1 required).
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

// Ascending (prime, exponent) pairs. factorize(1) == {}.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_prime(std::int64_t n);

// n = p^k with k >= 1 -> {p, k}; otherwise {0, 0}. n = 1 -> {0, 0}.
std::pair<std::int64_t, int> prime_power_split(std::int64_t n);

// von Mangoldt Lambda(n): log p if n = p^k, else 0.
double von_mangoldt(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

bool is_squarefree(std::int64_t n);

// D = 1, or D == 1 (mod 4) squarefree, or D = 4m with m == 2,3 (mod 4)
// squarefree. Zero is never fundamental.
bool is_fundamental_discriminant(std::int64_t d);

// Kronecker symbol (a|n), n >= 0, full 2-adic and sign rules.
int kronecker_symbol(std::int64_t a, std::int64_t n);

// Smallest primitive root modulo p^e, p an odd prime, e >= 1.
std::int64_t primitive_root(std::int64_t p, int e);

// All primes <= n (shared cache behind a mutex; returned by value).
std::vector<std::int32_t> primes_up_to(std::int32_t n);

// Smallest-prime-factor table for 0..n (spf[0] = spf[1] = 0).
std::vector<std::int32_t> spf_sieve(std::int32_t n);

// Ascending divisors of n.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace zfr::arith
