#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace admiss {

bool is_prime(std::uint64_t n);
// Prime factorization in increasing order of primes.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Largest k with p^k | n (n > 0).
int valuation(std::uint64_t n, std::uint64_t p);
// n with all factors of p removed.
std::uint64_t prime_to_part(std::uint64_t n, std::uint64_t p);
std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
std::int64_t mod(std::int64_t a, std::int64_t m);
std::uint64_t euler_phi(std::uint64_t n);
// Multiplicative order of a modulo n (gcd(a, n) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

struct ExtendedGcd {
  std::int64_t g, x, y;  // a*x + b*y = g
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

}  // namespace admiss
