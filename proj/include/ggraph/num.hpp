#pragma once
// Elementary number theory used throughout: factorization, totient,
// divisor lists.  Everything works by trial division; inputs stay far
// below the range where that matters.

#include <cstdint>
#include <vector>

namespace ggraph {

// Prime factorization as (prime, exponent) pairs, primes ascending.
// factorize(1) is empty.  n must be >= 1.
std::vector<std::pair<long, int>> factorize(long n);

// Distinct prime divisors, ascending.
std::vector<long> prime_divisors(long n);

bool is_prime(long n);

// True iff n = p^k with k >= 1.  If p_out/k_out are non-null they
// receive p and k.
bool is_prime_power(long n, long* p_out = nullptr, int* k_out = nullptr);

// Euler's totient.
long totient(long n);

// All divisors of n, ascending.
std::vector<long> divisors(long n);

long gcd(long a, long b);
long lcm(long a, long b);

// floor(log2(n)) convenience for powers of two; n must be > 0.
bool is_power_of_two(long n);

}  // namespace ggraph
