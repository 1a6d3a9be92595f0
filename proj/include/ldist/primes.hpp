#pragma once

#include <cstdint>
#include <vector>

namespace ldist {

// Primes <= limit, ascending. Plain Eratosthenes; limits used here stay within
// a few 10^7 where segmentation buys nothing.
std::vector<std::int64_t> sieve_primes(std::int64_t limit);

// spf[n] = smallest prime factor of n for 2 <= n <= limit (spf[0] = spf[1] = 0).
// Drives multiplicative-table fills and trial-free factorization.
std::vector<std::int32_t> smallest_prime_factor(std::int32_t limit);

// mask[n] = 1 iff n is squarefree, 0 <= n <= limit.
std::vector<std::uint8_t> squarefree_mask(std::int64_t limit);

// Factorization as (prime, exponent) pairs using an spf table (n <= table size).
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n,
                                                    const std::vector<std::int32_t>& spf);

} // namespace ldist
