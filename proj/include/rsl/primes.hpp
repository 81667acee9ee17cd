#pragma once

#include <cstdint>
#include <vector>

namespace rsl {

// Ascending list of all primes <= limit.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
};

// A prime power p^n with log_term = n * log p cached for the trace sums.
struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  double log_term = 0.0;
};

// Sieve of Eratosthenes; segmented above 10^7 to bound memory.
// Throws domain_error for limit < 2.
PrimeTable sieve(std::uint64_t limit);

// All pairs (p, n) with p in table and n*log(p) <= u_max, sorted by
// log_term ascending. Throws domain_error for u_max <= 0.
std::vector<PrimePower> prime_powers(const PrimeTable& table, double u_max);

}  // namespace rsl
