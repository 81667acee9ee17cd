#include "rsl/primes.hpp"

#include <algorithm>
#include <cmath>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

constexpr std::uint64_t kSegmentThreshold = 10'000'000;  // plain sieve below
constexpr std::uint64_t kSegmentSize = 1u << 21;

std::vector<std::uint64_t> plain_sieve(std::uint64_t limit) {
  std::vector<std::uint8_t> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite[i]) primes.push_back(i);
  return primes;
}

}  // namespace

PrimeTable sieve(std::uint64_t limit) {
  if (limit < 2) throw domain_error("sieve: limit must be >= 2");
  PrimeTable table;
  table.limit = limit;
  if (limit < kSegmentThreshold) {
    table.primes = plain_sieve(limit);
    return table;
  }

  const auto root = static_cast<std::uint64_t>(std::sqrt(double(limit))) + 1;
  const auto base = plain_sieve(root);
  table.primes = base;
  std::vector<std::uint8_t> seg(kSegmentSize);
  for (std::uint64_t lo = root + 1; lo <= limit; lo += kSegmentSize) {
    const std::uint64_t hi = std::min(lo + kSegmentSize - 1, limit);
    std::fill(seg.begin(), seg.begin() + (hi - lo + 1), 0);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 1;
    }
    for (std::uint64_t i = lo; i <= hi; ++i)
      if (!seg[i - lo]) table.primes.push_back(i);
  }
  return table;
}

std::vector<PrimePower> prime_powers(const PrimeTable& table, double u_max) {
  if (!(u_max > 0.0)) throw domain_error("prime_powers: u_max must be > 0");
  std::vector<PrimePower> out;
  for (std::uint64_t p : table.primes) {
    const double lp = std::log(static_cast<double>(p));
    if (lp > u_max) break;  // ascending primes: no later p fits either
    for (std::uint32_t n = 1;; ++n) {
      const double lt = n * lp;
      if (lt > u_max) break;
      out.push_back({p, n, lt});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) {
              return a.log_term < b.log_term;
            });
  return out;
}

}  // namespace rsl
