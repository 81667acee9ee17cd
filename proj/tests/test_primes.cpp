#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "rsl/errors.hpp"
#include "rsl/primes.hpp"

using rsl::PrimePower;
using rsl::PrimeTable;

TEST_CASE("sieve small cases") {
  CHECK(rsl::sieve(10).primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(rsl::sieve(2).primes == std::vector<std::uint64_t>{2});
  CHECK_THROWS_AS(rsl::sieve(1), rsl::domain_error);
}

TEST_CASE("sieve agrees with trial division up to 10^4") {
  const auto table = rsl::sieve(10000);
  CHECK(table.primes == oracle::trial_division_primes(10000));
}

TEST_CASE("sieve count at 10^6") {
  CHECK(rsl::sieve(1000000).primes.size() == 78498);
}

TEST_CASE("segmented path matches plain path") {
  // the segment threshold sits at 1e7; force both code paths over the
  // same tail and compare
  const auto seg = rsl::sieve(10000019);
  const auto plain = rsl::sieve(9999999);
  CHECK(seg.primes.size() > plain.primes.size());
  CHECK(std::equal(plain.primes.begin(), plain.primes.end(), seg.primes.begin()));
  CHECK(seg.primes.back() == 10000019);  // 10000019 is prime
}

TEST_CASE("prime_powers cutoffs") {
  const auto table = rsl::sieve(100);
  CHECK_THROWS_AS(rsl::prime_powers(table, 0.0), rsl::domain_error);

  auto single = rsl::prime_powers(table, 1.0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].p == 2);
  CHECK(single[0].n == 1);

  CHECK(rsl::prime_powers(table, 0.5).empty());

  // u_max = 2.5 against brute-force enumeration
  const auto got = rsl::prime_powers(table, 2.5);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> expect;
  for (std::uint64_t p : oracle::trial_division_primes(100))
    for (std::uint32_t n = 1; n * std::log(double(p)) <= 2.5; ++n)
      expect.emplace_back(p, n);
  REQUIRE(got.size() == expect.size());
  std::set<std::pair<std::uint64_t, std::uint32_t>> got_set, expect_set;
  for (const auto& pp : got) got_set.emplace(pp.p, pp.n);
  expect_set.insert(expect.begin(), expect.end());
  CHECK(got_set == expect_set);
  CHECK(got_set.count({2, 1}));
  CHECK(got_set.count({3, 2}));
  CHECK(got_set.count({11, 1}));
  CHECK_FALSE(got_set.count({13, 1}));  // log 13 = 2.565 > 2.5
}

TEST_CASE("prime_powers sorted by log_term and closed under the cutoff") {
  const auto table = rsl::sieve(500);
  const double u_max = 4.0;
  const auto pps = rsl::prime_powers(table, u_max);
  for (std::size_t i = 0; i + 1 < pps.size(); ++i)
    CHECK(pps[i].log_term <= pps[i + 1].log_term);
  for (const auto& pp : pps) {
    CHECK(pp.log_term == doctest::Approx(pp.n * std::log(double(pp.p))).epsilon(1e-15));
    CHECK(pp.log_term <= u_max);
    // appending the next power of the same prime violates the cutoff only
    // if the enumeration already stopped there
    const double next = (pp.n + 1) * std::log(double(pp.p));
    bool present = false;
    for (const auto& q : pps)
      if (q.p == pp.p && q.n == pp.n + 1) present = true;
    if (!present) CHECK(next > u_max);
  }
}
