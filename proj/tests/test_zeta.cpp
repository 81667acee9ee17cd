#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "rsl/errors.hpp"
#include "rsl/primes.hpp"
#include "rsl/zeta.hpp"

using rsl::cplx;

TEST_CASE("zeta_eta closed forms") {
  const double basel = M_PI * M_PI / 6.0;
  CHECK(std::abs(rsl::zeta_eta(cplx(2.0, 0.0), 40).real() - basel) <= 1e-8);
  CHECK(std::abs(rsl::zeta_eta(cplx(2.0, 0.0), 40).imag()) <= 1e-12);

  // zeta(1/2) against the high-term-count averaged-partial-sum oracle
  const double ref = oracle::zeta_averaged(cplx(0.5, 0.0), 400, 80).real();
  CHECK(std::abs(rsl::zeta_eta(cplx(0.5, 0.0), 60).real() - ref) <= 1e-6);
  CHECK(ref == doctest::Approx(-1.4603545088).epsilon(1e-9));
}

TEST_CASE("zeta_eta domain errors") {
  CHECK_THROWS_AS(rsl::zeta_eta(cplx(1.0, 0.0), 40), rsl::domain_error);
  CHECK_THROWS_AS(rsl::zeta_eta(cplx(-0.5, 3.0), 40), rsl::domain_error);
  CHECK_THROWS_AS(rsl::zeta_eta(cplx(2.0, 0.0), 5), std::invalid_argument);
}

TEST_CASE("zeta_eta Schwarz reflection is exact") {
  const cplx s0(0.5, 20.0);
  const cplx a = rsl::zeta_eta(std::conj(s0), 64);
  const cplx b = std::conj(rsl::zeta_eta(s0, 64));
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

TEST_CASE("euler product closed forms") {
  const auto table2 = rsl::sieve(2);
  CHECK(rsl::euler_product_partial(cplx(2.0, 0.0), table2).real() ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-15));

  const auto table = rsl::sieve(1000000);
  const double basel = M_PI * M_PI / 6.0;
  CHECK(std::abs(rsl::euler_product_partial(cplx(2.0, 0.0), table).real() - basel) <= 1e-6);

  const auto t1000 = rsl::sieve(1000);
  const cplx z3 = rsl::zeta_eta(cplx(3.0, 0.0), 40);
  CHECK(std::abs(rsl::euler_product_partial(cplx(3.0, 0.0), t1000) - z3) <= 1e-5);

  CHECK_THROWS_AS(rsl::euler_product_partial(cplx(1.0, 0.0), table2), rsl::domain_error);
}

TEST_CASE("euler product converges monotonically in modulus at s = 2") {
  const cplx target = rsl::zeta_eta(cplx(2.0, 0.0), 60);
  double prev_gap = 1e9;
  for (std::uint64_t limit : {100, 1000, 10000}) {
    const auto table = rsl::sieve(limit);
    const double gap = std::abs(std::abs(rsl::euler_product_partial(cplx(2.0, 0.0), table)) -
                                std::abs(target));
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("hardy_z basics") {
  // |Z(t)|^2 equals |zeta(1/2+it)|^2
  const double t = 30.0;
  const double z = rsl::hardy_z(t);
  const cplx zeta = rsl::zeta_eta(cplx(0.5, t), rsl::zeta_eta_terms(t));
  CHECK(z * z == doctest::Approx(std::norm(zeta)).epsilon(1e-6));

  CHECK(rsl::hardy_z(-20.0) == rsl::hardy_z(20.0));

  // first zero: sign change inside [14, 14.5]
  CHECK(rsl::hardy_z(14.0) * rsl::hardy_z(14.5) < 0.0);
  CHECK(oracle::hardy_z_oracle(14.0) * oracle::hardy_z_oracle(14.5) < 0.0);
}

TEST_CASE("hardy_z against the independent oracle on [10, 300]") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> d(10.0, 300.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = d(rng);
    worst = std::max(worst, std::abs(rsl::hardy_z(t) - oracle::hardy_z_oracle(t)));
  }
  CHECK(worst <= 1e-4);
}

TEST_CASE("riemann-siegel path overlaps the eta path") {
  // the eta ceiling sits at 400; the C0-only tail above is good to a few
  // parts in 1e-4 there, improving with height
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> d(400.0, 700.0);
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double t = d(rng);
    worst = std::max(worst, std::abs(rsl::hardy_z_rs(t) - rsl::hardy_z_eta(t)));
  }
  CHECK(worst <= 2e-3);
  MESSAGE("RS vs eta overlap worst gap: ", worst);
}

TEST_CASE("xi on the critical line") {
  // assembled complex xi at E = 10 is real to 1e-10
  const double E = 10.0;
  const cplx s(0.5, E);
  const cplx xicplx = 0.5 * s * (s - 1.0) * std::exp(-0.5 * s * std::log(M_PI)) *
                      std::exp(rsl::log_gamma(0.5 * s)) *
                      rsl::zeta_eta(s, rsl::zeta_eta_terms(E));
  CHECK(std::abs(xicplx.imag()) <= 1e-10);
  CHECK(rsl::xi_critical(E) == doctest::Approx(xicplx.real()).epsilon(1e-9));

  // xi(1/2): E = 0
  CHECK(rsl::xi_critical(0.0) == doctest::Approx(0.497120778188).epsilon(1e-6));

  // sign flip across the first zero
  CHECK(rsl::xi_critical(14.0) * rsl::xi_critical(14.5) < 0.0);

  // evenness: xi(E) * xi(-E) >= 0 everywhere (equality only at zeros)
  for (double E2 : {0.5, 7.0, 14.2, 21.0, 29.9}) {
    CHECK(rsl::xi_critical(E2) * rsl::xi_critical(-E2) >= 0.0);
    CHECK(rsl::xi_critical(E2) == rsl::xi_critical(-E2));
  }
}
