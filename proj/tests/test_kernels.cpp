#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rsl/kernels.hpp"

namespace k = rsl::kernels;

namespace {

struct BackendGuard {
  k::Backend saved = k::active_backend();
  ~BackendGuard() { k::force_backend(saved); }
};

std::vector<double> random_vec(std::size_t n, double lo, double hi,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match plain std loops") {
  BackendGuard guard;
  k::force_backend(k::Backend::scalar);
  const auto freq = random_vec(1003, 0.1, 50.0, 11);
  const auto coeff = random_vec(1003, -1.0, 1.0, 12);
  const double t = 123.456;
  double ref = 0.0;
  for (std::size_t i = 0; i < freq.size(); ++i)
    ref += coeff[i] * std::sin(t * freq[i]);
  CHECK(k::weighted_sin_sum(freq, coeff, t) == doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("avx2 variants agree with scalar reference") {
  if (!k::backend_available(k::Backend::avx2)) {
    MESSAGE("AVX2 not available; skipping equivalence checks");
    return;
  }
  BackendGuard guard;
  const std::size_t n = 4099;  // odd tail exercises the remainder loop

  const auto freq = random_vec(n, 0.05, 46.1, 21);
  const auto coeff = random_vec(n, -0.5, 0.5, 22);
  const auto xs = random_vec(n, 0.0, 300.0, 23);
  const auto ln = random_vec(n, 0.0, 9.3, 24);

  for (double t : {0.0, 1.0, 14.134725, 300.0, 9950.0}) {
    k::force_backend(k::Backend::scalar);
    const double s_sin = k::weighted_sin_sum(freq, coeff, t);
    const double s_cos = k::phase_cos_sum(ln, coeff, t, 0.7391);
    const double s_gau = k::gaussian_sum(xs, 1.0 / 50.0);
    std::vector<double> sre(n), sim(n);
    k::complex_pow_terms(ln, 0.5, t, sre.data(), sim.data());

    k::force_backend(k::Backend::avx2);
    const double v_sin = k::weighted_sin_sum(freq, coeff, t);
    const double v_cos = k::phase_cos_sum(ln, coeff, t, 0.7391);
    const double v_gau = k::gaussian_sum(xs, 1.0 / 50.0);
    std::vector<double> vre(n), vim(n);
    k::complex_pow_terms(ln, 0.5, t, vre.data(), vim.data());

    CHECK(std::abs(v_sin - s_sin) <= 1e-10 * (1.0 + std::abs(s_sin) + double(n) * 1e-3));
    CHECK(std::abs(v_cos - s_cos) <= 1e-10 * (1.0 + std::abs(s_cos) + double(n) * 1e-3));
    CHECK(std::abs(v_gau - s_gau) <= 1e-10 * (1.0 + s_gau));
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(vre[i] - sre[i]));
      worst = std::max(worst, std::abs(vim[i] - sim[i]));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("avx2 elementwise trig against libm at large arguments") {
  if (!k::backend_available(k::Backend::avx2)) return;
  BackendGuard guard;
  k::force_backend(k::Backend::avx2);
  // single-frequency probes: sum reduces to coeff * sin(t * f)
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double f = 0.05 + 46.0 * d(rng);
    const double t = 9950.0 * d(rng);
    const std::vector<double> freq(4, f), coeff{1.0, 0.0, 0.0, 0.0};
    const double got = k::weighted_sin_sum(freq, coeff, t);
    worst = std::max(worst, std::abs(got - std::sin(t * f)));
  }
  CHECK(worst <= 5e-13);
}

TEST_CASE("backends are individually deterministic") {
  BackendGuard guard;
  const auto freq = random_vec(517, 0.1, 40.0, 41);
  const auto coeff = random_vec(517, -1.0, 1.0, 42);
  for (k::Backend b : {k::Backend::scalar, k::Backend::avx2}) {
    if (!k::backend_available(b)) continue;
    k::force_backend(b);
    const double a = k::weighted_sin_sum(freq, coeff, 77.7);
    const double c = k::weighted_sin_sum(freq, coeff, 77.7);
    CHECK(a == c);
  }
}
