// AVX2 kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers dispatch through rsl::kernels after the runtime
// CPU check. Accumulation order is fixed (4 lanes, remainder in order), so
// results are reproducible run to run.

#include <cmath>
#include <cstddef>

#include "vecmath_avx2.hpp"

namespace rsl::kernels::detail {

using namespace rsl::kernels::avx2;

double weighted_sin_sum_avx2(const double* freq, const double* coeff,
                             std::size_t n, double t) {
  const __m256d tv = splat(t);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d f = _mm256_loadu_pd(freq + i);
    __m256d s, c;
    sincos_pd(_mm256_mul_pd(tv, f), &s, &c);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(coeff + i), s, acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += coeff[i] * std::sin(t * freq[i]);
  return sum;
}

double phase_cos_sum_avx2(const double* logn, const double* w, std::size_t n,
                          double t, double theta) {
  const __m256d tv = splat(t), th = splat(theta);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d arg = _mm256_fnmadd_pd(tv, _mm256_loadu_pd(logn + i), th);
    __m256d s, c;
    sincos_pd(arg, &s, &c);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), c, acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += w[i] * std::cos(theta - t * logn[i]);
  return sum;
}

double gaussian_sum_avx2(const double* x, std::size_t n, double a) {
  const __m256d av = splat(-a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, exp_pd(_mm256_mul_pd(av, _mm256_mul_pd(xv, xv))));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += std::exp(-a * x[i] * x[i]);
  return sum;
}

void complex_pow_terms_avx2(const double* ln, std::size_t n, double sigma,
                            double t, double* out_re, double* out_im) {
  const __m256d sv = splat(-sigma), tv = splat(t);
  const __m256d neg = splat(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d L = _mm256_loadu_pd(ln + i);
    __m256d r = exp_pd(_mm256_mul_pd(sv, L));
    __m256d s, c;
    sincos_pd(_mm256_mul_pd(tv, L), &s, &c);
    _mm256_storeu_pd(out_re + i, _mm256_mul_pd(r, c));
    _mm256_storeu_pd(out_im + i, _mm256_xor_pd(_mm256_mul_pd(r, s), neg));
  }
  for (; i < n; ++i) {
    const double r = std::exp(-sigma * ln[i]);
    const double ang = t * ln[i];
    out_re[i] = r * std::cos(ang);
    out_im[i] = -r * std::sin(ang);
  }
}

}  // namespace rsl::kernels::detail
