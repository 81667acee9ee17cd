#include "rsl/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace rsl::kernels {

// AVX2 entry points (kernels_avx2.cpp, compiled with -mavx2 -mfma).
namespace detail {
double weighted_sin_sum_avx2(const double* freq, const double* coeff,
                             std::size_t n, double t);
double phase_cos_sum_avx2(const double* logn, const double* w, std::size_t n,
                          double t, double theta);
double gaussian_sum_avx2(const double* x, std::size_t n, double a);
void complex_pow_terms_avx2(const double* ln, std::size_t n, double sigma,
                            double t, double* out_re, double* out_im);
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend g_backend = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
  return b == Backend::scalar || cpu_has_avx2();
}

Backend active_backend() { return g_backend; }

void force_backend(Backend b) {
  if (!backend_available(b))
    throw std::runtime_error("kernel backend unavailable on this CPU");
  g_backend = b;
}

double weighted_sin_sum(std::span<const double> freq,
                        std::span<const double> coeff, double t) {
  const std::size_t n = freq.size();
  if (g_backend == Backend::avx2)
    return detail::weighted_sin_sum_avx2(freq.data(), coeff.data(), n, t);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += coeff[i] * std::sin(t * freq[i]);
  return acc;
}

double phase_cos_sum(std::span<const double> logn, std::span<const double> w,
                     double t, double theta) {
  const std::size_t n = logn.size();
  if (g_backend == Backend::avx2)
    return detail::phase_cos_sum_avx2(logn.data(), w.data(), n, t, theta);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::cos(theta - t * logn[i]);
  return acc;
}

double gaussian_sum(std::span<const double> x, double a) {
  const std::size_t n = x.size();
  if (g_backend == Backend::avx2)
    return detail::gaussian_sum_avx2(x.data(), n, a);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::exp(-a * x[i] * x[i]);
  return acc;
}

void complex_pow_terms(std::span<const double> ln, double sigma, double t,
                       double* out_re, double* out_im) {
  const std::size_t n = ln.size();
  if (g_backend == Backend::avx2) {
    detail::complex_pow_terms_avx2(ln.data(), n, sigma, t, out_re, out_im);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::exp(-sigma * ln[i]);
    const double ang = t * ln[i];
    out_re[i] = r * std::cos(ang);
    out_im[i] = -r * std::sin(ang);
  }
}

}  // namespace rsl::kernels
