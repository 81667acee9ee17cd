#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops shared by the evaluators: plain-C++ reference
// kernels plus an AVX2 variant selected at runtime. Both variants accumulate
// in a fixed order, so a given backend is bit-deterministic run to run; the
// two backends agree to ~1e-12 per element (equivalence-tested).

namespace rsl::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
// Override dispatch (tests, benchmarks). Throws if unavailable on this CPU.
void force_backend(Backend b);

// sum_i coeff[i] * sin(t * freq[i])
double weighted_sin_sum(std::span<const double> freq,
                        std::span<const double> coeff, double t);

// sum_i w[i] * cos(theta - t * logn[i])   (Riemann-Siegel main-sum core)
double phase_cos_sum(std::span<const double> logn, std::span<const double> w,
                     double t, double theta);

// sum_i exp(-a * x[i]^2)
double gaussian_sum(std::span<const double> x, double a);

// out_re[k] + i*out_im[k] = exp(-(sigma + i*t) * ln[k])
// i.e. the terms n^{-s} with precomputed ln[k] = log(n_k).
void complex_pow_terms(std::span<const double> ln, double sigma, double t,
                       double* out_re, double* out_im);

}  // namespace rsl::kernels
