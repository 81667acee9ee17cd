#include "rsl/special.hpp"

#include <cmath>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// Valid for Re z >= 1/2. Every log stays on the principal branch without
// wrapping: Re(zz + 7.5) > 7 and the rational sum keeps a positive real
// part on this half-plane, so Im log Gamma is continuous here.
cplx lanczos_core(cplx z) {
  const cplx zz = z - 1.0;
  cplx sum = kLanczos[0];
  for (int k = 1; k < 9; ++k) sum += kLanczos[k] / (zz + double(k));
  const cplx t = zz + 7.5;
  return kHalfLog2Pi + (zz + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) without overflow for large |Im z|, principal-ish branch
// (exact up to 2*pi*i, which reflection consumers tolerate).
cplx log_sin_pi(cplx z) {
  const double y = z.imag();
  const cplx ipz = cplx(0.0, M_PI) * z;
  if (y > 4.0) {  // sin(pi z) ~ -e^{-i pi z}/(2i) for large positive Im
    return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / cplx(0.0, 2.0));
  }
  if (y < -4.0) {
    return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / cplx(0.0, 2.0));
  }
  return std::log(std::sin(M_PI * z));
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z))
    throw domain_error("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return lanczos_core(z);
  if (z.real() > 0.0) {
    // one recurrence step keeps Im continuous across 0 < Re z < 1/2:
    // log(z) is principal there (Re z > 0), no cut is crossed.
    return lanczos_core(z + 1.0) - std::log(z);
  }
  // reflection; the left half-plane has genuine branch cuts, callers only
  // use exp() of the result there.
  return kLogPi - log_sin_pi(z) - log_gamma(1.0 - z);
}

cplx digamma(cplx z) {
  if (is_nonpositive_integer(z))
    throw domain_error("digamma: pole at non-positive integer");
  // B_{2n}/(2n) for the asymptotic tail
  static constexpr double kBern[7] = {
      1.0 / 12.0,   -1.0 / 120.0, 1.0 / 252.0,    -1.0 / 240.0,
      5.0 / 660.0,  -691.0 / 32760.0, 7.0 / 84.0};
  cplx acc = 0.0;
  while (z.real() < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx s = std::log(z) - 0.5 * inv;
  cplx p = inv2;
  for (double b : kBern) {
    s -= b * p;
    p *= inv2;
  }
  return acc + s;
}

double rs_theta(double t) {
  if (t == 0.0) return 0.0;
  const double a = std::abs(t);
  const double th = log_gamma(cplx(0.25, a / 2.0)).imag() - a / 2.0 * kLogPi;
  return t > 0.0 ? th : -th;
}

double rs_theta_deriv(double t) {
  return 0.5 * digamma(cplx(0.25, t / 2.0)).real() - 0.5 * kLogPi;
}

}  // namespace rsl
