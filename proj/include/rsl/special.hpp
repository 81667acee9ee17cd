#pragma once

#include <complex>

namespace rsl {

using cplx = std::complex<double>;

// Principal-branch log Gamma. Lanczos (g = 7) for Re z >= 1/2, one
// recurrence step for 0 < Re z < 1/2, reflection for Re z <= 0. The
// imaginary part is continuous along any path in the right half-plane.
// Throws domain_error at the poles (non-positive integers).
cplx log_gamma(cplx z);

// Digamma psi = Gamma'/Gamma via recurrence into Re z >= 12 plus the
// Bernoulli asymptotic series. Throws domain_error at the poles.
cplx digamma(cplx z);

// Riemann-Siegel theta: theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
// Continuous and odd; evaluated from log_gamma so it is accurate for small
// t where the asymptotic series breaks down.
double rs_theta(double t);

// d theta / dt = (1/2) Re psi(1/4 + it/2) - (1/2) log pi.
double rs_theta_deriv(double t);

}  // namespace rsl
