#pragma once

// Test-side oracles, deliberately independent of the library paths they
// check: trial division instead of the sieve, recurrence-shifted Stirling
// instead of Lanczos, plain iterated averaging of eta partial sums instead
// of the Chebyshev-weighted acceleration.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

// log Gamma via the recurrence log G(z) = log G(z+n) - sum log(z+k), pushed
// into the Stirling-accurate region Re z >= 32. Right half-plane only.
inline cplx log_gamma_stirling(cplx z) {
  cplx shift = 0.0;
  while (z.real() < 32.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  // Stirling: (z - 1/2) log z - z + log(2 pi)/2 + sum B_2n/(2n(2n-1) z^{2n-1})
  static const double coef[] = {1.0 / 12.0,     -1.0 / 360.0,  1.0 / 1260.0,
                                -1.0 / 1680.0,  1.0 / 1188.0,  -691.0 / 360360.0,
                                1.0 / 156.0};
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx tail = 0.0;
  cplx p = inv;
  for (double c : coef) {
    tail += c * p;
    p *= inv2;
  }
  const double half_log_two_pi = 0.91893853320467274178;
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + tail + shift;
}

inline double rs_theta_oracle(double t) {
  return log_gamma_stirling(cplx(0.25, 0.5 * t)).imag() -
         0.5 * t * std::log(M_PI);
}

// eta(s) by iterated averaging of partial sums: n_direct raw terms, then
// `levels` rounds of neighbour averaging on the tail.
inline cplx eta_averaged(cplx s, int n_direct, int levels) {
  const int total = n_direct + levels;
  std::vector<cplx> partial(total);
  cplx acc = 0.0;
  for (int k = 0; k < total; ++k) {
    const double L = std::log(static_cast<double>(k + 1));
    cplx term = std::exp(cplx(-s.real() * L, -s.imag() * L));
    if (k % 2) term = -term;
    acc += term;
    partial[k] = acc;
  }
  std::vector<cplx> tail(partial.begin() + (n_direct - 1), partial.end());
  while (tail.size() > 1) {
    for (std::size_t i = 0; i + 1 < tail.size(); ++i)
      tail[i] = 0.5 * (tail[i] + tail[i + 1]);
    tail.pop_back();
  }
  return tail[0];
}

inline cplx zeta_averaged(cplx s, int n_direct = 0, int levels = 60) {
  if (n_direct == 0) n_direct = static_cast<int>(1.5 * std::abs(s.imag())) + 40;
  const cplx eta = eta_averaged(s, n_direct, levels);
  return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

// Hardy Z built entirely from the oracles above.
inline double hardy_z_oracle(double t) {
  const cplx zeta = zeta_averaged(cplx(0.5, t));
  const double th = rs_theta_oracle(t);
  return std::cos(th) * zeta.real() - std::sin(th) * zeta.imag();
}

}  // namespace oracle
