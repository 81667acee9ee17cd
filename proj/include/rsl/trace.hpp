#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rsl/primes.hpp"
#include "rsl/special.hpp"
#include "rsl/zeros.hpp"

namespace rsl {

// Gaussian test function h(k) = exp(-k^2 / (2 sigma^2)) together with its
// exact Fourier partner under g(u) = (1/2pi) Int h(k) e^{-iku} dk, which is
// g(u) = (sigma/sqrt(2pi)) exp(-sigma^2 u^2 / 2). h extends to the strip
// |Im k| <= 1/2 where h(+-i/2) = exp(1/(8 sigma^2)).
struct GaussianTest {
  double sigma;

  explicit GaussianTest(double s);
  double h(double k) const;
  double g(double u) const;
  double h_imag_half() const;  // h(i/2) = h(-i/2)
};

// Zero-side sum of the explicit formula: sum over all nontrivial zeros of
// h(gamma) = 2 * sum_{gamma_n > 0} h(gamma_n) by evenness of h.
double weil_lhs(const GaussianTest& h, const ZeroTable& zeros);

struct WeilBreakdown {
  double digamma_integral = 0.0;  // (1/2pi) Int h(k) Re psi(1/4 + ik/2) dk
  double h_imag_pair = 0.0;       // h(i/2) + h(-i/2)
  double log_pi_term = 0.0;       // -log(pi) * g(0)
  double prime_sum = 0.0;         // 2 sum log(p) p^{-n/2} g(n log p)
  double total() const;
};

// Arithmetic/archimedean side. quad_bound is the digamma-integral cutoff K
// (pass 0 to choose K from h(K) < quad_tol/100); adaptive Simpson at
// quad_tol. Throws accuracy_error (with the achieved estimate) if the
// quadrature cannot reach quad_tol.
WeilBreakdown weil_rhs(const GaussianTest& h,
                       const std::vector<PrimePower>& powers,
                       double quad_bound, double quad_tol);

struct ExplicitFormulaReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs
  double zero_sum = 0.0;
  WeilBreakdown terms;
};

ExplicitFormulaReport explicit_formula_residual(
    const GaussianTest& h, const ZeroTable& zeros,
    const std::vector<PrimePower>& powers, double quad_bound, double quad_tol);

// Periodic-orbit data for the generic fluctuation sum.
struct OrbitData {
  double period = 0.0;    // T
  double lyapunov = 0.0;  // lambda
};

// (1/pi) sum_orbits sum_{m=1}^{m_max} sin(m E T) / (2 m sinh(m lambda / 2)).
double gutzwiller_fluct(const std::vector<OrbitData>& orbits, double E,
                        int m_max);

// Geodesic length spectrum (ascending, positive, multiplicity by repetition).
struct LengthSpectrum {
  std::vector<double> lengths;
};

// One positive decimal length per line; '#' comments and blank lines allowed.
LengthSpectrum load_length_spectrum(std::istream& in);
LengthSpectrum load_length_spectrum(const std::string& path);

struct SelbergValue {
  cplx value;         // prod_l prod_{m=0}^{m_max} (1 - e^{-l(s+m)})
  double tail_bound;  // bound on |log| of the omitted m > m_max factors
};

// Requires Re s > 1 and m_max >= 0.
SelbergValue selberg_zeta_partial(const LengthSpectrum& spec, cplx s,
                                  int m_max);

// One row per prime power: the orbit-sum weight 1/(2 sinh(n log p / 2))
// against the arithmetic weight p^{-n/2}, with
// rel_dev = sinh_term/power_term - 1 = p^{-n}/(1 - p^{-n}).
struct AnalogyRow {
  std::uint64_t p = 0;
  int n = 0;
  double sinh_term = 0.0;
  double power_term = 0.0;
  double rel_dev = 0.0;
};

std::vector<AnalogyRow> analogy_report(const PrimeTable& table, int n_max);

}  // namespace rsl
