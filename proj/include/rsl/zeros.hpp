#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsl/primes.hpp"

namespace rsl {

// Interval the count check flagged as losing or inventing zeros.
struct ZeroScanWarning {
  double t_lo = 0.0;
  double t_hi = 0.0;
  long expected = 0;  // round(theta/pi + 1) increment
  long found = 0;
  std::string message;
};

struct ZeroTable {
  std::vector<double> zeros;  // ascending ordinates gamma_n
  double t_max = 0.0;
  double refine_tol = 0.0;
  std::vector<ZeroScanWarning> warnings;

  std::size_t count_below(double t) const;  // zeros with gamma <= t
  ZeroTable below(double t) const;          // sliced copy, same metadata
};

// Locate every sign-change zero of Z in [10, t_max]: bracket on a grid of
// step (local mean spacing)/grid_factor, rescue close pairs the coarse grid
// skipped (guided by the smooth-count increment between neighbours), refine
// by bisection to refine_tol. Counts are validated against
// round(theta(T)/pi + 1) at checkpoints; mismatches beyond +-2 are attached
// as warnings. threads = 0 means auto (RSL_THREADS); the partition does not
// affect the result.
ZeroTable find_zeros(double t_max, double grid_factor = 8.0,
                     double refine_tol = 1e-10, unsigned threads = 0);

// Exact smooth counting function theta(E)/pi + 1 and its classical
// asymptotic companion (E/2pi)(log(E/2pi) - 1) + 7/8.
double smooth_count(double E);
double smooth_count_asymptotic(double E);

// Staircase N(E): number of zeros <= E (right-continuous at jumps).
double staircase(const ZeroTable& zeros, double E);

// Staircase convolved with a Gaussian of width w (exact: sum of erfs).
double staircase_smoothed(const ZeroTable& zeros, double E, double w);

// Prime fluctuation sum
//   -(1/pi) sum_{p<=limit} sum_{m=1}^{m_max} sin(m E log p) / (m p^{m/2}),
// precompiled to (frequency, coefficient) arrays for sweeps over E.
// smooth_w > 0 damps each term by exp(-(m log p)^2 w^2 / 2), which is the
// exact Gaussian smoothing of the sum with kernel width w.
class FluctSum {
 public:
  FluctSum(const PrimeTable& table, int m_max, double smooth_w = 0.0);
  double operator()(double E) const;

 private:
  std::vector<double> freq_;   // m log p, p-major, m ascending
  std::vector<double> coeff_;  // 1/(m p^{m/2}) (optionally damped)
};

double fluct_sum(double E, const PrimeTable& table, int m_max);
double fluct_sum_smoothed(double E, const PrimeTable& table, int m_max,
                          double w);

// Plain-text cache: `# t_max=`, `# refine_tol=`, `# count=` comment header,
// then one ordinate per line, fixed-point, 12 decimals. Round-trips
// byte-exactly for ordinates below ~1.6e4.
void save_zero_table(const ZeroTable& table, std::ostream& out);
void save_zero_table(const ZeroTable& table, const std::string& path);
ZeroTable load_zero_table(std::istream& in);
ZeroTable load_zero_table(const std::string& path);

}  // namespace rsl
