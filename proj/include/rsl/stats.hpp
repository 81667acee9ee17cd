#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "rsl/zeros.hpp"

namespace rsl {

// Zero ordinates mapped through the smooth count, x_n = N_smooth(gamma_n),
// so the mean nearest-neighbour spacing is 1.
struct UnfoldedSequence {
  std::vector<double> values;

  // (x_N - x_1)/(N - 1); telescoped, so it equals the spacing mean exactly.
  double mean_spacing() const;
};

struct Histogram {
  std::vector<double> bin_edges;  // size counts.size() + 1
  std::vector<double> counts;     // density-normalized
  std::size_t n_samples = 0;
};

struct SpacingResult {
  Histogram hist;
  double ks_stat = 0.0;  // Kolmogorov-Smirnov distance to the GUE surmise CDF
};

// GUE Wigner surmise density p(s) = (32/pi^2) s^2 exp(-4 s^2/pi) and CDF.
double wigner_surmise_pdf(double s);
double wigner_surmise_cdf(double s);

// Montgomery pair-correlation target R2(x) = 1 - (sin(pi x)/(pi x))^2.
double pair_correlation_r2(double x);

// Throws insufficient_data_error below 2 zeros.
UnfoldedSequence unfold(const ZeroTable& zeros);

// Density histogram of nearest-neighbour spacings on [0, max spacing] plus
// the KS statistic against the Wigner surmise. Needs >= 100 spacings.
SpacingResult spacing_distribution(const UnfoldedSequence& seq, int bins);

// Density of positive pair differences x_m - x_n in (0, x_max], normalized
// per unit length per zero. Needs >= 1000 entries and 0 < bin_width <= x_max.
Histogram pair_correlation(const UnfoldedSequence& seq, double x_max,
                           double bin_width);

// CSV emitters: bin_left,bin_right,density,reference_value where the
// reference is the surmise (spacing) or R2 (pair correlation) at the bin
// midpoint.
void write_spacing_csv(const SpacingResult& r, std::ostream& out);
void write_pair_correlation_csv(const Histogram& h, std::ostream& out);

}  // namespace rsl
