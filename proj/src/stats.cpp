#include "rsl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "rsl/errors.hpp"
#include "rsl/util.hpp"

namespace rsl {

namespace {
constexpr double kFourOverPi = 1.2732395447351626862;
}

double wigner_surmise_pdf(double s) {
  return (32.0 / (M_PI * M_PI)) * s * s * std::exp(-kFourOverPi * s * s);
}

double wigner_surmise_cdf(double s) {
  if (s <= 0.0) return 0.0;
  // integral of the surmise: erf(2s/sqrt(pi)) - (4s/pi) exp(-4s^2/pi)
  return std::erf(2.0 * s / std::sqrt(M_PI)) -
         kFourOverPi * s * std::exp(-kFourOverPi * s * s);
}

double pair_correlation_r2(double x) {
  if (x == 0.0) return 0.0;
  const double q = std::sin(M_PI * x) / (M_PI * x);
  return 1.0 - q * q;
}

double UnfoldedSequence::mean_spacing() const {
  return (values.back() - values.front()) /
         static_cast<double>(values.size() - 1);
}

UnfoldedSequence unfold(const ZeroTable& zeros) {
  if (zeros.zeros.size() < 2)
    throw insufficient_data_error("unfold: need at least 2 zeros");
  UnfoldedSequence seq;
  seq.values.reserve(zeros.zeros.size());
  for (double g : zeros.zeros) seq.values.push_back(smooth_count(g));
  return seq;
}

SpacingResult spacing_distribution(const UnfoldedSequence& seq, int bins) {
  if (bins < 1) throw std::invalid_argument("spacing_distribution: bins < 1");
  if (seq.values.size() < 101)
    throw insufficient_data_error(
        "spacing_distribution: need at least 100 spacings");
  std::vector<double> sp(seq.values.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.values.size(); ++i)
    sp[i] = seq.values[i + 1] - seq.values[i];

  const double s_max = *std::max_element(sp.begin(), sp.end());
  const double width = s_max / bins;
  SpacingResult r;
  r.hist.n_samples = sp.size();
  r.hist.bin_edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) r.hist.bin_edges[b] = b * width;
  r.hist.counts.assign(bins, 0.0);
  for (double s : sp) {
    auto b = std::min<std::size_t>(static_cast<std::size_t>(s / width),
                                   bins - 1);
    r.hist.counts[b] += 1.0;
  }
  const double norm = 1.0 / (static_cast<double>(sp.size()) * width);
  for (double& c : r.hist.counts) c *= norm;

  // KS distance between the empirical spacing CDF and the surmise CDF
  std::sort(sp.begin(), sp.end());
  const double n = static_cast<double>(sp.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const double F = wigner_surmise_cdf(sp[i]);
    ks = std::max(ks, std::abs(F - static_cast<double>(i) / n));
    ks = std::max(ks, std::abs(F - static_cast<double>(i + 1) / n));
  }
  r.ks_stat = ks;
  return r;
}

Histogram pair_correlation(const UnfoldedSequence& seq, double x_max,
                           double bin_width) {
  if (!(bin_width > 0.0) || !(bin_width <= x_max))
    throw std::invalid_argument("pair_correlation: need 0 < bin_width <= x_max");
  if (seq.values.size() < 1000)
    throw insufficient_data_error("pair_correlation: need >= 1000 zeros");

  const auto bins = static_cast<std::size_t>(std::ceil(x_max / bin_width - 1e-12));
  Histogram h;
  h.n_samples = seq.values.size();
  h.bin_edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) h.bin_edges[b] = b * bin_width;
  h.counts.assign(bins, 0.0);

  // ordered pairs m > n with positive difference <= x_max (two-pointer)
  const auto& x = seq.values;
  std::size_t lo = 0;
  for (std::size_t m = 1; m < x.size(); ++m) {
    while (x[m] - x[lo] > x_max) ++lo;
    for (std::size_t n = lo; n < m; ++n) {
      const double d = x[m] - x[n];
      if (d <= 0.0) continue;
      auto b = std::min<std::size_t>(static_cast<std::size_t>(d / bin_width),
                                     bins - 1);
      h.counts[b] += 1.0;
    }
  }
  const double norm = 1.0 / (static_cast<double>(x.size()) * bin_width);
  for (double& c : h.counts) c *= norm;
  return h;
}

void write_spacing_csv(const SpacingResult& r, std::ostream& out) {
  out << "# nearest-neighbour spacing density of unfolded zeros vs GUE "
         "Wigner surmise p(s) = (32/pi^2) s^2 exp(-4 s^2/pi)\n";
  out << "# units: unfolded spacing (mean spacing 1); n_samples="
      << r.hist.n_samples << " ks_stat=" << fmt_sig12(r.ks_stat) << "\n";
  out << "bin_left,bin_right,density,reference_value\n";
  for (std::size_t b = 0; b < r.hist.counts.size(); ++b) {
    const double mid = 0.5 * (r.hist.bin_edges[b] + r.hist.bin_edges[b + 1]);
    out << fmt_sig12(r.hist.bin_edges[b]) << ','
        << fmt_sig12(r.hist.bin_edges[b + 1]) << ','
        << fmt_sig12(r.hist.counts[b]) << ','
        << fmt_sig12(wigner_surmise_pdf(mid)) << "\n";
  }
}

void write_pair_correlation_csv(const Histogram& h, std::ostream& out) {
  out << "# pair correlation of unfolded zeros vs R2(x) = 1 - "
         "(sin(pi x)/(pi x))^2\n";
  out << "# units: unfolded separation; density per unit length per zero; "
         "n_samples=" << h.n_samples << "\n";
  out << "bin_left,bin_right,density,reference_value\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    const double mid = 0.5 * (h.bin_edges[b] + h.bin_edges[b + 1]);
    out << fmt_sig12(h.bin_edges[b]) << ',' << fmt_sig12(h.bin_edges[b + 1])
        << ',' << fmt_sig12(h.counts[b]) << ','
        << fmt_sig12(pair_correlation_r2(mid)) << "\n";
  }
}

}  // namespace rsl
