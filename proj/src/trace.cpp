#include "rsl/trace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "rsl/errors.hpp"
#include "rsl/kernels.hpp"
#include "rsl/quadrature.hpp"

namespace rsl {

namespace {
constexpr double kLogPi = 1.1447298858494001741434273513531;
constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;
}

GaussianTest::GaussianTest(double s) : sigma(s) {
  if (!(s > 0.0)) throw domain_error("GaussianTest: sigma must be > 0");
}

double GaussianTest::h(double k) const {
  return std::exp(-k * k / (2.0 * sigma * sigma));
}

double GaussianTest::g(double u) const {
  return sigma * kInvSqrt2Pi * std::exp(-0.5 * sigma * sigma * u * u);
}

double GaussianTest::h_imag_half() const {
  return std::exp(1.0 / (8.0 * sigma * sigma));
}

double weil_lhs(const GaussianTest& h, const ZeroTable& zeros) {
  if (zeros.zeros.empty())
    throw insufficient_data_error("weil_lhs: empty zero table");
  const double a = 1.0 / (2.0 * h.sigma * h.sigma);
  return 2.0 * kernels::gaussian_sum(zeros.zeros, a);
}

double WeilBreakdown::total() const {
  return digamma_integral + h_imag_pair + log_pi_term - prime_sum;
}

WeilBreakdown weil_rhs(const GaussianTest& h,
                       const std::vector<PrimePower>& powers,
                       double quad_bound, double quad_tol) {
  if (!(quad_tol > 0.0)) throw std::invalid_argument("weil_rhs: quad_tol <= 0");
  double K = quad_bound;
  if (K <= 0.0) K = h.sigma * std::sqrt(2.0 * std::log(100.0 / quad_tol));
  if (h.h(K) >= quad_tol)
    throw std::invalid_argument("weil_rhs: quad_bound too small for quad_tol");

  WeilBreakdown out;
  // (1/2pi) Int_{-K}^{K} = (1/pi) Int_0^K by evenness of the integrand
  out.digamma_integral =
      adaptive_simpson(
          [&](double k) {
            return h.h(k) * digamma(cplx(0.25, 0.5 * k)).real();
          },
          0.0, K, quad_tol) /
      M_PI;
  out.h_imag_pair = 2.0 * h.h_imag_half();
  out.log_pi_term = -kLogPi * h.g(0.0);
  double ps = 0.0;  // ascending log_term order, fixed
  for (const PrimePower& pp : powers) {
    const double lp = std::log(static_cast<double>(pp.p));
    ps += lp * std::exp(-0.5 * pp.log_term) * h.g(pp.log_term);
  }
  out.prime_sum = 2.0 * ps;
  return out;
}

ExplicitFormulaReport explicit_formula_residual(
    const GaussianTest& h, const ZeroTable& zeros,
    const std::vector<PrimePower>& powers, double quad_bound,
    double quad_tol) {
  ExplicitFormulaReport r;
  r.zero_sum = weil_lhs(h, zeros);
  r.lhs = r.zero_sum;
  r.terms = weil_rhs(h, powers, quad_bound, quad_tol);
  r.rhs = r.terms.total();
  r.residual = r.lhs - r.rhs;
  return r;
}

double gutzwiller_fluct(const std::vector<OrbitData>& orbits, double E,
                        int m_max) {
  if (m_max < 1) throw std::invalid_argument("gutzwiller_fluct: m_max < 1");
  double s = 0.0;
  for (const OrbitData& o : orbits) {
    if (!(o.period > 0.0) || !(o.lyapunov > 0.0))
      throw domain_error("gutzwiller_fluct: orbit data must be positive");
    for (int m = 1; m <= m_max; ++m) {
      s += std::sin(m * E * o.period) /
           (2.0 * m * std::sinh(0.5 * m * o.lyapunov));
    }
  }
  return s / M_PI;
}

LengthSpectrum load_length_spectrum(std::istream& in) {
  LengthSpectrum spec;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    double v;
    while (ls >> v) {
      if (!(v > 0.0))
        throw domain_error("length spectrum: lengths must be positive");
      spec.lengths.push_back(v);
    }
  }
  std::sort(spec.lengths.begin(), spec.lengths.end());
  return spec;
}

LengthSpectrum load_length_spectrum(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read length spectrum: " + path);
  return load_length_spectrum(f);
}

SelbergValue selberg_zeta_partial(const LengthSpectrum& spec, cplx s,
                                  int m_max) {
  if (!(s.real() > 1.0))
    throw domain_error("selberg_zeta_partial: requires Re s > 1");
  if (m_max < 0) throw std::invalid_argument("selberg_zeta_partial: m_max < 0");
  SelbergValue out;
  out.value = 1.0;
  out.tail_bound = 0.0;
  for (double l : spec.lengths) {
    for (int m = 0; m <= m_max; ++m)
      out.value *= 1.0 - std::exp(-l * (s + static_cast<double>(m)));
    // remaining factors: |log(1-x)| <= x/(1-x), summed geometrically
    const double x0 = std::exp(-l * (s.real() + m_max + 1));
    out.tail_bound += x0 / ((1.0 - x0) * (1.0 - std::exp(-l)));
  }
  return out;
}

std::vector<AnalogyRow> analogy_report(const PrimeTable& table, int n_max) {
  if (n_max < 1) throw std::invalid_argument("analogy_report: n_max < 1");
  std::vector<AnalogyRow> rows;
  rows.reserve(table.primes.size() * n_max);
  for (std::uint64_t p : table.primes) {
    const double lp = std::log(static_cast<double>(p));
    for (int n = 1; n <= n_max; ++n) {
      AnalogyRow r;
      r.p = p;
      r.n = n;
      r.sinh_term = 1.0 / (2.0 * std::sinh(0.5 * n * lp));
      r.power_term = std::exp(-0.5 * n * lp);
      r.rel_dev = r.sinh_term / r.power_term - 1.0;
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace rsl
