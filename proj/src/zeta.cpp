#include "rsl/zeta.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "rsl/errors.hpp"
#include "rsl/kernels.hpp"

namespace rsl {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// terms ceiling set by the long-double range of the (3+sqrt8)^n weight
constexpr int kMaxEtaTerms = 6000;

// shared log table: ln_table()[k] = log(k+1)
const std::vector<double>& ln_table(std::size_t need) {
  static std::vector<double> table;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  const std::size_t old = table.size();
  if (old < need) {
    table.resize(need);
    for (std::size_t k = old; k < need; ++k)
      table[k] = std::log(static_cast<double>(k + 1));
  }
  return table;
}

// eta(s), t = Im s >= 0, via the Chebyshev-weighted average of partial sums
// (Cohen-Rodriguez Villegas-Zagier form of Borwein acceleration): the
// weights c_k/d alternate in sign and telescope into averaged partial sums;
// the error is ~(3+sqrt8)^{-n} e^{pi t/2}.
cplx eta_accelerated(double sigma, double t, int n) {
  const auto& ln = ln_table(static_cast<std::size_t>(n));
  std::vector<double> re(n), im(n);
  kernels::complex_pow_terms(std::span(ln.data(), static_cast<std::size_t>(n)),
                             sigma, t, re.data(), im.data());

  const long double q = 3.0L + 2.0L * sqrtl(2.0L);
  long double d = powl(q, static_cast<long double>(n));
  d = (d + 1.0L / d) * 0.5L;
  long double b = -1.0L, c = -d;
  double acc_re = 0.0, acc_im = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const double w = static_cast<double>(c / d);
    acc_re += w * re[k];
    acc_im += w * im[k];
    b *= (k + n) * (k - n) / ((k + 0.5L) * (k + 1.0L));
  }
  return {acc_re, acc_im};
}

}  // namespace

int zeta_eta_terms(double t, int digits) {
  const double at = std::abs(t);
  const double ln_q = 1.7627471740390860504;  // log(3 + sqrt 8)
  const double need = (M_PI * at / 2.0 + std::log(3.0 * (1.0 + 2.0 * at)) +
                       digits * 2.302585092994046) /
                      ln_q;
  const int n = static_cast<int>(need) + 2;
  return std::min(std::max(n, 16), kMaxEtaTerms);
}

cplx zeta_eta(cplx s, int terms) {
  if (!(s.real() > 0.0))
    throw domain_error("zeta_eta: requires Re s > 0");
  if (s == cplx(1.0, 0.0)) throw domain_error("zeta_eta: pole at s = 1");
  if (terms < 10) throw std::invalid_argument("zeta_eta: terms must be >= 10");
  if (terms > kMaxEtaTerms)
    throw std::invalid_argument("zeta_eta: terms beyond acceleration range");

  // evaluate at t = |Im s| and reflect, so conj symmetry is exact
  const double t = std::abs(s.imag());
  const cplx eta = eta_accelerated(s.real(), t, terms);

  // 1 - 2^{1-s}
  const double l2 = 0.69314718055994530942;
  const double r = std::exp((1.0 - s.real()) * l2);
  const cplx denom = cplx(1.0 - r * std::cos(t * l2), r * std::sin(t * l2));
  if (std::abs(denom) < 1e-10)
    throw accuracy_error("zeta_eta: near a zero of 1 - 2^{1-s}",
                         std::abs(denom));
  cplx z = eta / denom;
  if (s.imag() < 0.0) z = std::conj(z);
  return z;
}

cplx euler_product_partial(cplx s, const PrimeTable& table) {
  if (!(s.real() > 1.0))
    throw domain_error("euler_product_partial: diverges for Re s <= 1");
  cplx prod = 1.0;
  for (std::uint64_t p : table.primes) {
    const cplx pw = std::exp(-s * std::log(static_cast<double>(p)));
    prod *= 1.0 / (1.0 - pw);
  }
  return prod;
}

namespace {

// Riemann-Siegel C0 correction Psi(p) = cos(2pi(p^2 - p - 1/16))/cos(2pi p),
// with the removable points p = 1/4, 3/4 handled by local averaging.
double rs_c0(double p) {
  const double den = std::cos(kTwoPi * p);
  if (std::abs(den) < 1e-5) {
    const double eps = 1e-4;
    return 0.5 * (rs_c0(p - eps) + rs_c0(p + eps));
  }
  return std::cos(kTwoPi * (p * p - p - 0.0625)) / den;
}

struct RsTables {
  std::vector<double> ln;        // log n, n = 1..N
  std::vector<double> inv_sqrt;  // 1/sqrt(n)
};

const RsTables& rs_tables(std::size_t need) {
  static RsTables t;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  const std::size_t old = t.ln.size();
  if (old < need) {
    t.ln.resize(need);
    t.inv_sqrt.resize(need);
    for (std::size_t k = old; k < need; ++k) {
      t.ln[k] = std::log(static_cast<double>(k + 1));
      t.inv_sqrt[k] = 1.0 / std::sqrt(static_cast<double>(k + 1));
    }
  }
  return t;
}

}  // namespace

double hardy_z_rs(double t) {
  t = std::abs(t);
  const double a = std::sqrt(t / kTwoPi);
  const auto N = static_cast<std::size_t>(a);
  const double p = a - static_cast<double>(N);
  const double theta = rs_theta(t);
  double z = 0.0;
  if (N > 0) {
    const auto& tab = rs_tables(N);
    z = 2.0 * kernels::phase_cos_sum(std::span(tab.ln.data(), N),
                                     std::span(tab.inv_sqrt.data(), N), t,
                                     theta);
  }
  const double corr = rs_c0(p) / std::sqrt(a);
  return (N % 2 == 0) ? z - corr : z + corr;
}

double hardy_z_eta(double t) {
  t = std::abs(t);
  const cplx zeta = zeta_eta(cplx(0.5, t), zeta_eta_terms(t));
  const double theta = rs_theta(t);
  return std::cos(theta) * zeta.real() - std::sin(theta) * zeta.imag();
}

double hardy_z(double t) {
  return std::abs(t) < HARDY_Z_SWITCH ? hardy_z_eta(t) : hardy_z_rs(t);
}

double xi_critical(double E) {
  const double ae = std::abs(E);
  const double gamma_abs =
      std::exp(log_gamma(cplx(0.25, ae / 2.0)).real());
  constexpr double kPiQuarterRoot = 0.75112554446494248286;  // pi^{-1/4}
  return -0.5 * (E * E + 0.25) * kPiQuarterRoot * gamma_abs * hardy_z(ae);
}

}  // namespace rsl
