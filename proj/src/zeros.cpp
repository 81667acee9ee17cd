#include "rsl/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rsl/errors.hpp"
#include "rsl/kernels.hpp"
#include "rsl/special.hpp"
#include "rsl/util.hpp"
#include "rsl/zeta.hpp"

namespace rsl {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kScanFloor = 10.0;  // below gamma_1, above the RS low-t mess

double smooth_density(double t) {  // theta'(t)/pi, asymptotic form
  return std::max(0.5 * std::log(std::max(t, 6.5) / kTwoPi) / M_PI, 0.03);
}

double bisect_zero(double a, double b, double fa, double tol) {
  // fa and f(b) have opposite signs
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const double fm = hardy_z(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

long expected_count(double T) {  // round(theta/pi + 1)
  return std::lround(rs_theta(T) / M_PI + 1.0);
}

}  // namespace

std::size_t ZeroTable::count_below(double t) const {
  return static_cast<std::size_t>(
      std::upper_bound(zeros.begin(), zeros.end(), t) - zeros.begin());
}

ZeroTable ZeroTable::below(double t) const {
  ZeroTable out;
  out.zeros.assign(zeros.begin(), zeros.begin() + count_below(t));
  out.t_max = std::min(t, t_max);
  out.refine_tol = refine_tol;
  return out;
}

ZeroTable find_zeros(double t_max, double grid_factor, double refine_tol,
                     unsigned threads) {
  if (!(t_max >= 15.0)) throw domain_error("find_zeros: t_max must be >= 15");
  if (!(grid_factor > 0.0) || !(refine_tol > 0.0))
    throw std::invalid_argument("find_zeros: bad grid_factor/refine_tol");
  threads = resolve_threads(threads);

  // deterministic global grid; local step = mean spacing / grid_factor
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(8.0 * grid_factor / 6.0 * t_max) + 64);
  for (double t = kScanFloor; t < t_max;) {
    grid.push_back(t);
    t += 1.0 / (smooth_density(t) * grid_factor);
  }
  grid.push_back(t_max);

  std::vector<double> zval(grid.size());
  {
    const std::size_t chunk = 512;
    const std::size_t n_chunks = (grid.size() + chunk - 1) / chunk;
    run_chunked(n_chunks, threads, [&](std::size_t ci) {
      const std::size_t lo = ci * chunk;
      const std::size_t hi = std::min(lo + chunk, grid.size());
      for (std::size_t i = lo; i < hi; ++i) zval[i] = hardy_z(grid[i]);
    });
  }

  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (zval[i] == 0.0 || (zval[i] < 0.0) != (zval[i + 1] < 0.0))
      brackets.emplace_back(grid[i], grid[i + 1]);
  }

  std::vector<double> zeros(brackets.size());
  run_chunked(brackets.size(), threads, [&](std::size_t i) {
    const auto [a, b] = brackets[i];
    zeros[i] = bisect_zero(a, b, hardy_z(a), refine_tol);
  });
  std::sort(zeros.begin(), zeros.end());

  // rescue pass: a pair the coarse grid stepped over shows up as a
  // smooth-count increment ~2 larger than the located crossings explain
  const double deficit_trigger = 1.45;
  for (int attempt = 0; attempt < 3; ++attempt) {
    bool inserted = false;
    std::vector<double> fresh;
    const double fine = 256.0 * std::pow(4.0, attempt);
    auto scan_gap = [&](double a, double b, double expect_minus_found) {
      if (expect_minus_found < deficit_trigger || b - a <= 4.0 * refine_tol)
        return;
      const int steps = static_cast<int>(fine);
      double prev_t = a + (b - a) * 1e-9;
      double prev_z = hardy_z(prev_t);
      for (int k = 1; k <= steps; ++k) {
        const double t = a + (b - a) * (k - 1e-9) / steps;
        const double z = hardy_z(t);
        if ((prev_z < 0.0) != (z < 0.0)) {
          fresh.push_back(bisect_zero(prev_t, t, prev_z, refine_tol));
          inserted = true;
        }
        prev_t = t;
        prev_z = z;
      }
    };
    const double theta_floor = rs_theta(kScanFloor) / M_PI;
    double prev = kScanFloor, prev_theta = theta_floor;
    for (double z : zeros) {
      const double th = rs_theta(z) / M_PI;
      scan_gap(prev, z, th - prev_theta - 1.0);
      prev = z;
      prev_theta = th;
    }
    scan_gap(prev, t_max, rs_theta(t_max) / M_PI - prev_theta);
    if (!inserted) break;
    zeros.insert(zeros.end(), fresh.begin(), fresh.end());
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end(),
                            [&](double x, double y) {
                              return std::abs(x - y) < 2.0 * refine_tol;
                            }),
                zeros.end());
  }

  ZeroTable table;
  table.zeros = std::move(zeros);
  table.t_max = t_max;
  table.refine_tol = refine_tol;

  // count validation at checkpoints
  std::vector<double> checkpoints;
  for (double T : {50.0, 100.0, 200.0, 500.0})
    if (T <= t_max) checkpoints.push_back(T);
  for (double T = 1000.0; T < t_max; T += 500.0) checkpoints.push_back(T);
  checkpoints.push_back(t_max);
  double prev_T = kScanFloor;
  for (double T : checkpoints) {
    const long found = static_cast<long>(table.count_below(T));
    const long expected = expected_count(T);
    if (std::labs(found - expected) > 2) {
      ZeroScanWarning w;
      w.t_lo = prev_T;
      w.t_hi = T;
      w.expected = expected;
      w.found = found;
      std::ostringstream msg;
      msg << "zero count below T=" << T << " is " << found << ", expected "
          << expected << " (+-2); scan of (" << prev_T << ", " << T
          << "] may have missed zeros";
      w.message = msg.str();
      table.warnings.push_back(std::move(w));
    }
    prev_T = T;
  }
  return table;
}

double smooth_count(double E) {
  if (!(E > 0.0)) throw domain_error("smooth_count: E must be > 0");
  return rs_theta(E) / M_PI + 1.0;
}

double smooth_count_asymptotic(double E) {
  if (!(E > 0.0)) throw domain_error("smooth_count_asymptotic: E must be > 0");
  const double x = E / kTwoPi;
  return x * (std::log(x) - 1.0) + 0.875;
}

double staircase(const ZeroTable& zeros, double E) {
  return static_cast<double>(zeros.count_below(E));
}

double staircase_smoothed(const ZeroTable& zeros, double E, double w) {
  if (!(w > 0.0)) throw std::invalid_argument("staircase_smoothed: w <= 0");
  const auto& zs = zeros.zeros;
  const double lo = E - 8.0 * w, hi = E + 8.0 * w;
  const auto il = std::lower_bound(zs.begin(), zs.end(), lo);
  const auto ih = std::upper_bound(zs.begin(), zs.end(), hi);
  double s = static_cast<double>(il - zs.begin());
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  for (auto it = il; it != ih; ++it)
    s += 0.5 * std::erfc((*it - E) / w * inv_sqrt2);
  return s;
}

FluctSum::FluctSum(const PrimeTable& table, int m_max, double smooth_w) {
  if (m_max < 1) throw std::invalid_argument("FluctSum: m_max must be >= 1");
  for (std::uint64_t p : table.primes) {
    const double lp = std::log(static_cast<double>(p));
    for (int m = 1; m <= m_max; ++m) {
      const double u = m * lp;
      double c = std::exp(-0.5 * u) / m;  // p^{-m/2}/m
      if (smooth_w > 0.0) c *= std::exp(-0.5 * u * u * smooth_w * smooth_w);
      if (c < 1e-18) break;
      freq_.push_back(u);
      coeff_.push_back(c);
    }
  }
}

double FluctSum::operator()(double E) const {
  if (!(E >= 0.0)) throw domain_error("fluct_sum: E must be >= 0");
  return -kernels::weighted_sin_sum(freq_, coeff_, E) / M_PI;
}

double fluct_sum(double E, const PrimeTable& table, int m_max) {
  return FluctSum(table, m_max)(E);
}

double fluct_sum_smoothed(double E, const PrimeTable& table, int m_max,
                          double w) {
  return FluctSum(table, m_max, w)(E);
}

void save_zero_table(const ZeroTable& table, std::ostream& out) {
  out << "# t_max=" << fmt_sig12(table.t_max) << "\n";
  out << "# refine_tol=" << fmt_sig12(table.refine_tol) << "\n";
  out << "# count=" << table.zeros.size() << "\n";
  for (double z : table.zeros) out << fmt_fixed12(z) << "\n";
}

void save_zero_table(const ZeroTable& table, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write zero table: " + path);
  save_zero_table(table, f);
}

ZeroTable load_zero_table(std::istream& in) {
  ZeroTable table;
  std::string line;
  std::size_t declared = 0;
  bool have_count = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(1, eq - 1);
      const std::string val = line.substr(eq + 1);
      if (key.find("t_max") != std::string::npos)
        table.t_max = std::stod(val);
      else if (key.find("refine_tol") != std::string::npos)
        table.refine_tol = std::stod(val);
      else if (key.find("count") != std::string::npos) {
        declared = std::stoul(val);
        have_count = true;
      }
      continue;
    }
    table.zeros.push_back(std::stod(line));
  }
  if (have_count && declared != table.zeros.size())
    throw std::runtime_error("zero table: count header disagrees with body");
  if (!std::is_sorted(table.zeros.begin(), table.zeros.end()))
    throw std::runtime_error("zero table: ordinates not ascending");
  return table;
}

ZeroTable load_zero_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read zero table: " + path);
  return load_zero_table(f);
}

}  // namespace rsl
