// Batch CLI: every evaluator exposed as a subcommand emitting plot-ready
// CSV (or JSON for structured reports). Output formatting is fixed at 12
// significant digits and summation orders are fixed, so identical
// invocations produce byte-identical files.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsl/errors.hpp"
#include "rsl/landau.hpp"
#include "rsl/primes.hpp"
#include "rsl/stats.hpp"
#include "rsl/trace.hpp"
#include "rsl/util.hpp"
#include "rsl/zeros.hpp"
#include "rsl/zeta.hpp"

namespace {

using nlohmann::json;

struct OutFile {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;

  explicit OutFile(const std::string& path) {
    if (!path.empty() && path != "-") {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw std::runtime_error("cannot open output file: " + path);
      os = file.get();
    }
  }
  std::ostream& stream() { return *os; }
};

double num12(double v) { return std::stod(rsl::fmt_sig12(v)); }

void report_warnings(const rsl::ZeroTable& t) {
  for (const auto& w : t.warnings) std::cerr << "warning: " << w.message << "\n";
}

bool header_matches(const rsl::ZeroTable& cached, double t_max,
                    double refine_tol) {
  return rsl::fmt_sig12(cached.t_max) == rsl::fmt_sig12(t_max) &&
         rsl::fmt_sig12(cached.refine_tol) == rsl::fmt_sig12(refine_tol);
}

// Zero table for subcommands that consume one: an explicit file must cover
// the requested height; otherwise compute it on the spot.
rsl::ZeroTable obtain_zeros(const std::string& path, double t_needed,
                            double refine_tol = 1e-10) {
  if (!path.empty()) {
    rsl::ZeroTable t = rsl::load_zero_table(path);
    if (t.t_max + 1e-9 < t_needed)
      throw std::runtime_error("zero table " + path + " stops at t_max=" +
                               rsl::fmt_sig12(t.t_max) + ", need " +
                               rsl::fmt_sig12(t_needed));
    return t;
  }
  rsl::ZeroTable t = rsl::find_zeros(std::max(t_needed, 15.0), 8.0, refine_tol);
  report_warnings(t);
  return t;
}

int run(int argc, char** argv) {
  CLI::App app{"Riemann spectral lab: critical-line zeros, trace formulas, "
               "GUE statistics and the Landau-model realization of xp"};
  app.require_subcommand(1);
  app.failure_message([](const CLI::App*, const CLI::Error& e) {
    return std::string("error: ") + e.what() + "\n";
  });

  // ---- zeros ----
  auto* sc_zeros = app.add_subcommand("zeros", "compute critical-line zero ordinates");
  double z_tmax = 100.0, z_gf = 8.0, z_tol = 1e-10;
  std::string z_cache, z_out;
  sc_zeros->add_option("--t-max", z_tmax, "scan ceiling (>= 15)")->required();
  sc_zeros->add_option("--grid-factor", z_gf, "grid points per mean spacing");
  sc_zeros->add_option("--refine-tol", z_tol, "bisection width target");
  sc_zeros->add_option("--cache", z_cache, "zero-table cache file (reused when the header matches)");
  sc_zeros->add_option("--out", z_out, "output path (default stdout)");

  // ---- counts ----
  auto* sc_counts = app.add_subcommand("counts", "semiclassical counting functions vs the zero staircase");
  std::string c_model, c_zeros, c_out;
  double c_emax = 0.0, c_lambda = 0.0, c_L = 0.0, c_ell = 0.0;
  int c_samples = 400;
  bool c_maslov = false;
  sc_counts->add_option("--model", c_model, "bk|connes|landau")->required()
      ->check(CLI::IsMember({"bk", "connes", "landau"}));
  sc_counts->add_option("--e-max", c_emax, "top of the energy range")->required();
  sc_counts->add_option("--lambda", c_lambda, "Connes cutoff Lambda");
  sc_counts->add_option("--L", c_L, "box half-size");
  sc_counts->add_option("--ell", c_ell, "magnetic length");
  sc_counts->add_flag("--maslov", c_maslov, "apply the -1/8 quadrant phase (bk)");
  sc_counts->add_option("--samples", c_samples, "number of E samples");
  sc_counts->add_option("--zeros", c_zeros, "zero-table file for the staircase column");
  sc_counts->add_option("--out", c_out, "output path (default stdout)");

  // ---- fluct ----
  auto* sc_fluct = app.add_subcommand("fluct", "prime fluctuation sum vs staircase remainder");
  double f_emin = 100.0, f_emax = 300.0, f_w = 0.2;
  std::uint64_t f_pmax = 10000;
  int f_mmax = 5, f_samples = 2001;
  std::string f_zeros, f_out;
  sc_fluct->add_option("--e-min", f_emin)->required();
  sc_fluct->add_option("--e-max", f_emax)->required();
  sc_fluct->add_option("--p-max", f_pmax, "prime cutoff")->required();
  sc_fluct->add_option("--m-max", f_mmax, "prime-power cutoff")->required();
  sc_fluct->add_option("--smooth", f_w, "Gaussian smoothing width in E");
  sc_fluct->add_option("--samples", f_samples, "number of E samples");
  sc_fluct->add_option("--zeros", f_zeros, "zero-table file");
  sc_fluct->add_option("--out", f_out, "output path (default stdout)");

  // ---- stats ----
  auto* sc_stats = app.add_subcommand("stats", "GUE statistics of unfolded zeros");
  auto* st_sp = sc_stats->add_subcommand("spacing", "nearest-neighbour spacing histogram + KS vs the Wigner surmise");
  auto* st_pc = sc_stats->add_subcommand("paircorr", "pair correlation histogram vs 1 - (sin pi x/pi x)^2");
  sc_stats->require_subcommand(1);
  std::string s_zeros, s_out;
  int s_bins = 32, s_drop = 50;
  double s_xmax = 2.0, s_binw = 0.25;
  for (auto* sub : {st_sp, st_pc}) {
    sub->add_option("--zeros", s_zeros, "zero-table file")->required();
    sub->add_option("--drop", s_drop, "lowest zeros to discard (non-universal)");
    sub->add_option("--out", s_out, "output path (default stdout)");
  }
  st_sp->add_option("--bins", s_bins, "histogram bins");
  st_pc->add_option("--x-max", s_xmax, "separation ceiling");
  st_pc->add_option("--bin-width", s_binw, "histogram bin width");

  // ---- explicit ----
  auto* sc_exp = app.add_subcommand("explicit", "two-sided Riemann-Weil explicit-formula residual (JSON)");
  double e_sigma = 5.0, e_zmax = 60.0, e_umax = 3.0, e_qtol = 1e-9, e_qbound = 0.0;
  std::string e_zeros, e_out;
  sc_exp->add_option("--sigma", e_sigma, "Gaussian test-function width")->required();
  sc_exp->add_option("--zero-max", e_zmax, "zero-sum cutoff")->required();
  sc_exp->add_option("--u-max", e_umax, "prime-power cutoff in n log p")->required();
  sc_exp->add_option("--quad-tol", e_qtol, "digamma-integral tolerance")->required();
  sc_exp->add_option("--quad-bound", e_qbound, "digamma-integral cutoff K (0 = auto)");
  sc_exp->add_option("--zeros", e_zeros, "zero-table file");
  sc_exp->add_option("--out", e_out, "output path (default stdout)");

  // ---- landau ----
  auto* sc_landau = app.add_subcommand("landau", "planar Landau model: modes, trajectories, boundary spectrum");
  sc_landau->require_subcommand(1);
  rsl::LandauParams lp;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--mu", lp.mu, "mass");
    sub->add_option("--charge", lp.charge, "charge e");
    sub->add_option("--B", lp.B, "magnetic field");
    sub->add_option("--c", lp.c, "speed of light");
    sub->add_option("--lambda", lp.lambda, "saddle coupling");
    sub->add_option("--hbar", lp.hbar, "hbar");
  };
  auto* ld_modes = sc_landau->add_subcommand("modes", "normal-mode frequencies");
  auto* ld_traj = sc_landau->add_subcommand("trajectory", "integrate the 2D dynamics");
  auto* ld_spec = sc_landau->add_subcommand("spectrum", "boundary-phase quantization levels");
  std::string l_out;
  add_params(ld_modes);
  add_params(ld_traj);
  ld_modes->add_option("--out", l_out, "output path (default stdout)");
  double t_x0 = 1.0, t_y0 = 1.0, t_vx0 = 0.0, t_vy0 = 0.0, t_dt = 0.0, t_T = 1.0;
  std::size_t t_stride = 1;
  bool t_slow = false;
  ld_traj->add_option("--x0", t_x0);
  ld_traj->add_option("--y0", t_y0);
  ld_traj->add_option("--vx0", t_vx0);
  ld_traj->add_option("--vy0", t_vy0);
  ld_traj->add_flag("--slow-init", t_slow, "start on the drift manifold (vx,vy from x0,y0)");
  ld_traj->add_option("--dt", t_dt, "step (0 = drift-bounded choice for 1e-6 over T)");
  ld_traj->add_option("--T", t_T, "horizon")->required();
  ld_traj->add_option("--stride", t_stride, "record every k-th step");
  ld_traj->add_option("--out", l_out, "output path (default stdout)");
  double sp_rho = 1000.0, sp_emax = 100.0;
  ld_spec->add_option("--rho", sp_rho, "boundary ratio L^2/(2 l^2)")->required();
  ld_spec->add_option("--e-max", sp_emax, "energy ceiling")->required();
  ld_spec->add_option("--out", l_out, "output path (default stdout)");

  // ---- analogy ----
  auto* sc_analogy = app.add_subcommand("analogy", "orbit-sum weight vs arithmetic weight per prime power");
  std::uint64_t a_pmax = 10;
  int a_nmax = 1;
  std::string a_out;
  sc_analogy->add_option("--p-max", a_pmax)->required();
  sc_analogy->add_option("--n-max", a_nmax)->required();
  sc_analogy->add_option("--out", a_out, "output path (default stdout)");

  // ---- selberg ----
  auto* sc_selberg = app.add_subcommand("selberg", "truncated Selberg zeta product over a length spectrum (JSON)");
  std::string sl_lengths, sl_out;
  double sl_s = 2.0, sl_sim = 0.0;
  int sl_mmax = 10;
  sc_selberg->add_option("--lengths", sl_lengths, "length-spectrum file")->required();
  sc_selberg->add_option("--s", sl_s, "Re s (> 1)")->required();
  sc_selberg->add_option("--s-im", sl_sim, "Im s");
  sc_selberg->add_option("--m-max", sl_mmax, "inner product cutoff");
  sc_selberg->add_option("--out", sl_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (*sc_zeros) {
    rsl::ZeroTable table;
    bool reused = false;
    if (!z_cache.empty() && std::filesystem::exists(z_cache)) {
      rsl::ZeroTable cached = rsl::load_zero_table(z_cache);
      if (header_matches(cached, z_tmax, z_tol)) {
        table = std::move(cached);
        reused = true;
      }
    }
    if (!reused) {
      table = rsl::find_zeros(z_tmax, z_gf, z_tol);
      report_warnings(table);
      if (!z_cache.empty()) rsl::save_zero_table(table, z_cache);
    }
    OutFile out(z_out);
    rsl::save_zero_table(table, out.stream());
    return 0;
  }

  if (*sc_counts) {
    rsl::ZeroTable table = obtain_zeros(c_zeros, c_emax);
    OutFile out(c_out);
    auto& os = out.stream();
    if (c_model == "bk") {
      os << "# berry-keating counting n(E) = (E/2pi)(log(E/2pi) - 1) + 1"
         << (c_maslov ? " - 1/8" : "") << "\n";
    } else if (c_model == "connes") {
      if (!(c_lambda > 0.0)) throw std::runtime_error("counts: --lambda required for model connes");
      os << "# connes counting n(E) = (E/2pi) log(Lambda^2/2pi) - (E/2pi)(log(E/2pi) - 1), Lambda="
         << rsl::fmt_sig12(c_lambda) << "\n";
    } else {
      if (!(c_L > 0.0) || !(c_ell > 0.0)) throw std::runtime_error("counts: --L and --ell required for model landau");
      os << "# landau flux counting n(E) = (E/2pi) log(L^2/(2pi l^2)) - (E/2pi)(log(E/2pi) - 1), L="
         << rsl::fmt_sig12(c_L) << " ell=" << rsl::fmt_sig12(c_ell) << "\n";
    }
    os << "# units: E = zero ordinate scale; staircase = number of zeros <= E\n";
    os << "E,count,staircase\n";
    for (int i = 0; i < c_samples; ++i) {
      const double E = c_emax * (i + 1) / c_samples;
      double v = 0.0;
      if (c_model == "bk") v = rsl::count_bk(E, c_maslov);
      else if (c_model == "connes") v = rsl::count_connes(E, c_lambda);
      else v = rsl::count_landau(E, c_L, c_ell);
      os << rsl::fmt_sig12(E) << ',' << rsl::fmt_sig12(v) << ','
         << rsl::fmt_sig12(rsl::staircase(table, E)) << "\n";
    }
    return 0;
  }

  if (*sc_fluct) {
    if (!(f_emax > f_emin)) throw std::runtime_error("fluct: need e-max > e-min");
    rsl::ZeroTable table = obtain_zeros(f_zeros, f_emax + 8.0 * f_w + 5.0);
    const rsl::PrimeTable primes = rsl::sieve(f_pmax);
    const rsl::FluctSum raw(primes, f_mmax);
    const rsl::FluctSum damped(primes, f_mmax, f_w);
    std::vector<double> formula(f_samples), stair(f_samples);
    OutFile out(f_out);
    auto& os = out.stream();
    os << "# prime fluctuation sum -(1/pi) sum_p sum_m sin(m E log p)/(m p^(m/2)) "
          "vs staircase minus smooth count theta(E)/pi + 1\n";
    os << "# units: E = zero ordinate scale; smoothed columns use a Gaussian kernel, width "
       << rsl::fmt_sig12(f_w) << "\n";
    std::vector<std::string> lines(f_samples);
    for (int i = 0; i < f_samples; ++i) {
      const double E = f_emin + (f_emax - f_emin) * i / (f_samples - 1);
      const double fr = raw(E);
      const double fs = damped(E);
      const double dr = rsl::staircase(table, E) - rsl::smooth_count(E);
      const double ds = rsl::staircase_smoothed(table, E, f_w) - rsl::smooth_count(E);
      formula[i] = fs;
      stair[i] = ds;
      lines[i] = rsl::fmt_sig12(E) + ',' + rsl::fmt_sig12(fr) + ',' +
                 rsl::fmt_sig12(fs) + ',' + rsl::fmt_sig12(dr) + ',' +
                 rsl::fmt_sig12(ds) + '\n';
    }
    os << "# correlation_smoothed=" << rsl::fmt_sig12(rsl::correlation(formula, stair)) << "\n";
    os << "E,fluct_formula,fluct_formula_smoothed,staircase_delta,staircase_delta_smoothed\n";
    for (const auto& l : lines) os << l;
    return 0;
  }

  if (*sc_stats) {
    rsl::ZeroTable table = rsl::load_zero_table(s_zeros);
    if (s_drop > 0 && static_cast<std::size_t>(s_drop) < table.zeros.size())
      table.zeros.erase(table.zeros.begin(), table.zeros.begin() + s_drop);
    const rsl::UnfoldedSequence seq = rsl::unfold(table);
    OutFile out(s_out);
    if (*st_sp) {
      rsl::write_spacing_csv(rsl::spacing_distribution(seq, s_bins), out.stream());
    } else {
      rsl::write_pair_correlation_csv(rsl::pair_correlation(seq, s_xmax, s_binw), out.stream());
    }
    return 0;
  }

  if (*sc_exp) {
    rsl::ZeroTable table = obtain_zeros(e_zeros, e_zmax).below(e_zmax);
    const auto p_limit = static_cast<std::uint64_t>(std::ceil(std::exp(e_umax))) + 1;
    const rsl::PrimeTable primes = rsl::sieve(std::max<std::uint64_t>(p_limit, 2));
    const auto powers = rsl::prime_powers(primes, e_umax);
    const rsl::GaussianTest h(e_sigma);
    const auto rep = rsl::explicit_formula_residual(h, table, powers, e_qbound, e_qtol);
    json j;
    j["sigma"] = num12(e_sigma);
    j["zero_cutoff"] = num12(e_zmax);
    j["zeros_used"] = table.zeros.size();
    j["u_max"] = num12(e_umax);
    j["prime_powers_used"] = powers.size();
    j["quad_tol"] = e_qtol;
    j["lhs"] = num12(rep.lhs);
    j["rhs"] = num12(rep.rhs);
    j["residual"] = rep.residual;
    j["terms"] = {{"zero_sum", num12(rep.zero_sum)},
                  {"digamma_integral", num12(rep.terms.digamma_integral)},
                  {"h_imag_pair", num12(rep.terms.h_imag_pair)},
                  {"log_pi_term", num12(rep.terms.log_pi_term)},
                  {"prime_sum", num12(rep.terms.prime_sum)}};
    OutFile out(e_out);
    out.stream() << j.dump(2) << "\n";
    return 0;
  }

  if (*sc_landau) {
    OutFile out(l_out);
    auto& os = out.stream();
    if (*ld_modes) {
      const rsl::NormalModes m = rsl::landau_normal_modes(lp);
      os << "# normal modes of mu^2 w^4 - (eB/c)^2 w^2 - (e lambda)^2 = 0\n";
      os << "# units: angular frequency in the parameter system handed in\n";
      os << "omega_c,omega_h_abs,adiabatic_ratio,magnetic_length\n";
      os << rsl::fmt_sig12(m.omega_c) << ',' << rsl::fmt_sig12(m.omega_h_abs)
         << ',' << rsl::fmt_sig12(m.adiabatic_ratio()) << ','
         << rsl::fmt_sig12(lp.magnetic_length()) << "\n";
    } else if (*ld_traj) {
      if (t_slow) rsl::landau_slow_init(lp, t_x0, t_y0, t_vx0, t_vy0);
      double dt = t_dt;
      if (dt <= 0.0) dt = rsl::landau_drift_bounded_step(lp, t_T, 1e-6);
      const rsl::Trajectory traj = rsl::integrate_landau(lp, t_x0, t_y0, t_vx0, t_vy0, dt, t_T);
      os << "# planar dynamics of L = (mu/2)(vx^2+vy^2) - (eB/c) vy x - e lambda x y\n";
      os << "# units: parameter system as handed in; energy = (mu/2)v^2 + e lambda x y\n";
      os << "# energy_drift=" << rsl::fmt_sig12(traj.energy_drift) << "\n";
      os << "t,x,y,vx,vy,energy\n";
      for (std::size_t i = 0; i < traj.points.size(); i += t_stride) {
        const auto& q = traj.points[i];
        os << rsl::fmt_sig12(q.t) << ',' << rsl::fmt_sig12(q.x) << ','
           << rsl::fmt_sig12(q.y) << ',' << rsl::fmt_sig12(q.vx) << ','
           << rsl::fmt_sig12(q.vy) << ',' << rsl::fmt_sig12(q.energy) << "\n";
      }
    } else {
      const rsl::SpectrumTable t = rsl::landau_spectrum(sp_rho, sp_emax);
      os << "# boundary-phase levels: Gamma(1/4+iE/2)/Gamma(1/4-iE/2) rho^(-iE) = 1, rho="
         << rsl::fmt_sig12(sp_rho) << "\n";
      os << "# units: E in hbar |omega_h|; phase_residual = |Phi(E) + 2 pi n|\n";
      os << "n,E_n,phase_residual\n";
      for (const auto& lvl : t.levels)
        os << lvl.n << ',' << rsl::fmt_sig12(lvl.energy) << ','
           << rsl::fmt_sig12(lvl.phase_residual) << "\n";
    }
    return 0;
  }

  if (*sc_analogy) {
    const rsl::PrimeTable primes = rsl::sieve(a_pmax);
    const auto rows = rsl::analogy_report(primes, a_nmax);
    OutFile out(a_out);
    auto& os = out.stream();
    os << "# orbit weight 1/(2 sinh(n log p/2)) vs arithmetic weight p^(-n/2); "
          "rel_dev = p^(-n)/(1 - p^(-n))\n";
    os << "# units: dimensionless\n";
    os << "p,n,sinh_term,power_term,rel_dev\n";
    for (const auto& r : rows)
      os << r.p << ',' << r.n << ',' << rsl::fmt_sig12(r.sinh_term) << ','
         << rsl::fmt_sig12(r.power_term) << ',' << rsl::fmt_sig12(r.rel_dev)
         << "\n";
    return 0;
  }

  if (*sc_selberg) {
    const rsl::LengthSpectrum spec = rsl::load_length_spectrum(sl_lengths);
    const auto v = rsl::selberg_zeta_partial(spec, rsl::cplx(sl_s, sl_sim), sl_mmax);
    json j;
    j["s"] = {num12(sl_s), num12(sl_sim)};
    j["m_max"] = sl_mmax;
    j["lengths"] = spec.lengths.size();
    j["value_re"] = num12(v.value.real());
    j["value_im"] = num12(v.value.imag());
    j["value_abs"] = num12(std::abs(v.value));
    j["tail_log_bound"] = num12(v.tail_bound);
    OutFile out(sl_out);
    out.stream() << j.dump(2) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
