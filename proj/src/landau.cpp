#include "rsl/landau.hpp"

#include <array>
#include <cmath>

#include "rsl/errors.hpp"
#include "rsl/special.hpp"

namespace rsl {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void LandauParams::validate() const {
  if (!(mu > 0.0 && charge > 0.0 && B > 0.0 && c > 0.0 && lambda > 0.0 &&
        hbar > 0.0))
    throw domain_error("LandauParams: all parameters must be positive");
}

double LandauParams::magnetic_length() const {
  return std::sqrt(hbar * c / (charge * B));
}

NormalModes landau_normal_modes(const LandauParams& p) {
  p.validate();
  // mu^2 w^4 - b^2 w^2 - (e lambda)^2 = 0, b = eB/c: the positive w^2 root
  // is the cyclotron mode, the negative one the hyperbolic mode.
  const double b = p.charge * p.B / p.c;
  const double el = p.charge * p.lambda;
  const double disc = std::sqrt(b * b * b * b + 4.0 * p.mu * p.mu * el * el);
  NormalModes m;
  m.omega_c = std::sqrt((b * b + disc) / (2.0 * p.mu * p.mu));
  // -w^2_minus = (disc - b^2)/(2 mu^2); rationalized form avoids the
  // cancellation when disc ~ b^2 (the adiabatic regime)
  m.omega_h_abs = std::sqrt(2.0) * el / std::sqrt(b * b + disc);
  return m;
}

PhaseSpacePoint xp_flow(double x0, double p0, double t) {
  const double e = std::exp(t);
  return {x0 * e, p0 / e};
}

double count_bk(double E, bool maslov) {
  if (!(E > 0.0)) throw domain_error("count_bk: E must be > 0");
  const double x = E / kTwoPi;
  return x * (std::log(x) - 1.0) + (maslov ? 0.875 : 1.0);
}

double count_connes(double E, double Lambda) {
  if (!(E > 0.0) || !(Lambda > 0.0))
    throw domain_error("count_connes: E and Lambda must be > 0");
  const double x = E / kTwoPi;
  return x * std::log(Lambda * Lambda / kTwoPi) - x * (std::log(x) - 1.0);
}

double count_landau(double E, double L, double ell) {
  if (!(E > 0.0) || !(L > ell) || !(ell > 0.0))
    throw domain_error("count_landau: need E > 0 and L > ell > 0");
  const double x = E / kTwoPi;
  return x * std::log(L * L / (kTwoPi * ell * ell)) - x * (std::log(x) - 1.0);
}

double landau_stable_step(const LandauParams& p) {
  return kTwoPi / landau_normal_modes(p).omega_c / 50.0;
}

double landau_drift_bounded_step(const LandauParams& p, double T, double eps) {
  if (!(T > 0.0) || !(eps > 0.0))
    throw std::invalid_argument("landau_drift_bounded_step: T, eps must be > 0");
  const double wc = landau_normal_modes(p).omega_c;
  // RK4 on the cyclotron mode loses ~(wc h)^6/72 of the mode energy per
  // step; over T/h steps the drift stays below eps for
  const double h = std::pow(72.0 * eps / (T * std::pow(wc, 6.0)), 0.2);
  return std::min(h, landau_stable_step(p));
}

void landau_slow_init(const LandauParams& p, double x, double y, double& vx,
                      double& vy) {
  const double s = landau_normal_modes(p).omega_h_abs;
  vx = s * x;
  vy = -s * y;
}

Trajectory integrate_landau(const LandauParams& p, double x0, double y0,
                            double vx0, double vy0, double dt, double T) {
  p.validate();
  if (!(dt > 0.0) || !(T > 0.0))
    throw std::invalid_argument("integrate_landau: dt, T must be > 0");
  const double dt_max = landau_stable_step(p);
  if (dt > dt_max)
    throw accuracy_error("integrate_landau: dt too large for the fast mode",
                         dt_max);

  const double wb = p.charge * p.B / (p.mu * p.c);   // eB/(mu c)
  const double k = p.charge * p.lambda / p.mu;       // e lambda / mu
  using State = std::array<double, 4>;               // x, y, vx, vy
  auto deriv = [&](const State& s) -> State {
    return {s[2], s[3], -wb * s[3] - k * s[1], wb * s[2] - k * s[0]};
  };
  auto energy = [&](const State& s) {
    return 0.5 * p.mu * (s[2] * s[2] + s[3] * s[3]) +
           p.charge * p.lambda * s[0] * s[1];
  };

  const auto steps = static_cast<std::size_t>(std::ceil(T / dt - 1e-9));
  Trajectory traj;
  traj.points.reserve(steps + 1);
  State s{x0, y0, vx0, vy0};
  const double e0 = energy(s);
  const double e_scale = std::max(std::abs(e0), 1e-300);
  traj.points.push_back({0.0, s[0], s[1], s[2], s[3], e0});
  for (std::size_t i = 1; i <= steps; ++i) {
    const State k1 = deriv(s);
    State tmp;
    for (int j = 0; j < 4; ++j) tmp[j] = s[j] + 0.5 * dt * k1[j];
    const State k2 = deriv(tmp);
    for (int j = 0; j < 4; ++j) tmp[j] = s[j] + 0.5 * dt * k2[j];
    const State k3 = deriv(tmp);
    for (int j = 0; j < 4; ++j) tmp[j] = s[j] + dt * k3[j];
    const State k4 = deriv(tmp);
    for (int j = 0; j < 4; ++j)
      s[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    const double e = energy(s);
    traj.energy_drift =
        std::max(traj.energy_drift, std::abs(e - e0) / e_scale);
    traj.points.push_back({i * dt, s[0], s[1], s[2], s[3], e});
  }
  return traj;
}

LllProjection lll_projection(const LandauParams& p) {
  const NormalModes m = landau_normal_modes(p);
  if (m.adiabatic_ratio() < 100.0)
    throw regime_error("lll_projection: omega_c/|omega_h| < 100, projection invalid");
  LllProjection out;
  out.ell = p.magnetic_length();
  out.omega_h_abs = m.omega_h_abs;
  out.momentum_scale = p.hbar / (out.ell * out.ell);
  return out;
}

namespace {

double spectrum_phase(double E, double log_rho) {
  return 2.0 * log_gamma(cplx(0.25, 0.5 * E)).imag() - E * log_rho;
}

double spectrum_phase_deriv(double E, double log_rho) {
  return digamma(cplx(0.25, 0.5 * E)).real() - log_rho;
}

}  // namespace

SpectrumTable landau_spectrum(double rho, double e_max) {
  if (!(rho > 1.0))
    throw regime_error("landau_spectrum: requires rho = L^2/(2 l^2) > 1");
  if (!(e_max > 0.0))
    throw std::invalid_argument("landau_spectrum: e_max must be > 0");
  const double log_rho = std::log(rho);

  SpectrumTable table;
  table.rho = rho;

  double e_prev = 0.0;
  double phi_prev = 0.0;  // Phi(0) = 0
  long n_next = 1;        // next window: Phi = -2 pi n
  while (e_prev < e_max) {
    const double dphi = spectrum_phase_deriv(e_prev, log_rho);
    if (!(dphi < -1e-3))
      throw regime_error(
          "landau_spectrum: e_max reaches the turning point of the phase "
          "(Re psi(1/4+iE/2) ~ log rho); shrink e_max or grow rho");
    double e_cur = std::min(e_prev + kTwoPi / (4.0 * std::abs(dphi)), e_max);
    const double phi_cur = spectrum_phase(e_cur, log_rho);
    // one root per 2 pi window: the step keeps |delta Phi| < ~pi/2
    while (phi_cur <= -kTwoPi * static_cast<double>(n_next)) {
      const double target = -kTwoPi * static_cast<double>(n_next);
      double a = e_prev, b = e_cur;
      double fa = phi_prev - target;
      for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + b); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = spectrum_phase(m, log_rho) - target;
        if (std::abs(fm) <= 1e-10 * 0.5) {
          a = b = m;
          break;
        }
        if ((fa < 0.0) == (fm < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      const double e_root = 0.5 * (a + b);
      SpectrumLevel lvl;
      lvl.n = n_next;
      lvl.energy = e_root;
      lvl.phase_residual = std::abs(spectrum_phase(e_root, log_rho) - target);
      table.levels.push_back(lvl);
      ++n_next;
    }
    e_prev = e_cur;
    phi_prev = phi_cur;
  }
  return table;
}

}  // namespace rsl
