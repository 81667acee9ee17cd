#pragma once

#include <vector>

namespace rsl {

// Parameters of the planar charged particle in a perpendicular magnetic
// field with saddle potential, Lagrangian
//   L = (mu/2)(vx^2 + vy^2) - (eB/c) vy x - e lambda x y.
struct LandauParams {
  double mu = 1.0;      // mass
  double charge = 1.0;  // e
  double B = 1.0;       // magnetic field
  double c = 1.0;       // speed of light
  double lambda = 1.0;  // saddle-potential coupling
  double hbar = 1.0;

  void validate() const;                   // throws domain_error if any <= 0
  double magnetic_length() const;          // l = sqrt(hbar c / (e B))
};

// The two normal modes of the linearized dynamics. The characteristic
// equation is the biquadratic
//   mu^2 w^4 - (eB/c)^2 w^2 - e^2 lambda^2 = 0,
// whose positive root gives the real (cyclotron) frequency and whose
// negative root gives the squared magnitude of the imaginary (hyperbolic)
// one. Limits: omega_c -> eB/(mu c) and |omega_h| -> lambda c / B as
// lambda -> 0, with O(lambda^2) relative error.
struct NormalModes {
  double omega_c = 0.0;
  double omega_h_abs = 0.0;
  double adiabatic_ratio() const { return omega_c / omega_h_abs; }
};

NormalModes landau_normal_modes(const LandauParams& p);

struct PhaseSpacePoint {
  double x = 0.0;
  double p = 0.0;
};

// H = x p flow: (x0 e^t, p0 e^{-t}); x*p is conserved.
PhaseSpacePoint xp_flow(double x0, double p0, double t);

// Semiclassical counting functions for the regularized xp model.
// count_bk: (E/2pi)(log(E/2pi) - 1) + 1, minus 1/8 when the quadrant
// Maslov correction is requested.
double count_bk(double E, bool maslov = false);
// count_connes: (E/2pi) log(Lambda^2/2pi) - (E/2pi)(log(E/2pi) - 1).
double count_connes(double E, double Lambda);
// count_landau: (E/2pi) log(L^2/(2pi l^2)) - (E/2pi)(log(E/2pi) - 1);
// identical to count_connes under Lambda^2 = L^2/l^2.
double count_landau(double E, double L, double ell);

struct TrajectoryPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double vx = 0.0;
  double vy = 0.0;
  double energy = 0.0;  // (mu/2)(vx^2+vy^2) + e lambda x y, conserved
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  double energy_drift = 0.0;  // max |E(t) - E(0)| / max(|E(0)|, tiny)
};

// Largest step resolving the fast mode: (2pi/omega_c)/50. Steps above it
// are rejected by integrate_landau.
double landau_stable_step(const LandauParams& p);
// Step keeping the classical-RK4 energy drift below eps over horizon T
// (drift per step ~ (omega_c dt)^6/72 on the cyclotron mode).
double landau_drift_bounded_step(const LandauParams& p, double T, double eps);

// Velocities putting (x, y) on the slow (drift) manifold:
// vx = |omega_h| x, vy = -|omega_h| y to leading adiabatic order.
void landau_slow_init(const LandauParams& p, double x, double y, double& vx,
                      double& vy);

// Classical RK4 on the Euler-Lagrange equations
//   mu x'' = -(eB/c) y' - e lambda y,   mu y'' = (eB/c) x' - e lambda x.
// Throws accuracy_error if dt exceeds the stable step.
Trajectory integrate_landau(const LandauParams& p, double x0, double y0,
                            double vx0, double vy0, double dt, double T);

// Lowest-Landau-level projection data. Requires adiabatic_ratio >= 100
// (regime_error otherwise). momentum_scale is hbar/l^2, i.e. p = y * scale;
// the effective Hamiltonian is |omega_h| x p with energy in units of
// hbar |omega_h| and classical value E = x y / l^2.
struct LllProjection {
  double ell = 0.0;
  double omega_h_abs = 0.0;
  double momentum_scale = 0.0;
};

LllProjection lll_projection(const LandauParams& p);

// One solution of the boundary phase condition
//   Gamma(1/4 + iE/2) / Gamma(1/4 - iE/2) * rho^{-iE} = 1,
// i.e. Phi(E) = 2 Im log Gamma(1/4 + iE/2) - E log rho = -2 pi n.
struct SpectrumLevel {
  long n = 0;        // 1, 2, 3, ... along the descending branch of Phi
  double energy = 0.0;
  double phase_residual = 0.0;  // |Phi(E) + 2 pi n|
};

struct SpectrumTable {
  double rho = 0.0;  // L^2 / (2 l^2)
  std::vector<SpectrumLevel> levels;  // ascending energies
};

// All solutions with E in (0, e_max], bracketed on a step of
// 2pi/(4|Phi'|) and bisected to |Phi + 2 pi n| <= 1e-10. Requires rho > 1
// (regime_error) and e_max inside the branch where Phi' < 0.
SpectrumTable landau_spectrum(double rho, double e_max);

}  // namespace rsl
