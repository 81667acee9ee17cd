#pragma once

#include "rsl/primes.hpp"
#include "rsl/special.hpp"

namespace rsl {

// zeta(s) through the alternating eta series with Chebyshev-weighted
// partial-sum averaging; valid for Re s > 0, s != 1. Error is bounded by
// 3(1+2|t|) e^{pi|t|/2} / (3+sqrt8)^terms, so accuracy degrades once
// |Im s| nears ~500 at practical term counts. Throws domain_error off the
// half-plane or at s = 1; terms must be >= 10.
cplx zeta_eta(cplx s, int terms);

// Term count giving ~`digits` correct digits at height t in zeta_eta.
int zeta_eta_terms(double t, int digits = 13);

// Truncated Euler product over the primes of `table`; requires Re s > 1.
cplx euler_product_partial(cplx s, const PrimeTable& table);

// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
// Riemann-Siegel main sum plus the first correction term; the error of the
// C0-only tail is O((t/2pi)^{-3/4}) ~ 1e-3..1e-4 below t ~ 1000.
double hardy_z_rs(double t);

// Hardy Z via the eta series (term count picked from zeta_eta_terms).
double hardy_z_eta(double t);

// Routed evaluator: eta path below HARDY_Z_SWITCH, Riemann-Siegel above.
// The eta ceiling is set by where the C0-only Riemann-Siegel tail becomes
// accurate enough for zero refinement, measured against the eta path.
inline constexpr double HARDY_Z_SWITCH = 400.0;
double hardy_z(double t);

// xi(1/2 + iE) = -(1/2)(E^2 + 1/4) pi^{-1/4} |Gamma(1/4 + iE/2)| Z(E);
// real, even, vanishing exactly at the zero ordinates.
double xi_critical(double E);

}  // namespace rsl
