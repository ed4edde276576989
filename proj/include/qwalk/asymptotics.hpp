#pragma once
// Saddle-point asymptotics of the root-return amplitude H_n(t).
//
// H_n(n+2k) is a contour-integral coefficient of the generating function; its
// integrand has two saddle points and a simple pole on the unit circle of the
// z^2-plane (a non-decaying bound-state component the large-time behavior
// flattens onto).  The production evaluator treats the saddle that migrates
// close to the pole with a uniform (pole-subtracted, Faddeeva-based)
// expansion and keeps the total continuous across the Stokes line:
//
//   H(n, n+2k) ~ -T1(plain saddle) + T2(uniform saddle)
//                + bound-state term when the pole has been crossed.
//
// A fixed-saddle "display form" with coefficients linear in n,
//   H ~ sum_s (a_s + d_s n) Lambda_s^n phi_s^{-(k+1)} (k+1)^{-3/2},
// is exposed separately; its convergence is pole-limited (relative error
// ~1/k with a large constant) because one saddle sits within 0.092 of the
// amplitude pole.

#include <complex>

#include "qwalk/common.hpp"

namespace qwalk::asymptotics {

using Complex = std::complex<double>;

// Constants of the two fixed saddle points (the k >> n limit).
struct SaddleData {
  Complex omega_s[2];   // saddle locations (1 +/- i sqrt(2))/sqrt(3)
  Complex phi_s[2];     // map values at the saddles, |phi_s| = 1
  double lambda_s[2];   // phases: phi_s = e^{i lambda}
  double gamma;         // arctan(1/sqrt(2))
  Complex b_s[2];       // sqrt(2 / (ln phi)'' (omega_s))
  Complex a_s[2];       // order-1 part of the linear-in-n coefficient
  Complex d_s[2];       // slope of the linear-in-n coefficient
};

// The steepest-descent substitution map
//   phi(omega) = a sqrt(3) (omega - 1/sqrt(3)) / (omega (sqrt(3) - omega)),
// whose inverse generates the loop function branch used everywhere in this
// library (phi has unit modulus on the relevant contour and two saddles of
// ln phi).  Throws domain_error at the poles omega = 0 and omega = sqrt(3).
Complex phi_map(Complex omega);

// All fixed-saddle constants.  The a_s/d_s pair is calibrated so the display
// form converges to the exact radiating amplitude in the k -> infinity limit
// (the global sign is not fixed by the saddle geometry alone).
const SaddleData& saddle_constants();

// Production asymptotic amplitude: uniform two-saddle evaluation with
// pole subtraction, plus the bound-state term on the crossed side of the
// Stokes line.  Valid for tau = t - n >= ~60 with relative accuracy ~1e-5
// in the calibrated range (n <= ~100, k <= ~13000).  Requires tau > 0 and
// t - n even (odd tau amplitudes are exactly zero); throws domain_error
// for tau <= 0.
Complex asymptotic_amplitude(int n, int t);

// |asymptotic_amplitude|^2 (the probability form; consistent by definition).
double asymptotic_probability(int n, int t);

// The non-decaying component: beta_n * x_p^{-k}, where x_p is the unit-
// modulus zero of 1 - g^ and beta_n its residue contribution.  |beta_n|
// decays like 0.664^n, so this floor sits below the radiating envelope
// until k grows past a crossover (k ~ 800 at n = 50).
Complex bound_state_amplitude(int n, int t);

// asymptotic_amplitude minus the bound-state component: the tau^{-3/2}
// radiating part whose squared envelope carries the tau^{-3} law.
Complex radiating_amplitude(int n, int t);

// Fixed-saddle display form sum_s (a_s + d_s n) Lambda_s^n phi_s^{-(k+1)}
// (k+1)^{-3/2}.  Converges to radiating_amplitude as k -> infinity at fixed
// n, at a pole-limited ~1/k rate.  Same domain requirements as above.
Complex display_form_amplitude(int n, int t);

}  // namespace qwalk::asymptotics
