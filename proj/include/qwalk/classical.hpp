#pragma once
// Classical benchmark: the birth-death chain on the half line with reflecting
// root (away probability p, toward probability q = 1-p), its spectral
// density, the root-occupancy probability p_t(n,0) by spectral integral and
// by exact dynamic programming, and peak statistics.

#include <complex>
#include <utility>
#include <vector>

#include "qwalk/common.hpp"

namespace qwalk::classical {

struct ChainParams {
  double p = 2.0 / 3.0;        // away-from-root probability
  double q = 1.0 - 2.0 / 3.0;  // toward-root probability, the exact
                               // complement so that p + q == 1 in doubles

  // p must lie in (1/2, 1) (transient regime); q is set to 1 - p.
  static ChainParams make(double p_away);
};

// Roots of the characteristic equation p*rho^2 - lambda*rho + q = 0:
//   rho_{1,2} = (lambda +/- sqrt(lambda^2 - 4 p q)) / (2 p).
// Their product is q/p; on the spectral interval |lambda| < 2 sqrt(pq) both
// have modulus sqrt(q/p).
std::pair<std::complex<double>, std::complex<double>> rho_roots(double lambda,
                                                                const ChainParams& params);

// Spectral density of the chain:
//   density(x) = sqrt(4 p q - x^2) / (2 pi q (1 - x^2)) on |x| < 2 sqrt(pq),
// zero outside.  Integrates to 1.
double spectral_density(double x, const ChainParams& params);

// Root-occupancy probability p_t(n,0) as a spectral contour integral
//   (1/2 pi i) Int lambda^t [rho2^n/(rho2 - lambda) - rho1^n/(rho1 - lambda)] d lambda
// over the spectral interval, evaluated with the substitution
// lambda = 2 sqrt(pq) cos(theta) (which absorbs the square-root endpoint
// behavior exactly) and graded composite Gauss-Legendre panels; the panel
// count doubles until two refinements agree to 1e-13 relative or to the
// measured cancellation noise floor (a few ulps of the |integrand| mass),
// whichever is larger.  The integrand's imaginary residual is checked
// against the same floor and dropped.
// Throws numeric_error on non-convergence.  Accuracy is cancellation-limited
// for n > 120 (the integrand oscillates ~ (p/q)^{n/2} above the answer), so
// larger n throws numeric_error; use chain_dp there.
double hit_probability(int n, int t, const ChainParams& params);

// p_t(n,0) for t = 0..t_max by exact forward propagation on sites
// 0..n+t_max (mass beyond the moving frontier cannot return in the steps
// remaining).  Site 0 is reflecting: from 0 the walker moves to 1 with
// probability 1; from 1 it reaches 0 with probability q.  This is the ground
// truth the integral route is checked against.  Toward-root moves carry
// v - p*v, the bit-exact complement of the away-move p*v (exact for
// p > 1/2), so total mass stays 1 to a few 1e-16 across thousands of steps;
// requires p in (1/2, 1) with q = 1 - p to 1e-12, else parameter_error.
std::vector<double> chain_dp(int n, int t_max, const ChainParams& params);

// Argmax and max of p_t(n,0) over t (searched over [0, 4n+60]).
// For p = 2/3 the peak time is exactly 3n - 8 for all n in [10, 200].
std::pair<int, double> classical_peak(int n, const ChainParams& params);

}  // namespace qwalk::classical
