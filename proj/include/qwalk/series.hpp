#pragma once
// Truncated complex formal power series and the walk's generating functions:
// the first-return loop function g^(z), the one-level first-passage function
// h1^(z), the root-return function H^_n(z), and the Narayana combinatorial
// cross-check for the loop coefficients.

#include <cstdint>
#include <vector>

#include "qwalk/common.hpp"

namespace qwalk::series {

// coeffs[t] is the coefficient of z^t; order() = highest retained power.
// Arithmetic truncates results to the smaller operand order and never reads
// beyond it.
struct PowerSeries {
  std::vector<Amplitude> coeffs;

  PowerSeries() = default;
  explicit PowerSeries(int order) : coeffs(static_cast<std::size_t>(order) + 1) {}

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  Amplitude at(int t) const { return coeffs[static_cast<std::size_t>(t)]; }
};

// Cauchy product truncated to min(order(a), order(b)).
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

// Principal square root anchored at constant term 1 (s[0] = 1, s*s = a).
// Throws branch_error when a[0] != 1.
PowerSeries series_sqrt(const PowerSeries& a);

// Multiplicative inverse: a * r = 1 to the common order.
// Throws singular_error when a[0] = 0.
PowerSeries series_inv(const PowerSeries& a);

// Generating function of the first-return loop amplitudes,
//   g^(z) = (sqrt(3)/(2 a^2)) * [ (a z)^2 - 1 + sqrt(1 - (2/3)(a z)^2 + (a z)^4) ],
// the closed-form branch fixed by g(0) = 0 and by agreement with direct
// path enumeration (g(2) = 1/sqrt(3), g(4) = 2 a^2/(3 sqrt(3)), ...).
// Coefficients at z^0 and z^1 are 0 and all odd coefficients vanish.
PowerSeries g_hat(int order);

// One-level first-passage generating function
//   h1^(z) = (a sqrt(3)/2) z - (a/2) g^(z)/z
// (the division by z is exact since g^ starts at z^2); leading coefficient
// at z^1 is a/sqrt(3).
PowerSeries h1_hat(int order);

// Root-return generating function from level n,
//   H^_n = (h1^)^n * (1 - g^)^{-1},
// computed with power-by-squaring; identical to the expanded form
//   [-a/2]^n [(g^ - sqrt(3) z^2)/z]^n (1 - g^)^{-1}.
// H^_0 is the multi-loop function G with G(0) = 1.
PowerSeries H_hat(int n, int order);

// H_n(t) for t = 0..order: the Taylor coefficients of H^_n (coefficient
// extraction replaces symbolic derivatives; the values are identical).
std::vector<Amplitude> amplitude_sequence(int n, int order);

// Narayana number N(m, k) = (1/m) C(m,k) C(m,k-1), exact integer arithmetic.
// Throws parameter_error unless 1 <= k <= m (or on internal overflow).
std::uint64_t narayana(int m, int k);

// Loop amplitude from the peak-counting sum:
//   g(t) = (2 a^2)^{t/2-1} / sqrt(3)^{t-1} * sum_k (-1/2)^{k-1} N((t-2)/2, k)
// for even t >= 4; t = 2 is the bare out-and-back loop, 1/sqrt(3).
// Exact Narayana integers, then complex scaling.  Throws parameter_error for
// odd or nonpositive t.
Amplitude g_combinatorial(int t);

}  // namespace qwalk::series
