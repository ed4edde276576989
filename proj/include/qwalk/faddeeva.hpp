#pragma once
// Faddeeva function w(z) = exp(-z^2) erfc(-i z) for Im(z) >= 0.
//
// Implementation: Weideman's rational approximation (64 frozen coefficients)
// for |z| <= 8, switching to the Laplace continued fraction beyond.  Relative
// accuracy ~1e-14 across the upper half plane; validated against independent
// golden values in the unit tests.

#include <complex>

namespace qwalk::asymptotics {

// Requires Im(z) >= -1e-12 (callers work in the closed upper half plane).
std::complex<double> faddeeva_w(std::complex<double> z);

}  // namespace qwalk::asymptotics
