#pragma once
// Shared scalar types, exact constants, and the error hierarchy used by every
// qwalk module.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qwalk {

using Amplitude = std::complex<double>;
using NodeId = std::int64_t;

// a = exp(2*pi*i/3), stored as the exact pair (-1/2, sqrt(3)/2) so that the
// identity 1 + a + a^2 = 0 holds to machine precision everywhere it is used.
inline const double kSqrt3 = 1.7320508075688772935;
inline const Amplitude kOmega{-0.5, kSqrt3 / 2.0};

// ---------------------------------------------------------------------------
// Error hierarchy.  All library failures derive from qwalk::error so callers
// can catch one base type; subtypes distinguish caller bugs (parameter),
// wiring problems (config), guarded resource limits, numeric-precision
// failures, and out-of-domain evaluations.
// ---------------------------------------------------------------------------
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument values: bad dimensions, out-of-range indices, probabilities
// outside [0,1], and similar caller-side mistakes.
class parameter_error : public error {
 public:
  explicit parameter_error(const std::string& what) : error(what) {}
};

// Series square root requested off the principal branch (constant term != 1).
class branch_error : public parameter_error {
 public:
  explicit branch_error(const std::string& what) : parameter_error(what) {}
};

// Series inversion of a series with zero constant term.
class singular_error : public parameter_error {
 public:
  explicit singular_error(const std::string& what) : parameter_error(what) {}
};

// A data sequence carries no usable signal (e.g. all-zero probabilities).
class no_signal_error : public parameter_error {
 public:
  explicit no_signal_error(const std::string& what) : parameter_error(what) {}
};

// Structural wiring problems, e.g. a walk reaching a site with no unitary.
class config_error : public error {
 public:
  explicit config_error(const std::string& what) : error(what) {}
};

// A guarded resource limit (state size, truncation cap) would be exceeded.
class resource_error : public error {
 public:
  explicit resource_error(const std::string& what) : error(what) {}
};

// Numeric-precision failure: quadrature non-convergence, conditioning limits.
class numeric_error : public error {
 public:
  explicit numeric_error(const std::string& what) : error(what) {}
};

// Evaluation outside a function's mathematical domain (poles, tau <= 0).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

}  // namespace qwalk
