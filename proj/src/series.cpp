#include "qwalk/series.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qwalk::series {

namespace {

const Amplitude kA = kOmega;  // e^{2 pi i / 3}

}  // namespace

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries c(order);
  for (int t = 0; t <= order; ++t) {
    Amplitude s{0.0, 0.0};
    for (int j = 0; j <= t; ++j) {
      s += a.coeffs[static_cast<std::size_t>(j)] *
           b.coeffs[static_cast<std::size_t>(t - j)];
    }
    c.coeffs[static_cast<std::size_t>(t)] = s;
  }
  return c;
}

PowerSeries series_sqrt(const PowerSeries& a) {
  if (std::abs(a.coeffs.at(0) - Amplitude{1.0, 0.0}) > 1e-12) {
    throw branch_error("series_sqrt: constant term must be 1 to anchor the principal branch");
  }
  const int order = a.order();
  PowerSeries s(order);
  s.coeffs[0] = Amplitude{1.0, 0.0};
  // (s*s)[t] = a[t]: isolate the two s[0]s[t] cross terms.
  for (int t = 1; t <= order; ++t) {
    Amplitude cross{0.0, 0.0};
    for (int j = 1; j <= t - 1; ++j) {
      cross += s.coeffs[static_cast<std::size_t>(j)] *
               s.coeffs[static_cast<std::size_t>(t - j)];
    }
    s.coeffs[static_cast<std::size_t>(t)] =
        (a.coeffs[static_cast<std::size_t>(t)] - cross) * 0.5;
  }
  return s;
}

PowerSeries series_inv(const PowerSeries& a) {
  const Amplitude a0 = a.coeffs.at(0);
  if (a0 == Amplitude{0.0, 0.0}) {
    throw singular_error("series_inv: constant term is 0; the series has no inverse");
  }
  const int order = a.order();
  PowerSeries r(order);
  r.coeffs[0] = 1.0 / a0;
  for (int t = 1; t <= order; ++t) {
    Amplitude s{0.0, 0.0};
    for (int j = 1; j <= t; ++j) {
      s += a.coeffs[static_cast<std::size_t>(j)] *
           r.coeffs[static_cast<std::size_t>(t - j)];
    }
    r.coeffs[static_cast<std::size_t>(t)] = -s / a0;
  }
  return r;
}

PowerSeries g_hat(int order) {
  if (order < 0) throw parameter_error("g_hat: order must be >= 0");
  // Radicand 1 - (2/3)(a z)^2 + (a z)^4; note a^3 = 1 so a^4 = a.
  PowerSeries rad(order);
  rad.coeffs[0] = Amplitude{1.0, 0.0};
  if (order >= 2) rad.coeffs[2] = -(2.0 / 3.0) * kA * kA;
  if (order >= 4) rad.coeffs[4] = kA;
  PowerSeries root = series_sqrt(rad);
  // Prefactor sqrt(3)/(2 a^2) = (sqrt(3)/2) a.
  const Amplitude pref = (kSqrt3 / 2.0) * kA;
  PowerSeries g(order);
  for (int t = 0; t <= order; ++t) {
    Amplitude v = root.coeffs[static_cast<std::size_t>(t)];
    if (t == 0) v -= 1.0;
    if (t == 2) v += kA * kA;
    g.coeffs[static_cast<std::size_t>(t)] = pref * v;
  }
  // The branch anchored at g(0) = 0 has exactly zero odd part; scrub the
  // representation so downstream parity checks see exact zeros.
  for (int t = 1; t <= order; t += 2) {
    g.coeffs[static_cast<std::size_t>(t)] = Amplitude{0.0, 0.0};
  }
  return g;
}

PowerSeries h1_hat(int order) {
  if (order < 0) throw parameter_error("h1_hat: order must be >= 0");
  const PowerSeries g = g_hat(order + 1);
  PowerSeries h(order);
  for (int t = 1; t <= order; ++t) {
    // h1^ = (a sqrt(3)/2) z - (a/2) g^(z)/z, and (g^/z)[t] = g[t+1].
    Amplitude v = -(kA * 0.5) * g.coeffs[static_cast<std::size_t>(t) + 1];
    if (t == 1) v += kA * (kSqrt3 / 2.0);
    h.coeffs[static_cast<std::size_t>(t)] = v;
  }
  return h;
}

PowerSeries H_hat(int n, int order) {
  if (n < 0) throw parameter_error("H_hat: level must be >= 0");
  if (order < 0) throw parameter_error("H_hat: order must be >= 0");
  const PowerSeries g = g_hat(order);
  PowerSeries one_minus_g(order);
  one_minus_g.coeffs[0] = Amplitude{1.0, 0.0};
  for (int t = 1; t <= order; ++t) {
    one_minus_g.coeffs[static_cast<std::size_t>(t)] = -g.coeffs[static_cast<std::size_t>(t)];
  }
  PowerSeries result = series_inv(one_minus_g);
  if (n > 0) {
    // result *= h1^n by binary exponentiation at fixed truncation order.
    PowerSeries base = h1_hat(order);
    int e = n;
    while (e > 0) {
      if (e & 1) result = series_mul(result, base);
      e >>= 1;
      if (e > 0) base = series_mul(base, base);
    }
  }
  return result;
}

std::vector<Amplitude> amplitude_sequence(int n, int order) {
  return H_hat(n, order).coeffs;
}

std::uint64_t narayana(int m, int k) {
  if (m < 1 || k < 1 || k > m) {
    throw parameter_error("narayana: need 1 <= k <= m, got m = " + std::to_string(m) +
                          ", k = " + std::to_string(k));
  }
  if (m > 64) {
    // Central values overflow 64-bit output well before this; reject ahead
    // of any intermediate wrap-around.
    throw parameter_error("narayana: m = " + std::to_string(m) +
                          " overflows exact 64-bit evaluation");
  }
  // N(m, k) = C(m, k) C(m, k-1) / m, an exact integer.
  const auto binom = [](int nn, int kk) -> unsigned __int128 {
    if (kk < 0 || kk > nn) return 0;
    kk = std::min(kk, nn - kk);
    unsigned __int128 r = 1;
    for (int i = 1; i <= kk; ++i) {
      r = r * static_cast<unsigned>(nn - kk + i);
      r /= static_cast<unsigned>(i);  // exact: C(n, i) divides the running product
    }
    return r;
  };
  const unsigned __int128 num = binom(m, k) * binom(m, k - 1);
  const unsigned __int128 val = num / static_cast<unsigned>(m);
  if (val * static_cast<unsigned>(m) != num) {
    throw parameter_error("narayana: internal divisibility failure");  // unreachable
  }
  if (val > std::numeric_limits<std::uint64_t>::max()) {
    throw parameter_error("narayana: value overflows 64-bit range for m = " +
                          std::to_string(m));
  }
  return static_cast<std::uint64_t>(val);
}

Amplitude g_combinatorial(int t) {
  if (t < 2 || t % 2 != 0) {
    throw parameter_error("g_combinatorial: loop length must be even and >= 2, got " +
                          std::to_string(t));
  }
  if (t == 2) {
    // The bare out-and-back loop; the peak-counting sum starts at length 4.
    return Amplitude{1.0 / kSqrt3, 0.0};
  }
  const int m = (t - 2) / 2;
  // sum_k (-1/2)^(k-1) N(m, k)
  double sum = 0.0;
  double sign_pow = 1.0;  // (-1/2)^(k-1)
  for (int k = 1; k <= m; ++k) {
    sum += sign_pow * static_cast<double>(narayana(m, k));
    sign_pow *= -0.5;
  }
  // Prefactor (2 a^2)^(t/2 - 1) / sqrt(3)^(t - 1).
  Amplitude pref{1.0, 0.0};
  const Amplitude base = 2.0 * kA * kA;
  for (int i = 0; i < t / 2 - 1; ++i) pref *= base;
  pref /= std::pow(kSqrt3, t - 1);
  return pref * sum;
}

}  // namespace qwalk::series
