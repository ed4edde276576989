#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qwalk/asymptotics.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/cli.hpp"
#include "qwalk/common.hpp"
#include "qwalk/series.hpp"

using qwalk::no_signal_error;
using qwalk::parameter_error;
using namespace qwalk::cli;

namespace {

// Scoped precision override so a failing CHECK can't leak a lowered setting
// into later test cases.
struct PrecisionGuard {
  int prev;
  explicit PrecisionGuard(int digits) : prev(set_output_precision(digits)) {}
  ~PrecisionGuard() { set_output_precision(prev); }
};

bool same_field(double a, double b) {
  if (is_unset(a) || is_unset(b)) return is_unset(a) && is_unset(b);
  return a == b;
}

}  // namespace

TEST_CASE("runtime estimate: minimizes expected repetitions-times-horizon") {
  // Single usable point.
  const auto single = runtime_estimate({{16, 6.8e-4}});
  CHECK(single.first == 16);
  CHECK(single.second == doctest::Approx(16.0 / 6.8e-4).epsilon(1e-15));

  // Picks the global minimum of t / p, not the largest probability.
  const auto best = runtime_estimate({{10, 1e-3}, {16, 6.8e-4}, {30, 5e-3}});
  CHECK(best.first == 30);
  CHECK(best.second == doctest::Approx(6000.0).epsilon(1e-15));

  // Exact cost tie resolves toward the smaller time, regardless of order.
  const auto tie = runtime_estimate({{20, 1.0}, {10, 0.5}});
  CHECK(tie.first == 10);

  // Zero or negative probabilities are skipped, not divided by.
  const auto skip = runtime_estimate({{5, 0.0}, {7, -1.0}, {9, 0.2}});
  CHECK(skip.first == 9);
  CHECK(skip.second == doctest::Approx(45.0).epsilon(1e-15));

  // No usable signal at all.
  CHECK_THROWS_AS(runtime_estimate({}), no_signal_error);
  CHECK_THROWS_AS(runtime_estimate({{4, 0.0}, {6, 0.0}}), no_signal_error);
}

TEST_CASE("scaling fit: recovers an exact exponential law") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 4; n <= 40; n += 4) {
    pts.emplace_back(n, 2.5 * std::exp(0.7 * n));
  }
  const ScalingFit fit = fit_scaling(pts);
  CHECK(fit.slope == doctest::Approx(0.7).epsilon(1e-10));
  CHECK(fit.intercept == doctest::Approx(std::log(2.5)).epsilon(1e-8));
  // Default trailing-quarter window of the n-range [4, 40]: n >= 31.
  CHECK(fit.n_min == 32.0);
  CHECK(fit.n_max == 40.0);
  CHECK(fit.residuals.size() == 3);
  for (double r : fit.residuals) CHECK(std::abs(r) < 1e-10);

  // Order independence: shuffled input gives the identical fit.
  std::vector<std::pair<double, double>> shuffled = {pts[7], pts[2], pts[9],
                                                     pts[0], pts[5], pts[1],
                                                     pts[8], pts[3], pts[6],
                                                     pts[4]};
  const ScalingFit refit = fit_scaling(shuffled);
  CHECK(refit.slope == fit.slope);
  CHECK(refit.n_min == fit.n_min);
}

TEST_CASE("scaling fit: power-law trend channel and window fraction") {
  std::vector<std::pair<double, double>> cubic;
  for (int n = 10; n <= 100; n += 10) {
    cubic.emplace_back(n, 1e-6 * n * n * n);
  }
  const ScalingFit fit = fit_scaling(cubic);
  CHECK(fit.power_slope == doctest::Approx(3.0).epsilon(1e-10));
  // A pure power law still produces some exponential-channel slope, but the
  // power channel is the one that nails it.

  // Explicit half-range window on the exponential data widens the sample.
  std::vector<std::pair<double, double>> pts;
  for (int n = 4; n <= 40; n += 4) {
    pts.emplace_back(n, std::exp(0.7 * n));
  }
  const ScalingFit wide = fit_scaling(pts, 0.5);
  CHECK(wide.n_min == 24.0);  // threshold 40 - 0.5 * 36 = 22
  CHECK(wide.n_max == 40.0);
  CHECK(wide.residuals.size() == 5);
  const ScalingFit all = fit_scaling(pts, 1.0);
  CHECK(all.n_min == 4.0);
  CHECK(all.residuals.size() == pts.size());
}

TEST_CASE("scaling fit: rejects unusable inputs") {
  const std::vector<std::pair<double, double>> three = {
      {1, 1.0}, {2, 2.0}, {3, 4.0}};
  CHECK_THROWS_AS(fit_scaling(three), parameter_error);

  // Four points whose trailing quarter holds a single distinct depth.
  const std::vector<std::pair<double, double>> lopsided = {
      {1, 1.0}, {2, 2.0}, {3, 4.0}, {100, 8.0}};
  CHECK_THROWS_AS(fit_scaling(lopsided), parameter_error);

  // All depths identical: no usable abscissa spread at any window.
  const std::vector<std::pair<double, double>> flat = {
      {5, 1.0}, {5, 2.0}, {5, 3.0}, {5, 4.0}};
  CHECK_THROWS_AS(fit_scaling(flat, 1.0), parameter_error);

  const std::vector<std::pair<double, double>> good = {
      {1, 1.0}, {2, 2.0}, {3, 4.0}, {4, 8.0}};
  CHECK_THROWS_AS(fit_scaling({{1, 1.0}, {2, 0.0}, {3, 4.0}, {4, 8.0}}),
                  parameter_error);  // nonpositive runtime
  CHECK_THROWS_AS(fit_scaling({{1, 1.0}, {2, -2.0}, {3, 4.0}, {4, 8.0}}),
                  parameter_error);
  CHECK_THROWS_AS(fit_scaling({{-1, 1.0}, {2, 2.0}, {3, 4.0}, {4, 8.0}}),
                  parameter_error);  // nonpositive depth
  CHECK_THROWS_AS(fit_scaling(good, 0.0), parameter_error);
  CHECK_THROWS_AS(fit_scaling(good, 1.5), parameter_error);
  CHECK_NOTHROW(fit_scaling(good, 1.0));
}

TEST_CASE("scaling comparison: slope ratio of two synthetic laws") {
  std::vector<std::pair<double, double>> q, c;
  for (int n = 5; n <= 60; n += 5) {
    q.emplace_back(n, 3.0 * std::exp(0.3 * n));
    c.emplace_back(n, 0.1 * std::exp(0.6 * n));
  }
  const FitReport report = compare_scaling(q, c);
  CHECK(report.slope_quantum == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(report.slope_classical == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(report.ratio == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(report.n_min == 50.0);
  CHECK(report.n_max == 60.0);
  CHECK(report.residuals_quantum.size() == report.residuals_classical.size());
}

TEST_CASE("sweep: row layout, method columns, and parity zeros") {
  SweepOptions all;
  all.asymptotic = true;
  const SweepResult r = run_sweep(6, 106, all);
  CHECK(r.n == 6);
  REQUIRE(r.rows.size() == 101);
  CHECK(r.rows.front().t == 6);
  CHECK(r.rows.back().t == 106);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].t == r.rows[i - 1].t + 1);
  }
  for (const SweepRow& row : r.rows) {
    // Quantum and classical were run for every t.
    CHECK(!is_unset(row.prob_quantum));
    CHECK(!is_unset(row.prob_classical));
    // Odd t is the wrong parity from depth 6: amplitude exactly zero.
    if (row.t % 2 == 1) CHECK(row.prob_quantum == 0.0);
    // The asymptotic model only applies strictly after the start time.
    if (row.t == 6) {
      CHECK(is_unset(row.prob_asymptotic));
    } else {
      CHECK(!is_unset(row.prob_asymptotic));
      CHECK(row.prob_asymptotic ==
            qwalk::asymptotics::asymptotic_probability(6, row.t));
    }
  }
}

TEST_CASE("sweep: peaks match an independent scan of the same methods") {
  const int n = 8, t_max = 200;
  SweepOptions all;
  all.asymptotic = true;
  const SweepResult r = run_sweep(n, t_max, all);

  const std::vector<qwalk::Amplitude> amps =
      qwalk::series::amplitude_sequence(n, t_max);
  const std::vector<double> cls =
      qwalk::classical::chain_dp(n, t_max, qwalk::classical::ChainParams{});
  int tq = 0, tc = 0;
  double pq = -1.0, pc = -1.0;
  for (int t = n; t <= t_max; ++t) {
    const double q = std::norm(amps[static_cast<std::size_t>(t)]);
    if (q > pq) { pq = q; tq = t; }
    const double c = cls[static_cast<std::size_t>(t)];
    if (c > pc) { pc = c; tc = t; }
  }
  REQUIRE(r.peak_quantum.has_value());
  REQUIRE(r.peak_classical.has_value());
  REQUIRE(r.peak_asymptotic.has_value());
  CHECK(r.peak_quantum->t_star == tq);
  CHECK(r.peak_quantum->p_star == pq);
  CHECK(r.peak_classical->t_star == tc);
  CHECK(r.peak_classical->p_star == pc);
}

TEST_CASE("sweep: disabled methods stay empty end to end") {
  SweepOptions quantum_only;
  quantum_only.classical = false;
  const SweepResult r = run_sweep(5, 45, quantum_only);
  for (const SweepRow& row : r.rows) {
    CHECK(!is_unset(row.prob_quantum));
    CHECK(is_unset(row.prob_classical));
    CHECK(is_unset(row.prob_asymptotic));
  }
  CHECK(r.peak_quantum.has_value());
  CHECK(!r.peak_classical.has_value());
  CHECK(!r.peak_asymptotic.has_value());
}

TEST_CASE("sweep: asymptotic column skips the coalescence gap quietly") {
  SweepOptions asym_only;
  asym_only.quantum = false;
  asym_only.classical = false;
  asym_only.asymptotic = true;
  const SweepResult r = run_sweep(100, 130, asym_only);
  for (const SweepRow& row : r.rows) {
    const bool odd = (row.t - 100) % 2 == 1;
    if (row.t <= 120 && !odd) {
      // Even offsets at or below the saddle-coalescence threshold: no value.
      if (row.t > 100) CHECK(is_unset(row.prob_asymptotic));
    }
    if (odd) CHECK(row.prob_asymptotic == 0.0);  // wrong parity: exact zero
    if (row.t >= 122 && !odd) CHECK(row.prob_asymptotic > 0.0);
  }
}

TEST_CASE("sweep: measured peak times across depths") {
  // Quantum peak time grows mildly super-linearly at small depth and settles
  // toward ~1.26 n by depth 100; these exact peak positions are frozen from
  // scans of the series route.
  const std::pair<int, int> expected[] = {{10, 14}, {20, 26}, {50, 64}, {100, 126}};
  SweepOptions quantum_only;
  quantum_only.classical = false;
  for (const auto& [n, t_star] : expected) {
    const SweepResult r = run_sweep(n, default_t_max(n), quantum_only);
    REQUIRE(r.peak_quantum.has_value());
    CHECK(r.peak_quantum->t_star == t_star);
  }
  // Classical peak time follows the exact 3n - 8 law.
  SweepOptions classical_only;
  classical_only.quantum = false;
  for (int n : {10, 16}) {
    const SweepResult r = run_sweep(n, 6 * n, classical_only);
    REQUIRE(r.peak_classical.has_value());
    CHECK(r.peak_classical->t_star == 3 * n - 8);
  }
}

TEST_CASE("sweep: parameter validation") {
  CHECK_THROWS_AS(run_sweep(0, 10, SweepOptions{}), parameter_error);
  CHECK_THROWS_AS(run_sweep(5, 4, SweepOptions{}), parameter_error);
  CHECK(default_t_max(10) == 610);   // short depths: fixed tail budget
  CHECK(default_t_max(300) == 1200); // long depths: proportional horizon
}

TEST_CASE("double formatting: bit-exact round trip at full precision") {
  const double gnarly[] = {1.0 / 3.0,
                           6.8e-4,
                           5.32297256168064461e-19,
                           3.14159265358979312,
                           1e300,
                           -2.2250738585072014e-308,
                           0.0,
                           1234567890.123456789};
  for (double v : gnarly) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("double formatting: configurable precision") {
  {
    PrecisionGuard guard(6);
    CHECK(guard.prev == 17);  // library default
    CHECK(format_double(1.0 / 3.0) == "0.333333");
    // Nested override returns the current (lowered) setting.
    const int inner = set_output_precision(3);
    CHECK(inner == 6);
    CHECK(format_double(1.0 / 3.0) == "0.333");
    set_output_precision(6);
  }
  // Guard restored the default.
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  CHECK_THROWS_AS(set_output_precision(0), parameter_error);
  CHECK_THROWS_AS(set_output_precision(18), parameter_error);
  // A rejected setting leaves the configuration untouched.
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("CSV emission: header, empty fields, determinism") {
  SweepOptions quantum_only;
  quantum_only.classical = false;
  const SweepResult r = run_sweep(6, 10, quantum_only);
  const std::string csv = emit_results(r, OutputFormat::csv);

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < csv.size()) {
    const std::size_t nl = csv.find('\n', start);
    lines.push_back(csv.substr(start, nl - start));
    start = nl + 1;
  }
  REQUIRE(lines.size() == 6);  // header + t = 6..10
  CHECK(lines[0] == "n,t,prob_quantum,prob_classical,prob_asymptotic");
  // Odd-parity row: quantum present (exact zero), other methods empty.
  CHECK(lines[2] == "6,7,0,,");
  // Every data line has exactly four commas (five fields).
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 4);
    CHECK(lines[i].rfind("6,", 0) == 0);
  }

  // Emission is a pure function of the result.
  CHECK(emit_results(r, OutputFormat::csv) == csv);

  // An empty sweep list still produces the header (and nothing else).
  CHECK(emit_results(std::vector<SweepResult>{}, OutputFormat::csv) ==
        "n,t,prob_quantum,prob_classical,prob_asymptotic\n");
}

TEST_CASE("CSV round trip: parse back bit-exact, peaks recomputed") {
  SweepOptions all;
  all.asymptotic = true;
  const SweepResult a = run_sweep(6, 40, all);
  SweepOptions classical_only;
  classical_only.quantum = false;
  const SweepResult b = run_sweep(3, 21, classical_only);

  // Emit deliberately out of order; emission sorts by n.
  const std::string csv =
      emit_results(std::vector<SweepResult>{a, b}, OutputFormat::csv);
  const std::vector<SweepResult> parsed = parse_results_csv(csv);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].n == 3);
  CHECK(parsed[1].n == 6);

  const SweepResult* originals[2] = {&b, &a};
  for (int i = 0; i < 2; ++i) {
    const SweepResult& orig = *originals[i];
    const SweepResult& back = parsed[static_cast<std::size_t>(i)];
    REQUIRE(back.rows.size() == orig.rows.size());
    for (std::size_t j = 0; j < orig.rows.size(); ++j) {
      CHECK(back.rows[j].t == orig.rows[j].t);
      CHECK(same_field(back.rows[j].prob_quantum, orig.rows[j].prob_quantum));
      CHECK(same_field(back.rows[j].prob_classical, orig.rows[j].prob_classical));
      CHECK(same_field(back.rows[j].prob_asymptotic, orig.rows[j].prob_asymptotic));
    }
    CHECK(back.peak_quantum.has_value() == orig.peak_quantum.has_value());
    if (orig.peak_quantum) {
      CHECK(back.peak_quantum->t_star == orig.peak_quantum->t_star);
      CHECK(back.peak_quantum->p_star == orig.peak_quantum->p_star);
    }
    CHECK(back.peak_classical.has_value() == orig.peak_classical.has_value());
    if (orig.peak_classical) {
      CHECK(back.peak_classical->t_star == orig.peak_classical->t_star);
      CHECK(back.peak_classical->p_star == orig.peak_classical->p_star);
    }
  }

  CHECK_THROWS_AS(parse_results_csv("t,n,oops\n"), parameter_error);
  CHECK_THROWS_AS(
      parse_results_csv("n,t,prob_quantum,prob_classical,prob_asymptotic\n1,2,3\n"),
      parameter_error);
}

TEST_CASE("JSON emission: well-formed, nulls for missing methods") {
  SweepOptions quantum_only;
  quantum_only.classical = false;
  const SweepResult r = run_sweep(6, 12, quantum_only);
  const nlohmann::json doc =
      nlohmann::json::parse(emit_results(r, OutputFormat::json));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  const nlohmann::json& sweep = doc[0];
  CHECK(sweep["n"] == 6);
  REQUIRE(sweep["rows"].size() == 7);
  CHECK(sweep["rows"][0]["t"] == 6);
  // Methods not run are nulls, parity zeros are numeric zeros.
  CHECK(sweep["rows"][0]["prob_classical"].is_null());
  CHECK(sweep["rows"][0]["prob_asymptotic"].is_null());
  CHECK(sweep["rows"][1]["prob_quantum"] == 0.0);
  const double p6 = sweep["rows"][0]["prob_quantum"].get<double>();
  CHECK(p6 == doctest::Approx(std::pow(1.0 / 3.0, 6)).epsilon(1e-14));
  // Peaks: quantum present with matching fields, the others null.
  CHECK(sweep["peaks"]["quantum"]["t_star"] == r.peak_quantum->t_star);
  CHECK(sweep["peaks"]["quantum"]["p_star"].get<double>() ==
        r.peak_quantum->p_star);
  CHECK(sweep["peaks"]["classical"].is_null());
  CHECK(sweep["peaks"]["asymptotic"].is_null());
}

TEST_CASE("fit report emission: both formats carry the same numbers") {
  std::vector<std::pair<double, double>> q, c;
  for (int n = 5; n <= 40; n += 5) {
    q.emplace_back(n, std::exp(0.3 * n));
    c.emplace_back(n, std::exp(0.6 * n));
  }
  const FitReport report = compare_scaling(q, c);

  const nlohmann::json doc =
      nlohmann::json::parse(emit_results(report, OutputFormat::json));
  CHECK(doc["slope_quantum"].get<double>() == report.slope_quantum);
  CHECK(doc["slope_classical"].get<double>() == report.slope_classical);
  CHECK(doc["ratio"].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(doc["residuals_quantum"].size() == report.residuals_quantum.size());

  const std::string csv = emit_results(report, OutputFormat::csv);
  CHECK(csv.rfind("field,value\n", 0) == 0);
  const std::string needle = "ratio," + format_double(report.ratio) + "\n";
  CHECK(csv.find(needle) != std::string::npos);
}
