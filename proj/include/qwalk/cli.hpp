#pragma once
// Sweep drivers, run-time estimation, scaling fits, and machine-readable
// emission (CSV/JSON) backing the command-line front end.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/common.hpp"

namespace qwalk::cli {

// One sampled time point.  Methods that were not run hold NaN and are
// emitted as empty CSV fields / JSON nulls.
struct SweepRow {
  int t = 0;
  double prob_quantum = std::numeric_limits<double>::quiet_NaN();
  double prob_classical = std::numeric_limits<double>::quiet_NaN();
  double prob_asymptotic = std::numeric_limits<double>::quiet_NaN();
};

struct PeakRecord {
  int t_star = 0;
  double p_star = 0.0;
};

// A per-n sweep over t with up to three methods side by side.
struct SweepResult {
  int n = 0;
  std::vector<SweepRow> rows;  // strictly increasing t
  std::optional<PeakRecord> peak_quantum;
  std::optional<PeakRecord> peak_classical;
  std::optional<PeakRecord> peak_asymptotic;
};

// Least-squares fit of ln(runtime) against n over a trailing window,
// plus a power-law trend fit of ln(runtime) against ln(n) over the same
// window (used to check exponential-versus-polynomial behavior).
struct ScalingFit {
  double slope = 0.0;       // d ln(runtime) / d n
  double intercept = 0.0;
  double power_slope = 0.0;  // d ln(runtime) / d ln(n)
  double power_intercept = 0.0;
  double n_min = 0.0;  // window actually used (inclusive)
  double n_max = 0.0;
  std::vector<double> residuals;  // ln-space residuals, window points only
};

// Quantum and classical scaling fits over a common window.
struct FitReport {
  double slope_quantum = 0.0;
  double slope_classical = 0.0;
  double ratio = 0.0;  // slope_quantum / slope_classical
  double n_min = 0.0;
  double n_max = 0.0;
  std::vector<double> residuals_quantum;
  std::vector<double> residuals_classical;
};

enum class OutputFormat { csv, json };

// Not-a-number sentinel used for "method not run" fields.
double unset_value();
bool is_unset(double v);

// Minimizes t / p over the sequence; ties broken toward smaller t.
// Entries with p <= 0 are skipped; if every p is zero (or the sequence is
// empty) throws no_signal_error.
std::pair<int, double> runtime_estimate(
    const std::vector<std::pair<int, double>>& probs);

// Fits ln(runtime) vs n over the trailing `window_frac` of the n-range
// (default: last quarter).  Requires at least 4 points overall and at
// least 2 distinct n inside the window, runtimes > 0; otherwise throws
// parameter_error.  Points may arrive unsorted; they are processed in
// ascending n.
ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points,
                       double window_frac = 0.25);

// Runs fit_scaling on both sequences and combines into a report whose
// window is the union of the two fit windows.
FitReport compare_scaling(
    const std::vector<std::pair<double, double>>& quantum_points,
    const std::vector<std::pair<double, double>>& classical_points,
    double window_frac = 0.25);

// Default sweep horizon for a given depth: covers the quantum peak
// (~1.5 n) and several decades of tail.
int default_t_max(int n);

// Methods to include in a sweep.
struct SweepOptions {
  bool quantum = true;      // generating-function series route
  bool classical = true;    // chain DP
  bool asymptotic = false;  // saddle-point model (t > n only)
};

// Runs the requested methods for depth n over t in [n, t_max] and extracts
// per-method peaks.  Rows are emitted for every t in range (zero-amplitude
// parities included) so columns align across methods.
SweepResult run_sweep(int n, int t_max, const SweepOptions& options);

// Formats a double with the configured number of significant digits
// (default 17, which round-trips bit-exactly).
std::string format_double(double v);

// Sets the significant-digit count used by format_double (1..17); returns
// the previous value.  Lower settings are for human consumption only and
// forfeit the bit-exact round-trip.
int set_output_precision(int digits);

// CSV / JSON emission.  CSV header is
//   n,t,prob_quantum,prob_classical,prob_asymptotic
// with empty fields where a method was not run.  JSON mirrors the field
// names.  Ordering is deterministic (by n, then t).
std::string emit_results(const SweepResult& result, OutputFormat format);
std::string emit_results(const std::vector<SweepResult>& results,
                         OutputFormat format);
std::string emit_results(const FitReport& report, OutputFormat format);

// Parses the CSV form back (used by round-trip tests).
std::vector<SweepResult> parse_results_csv(const std::string& text);

}  // namespace qwalk::cli
