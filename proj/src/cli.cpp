#include "qwalk/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "qwalk/asymptotics.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/series.hpp"

namespace qwalk::cli {

namespace {

// Least-squares line through (x, y); returns {slope, intercept}.
std::pair<double, double> lsq_line(const std::vector<double>& x,
                                   const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) {
    throw parameter_error("fit_scaling: degenerate window (all abscissas equal)");
  }
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  return {slope, intercept};
}

void append_row_csv(std::string& out, int n, const SweepRow& row) {
  out += std::to_string(n);
  out += ',';
  out += std::to_string(row.t);
  for (double v : {row.prob_quantum, row.prob_classical, row.prob_asymptotic}) {
    out += ',';
    if (!is_unset(v)) out += format_double(v);
  }
  out += '\n';
}

void append_row_json(std::string& out, const SweepRow& row) {
  out += "{\"t\": ";
  out += std::to_string(row.t);
  const char* names[3] = {"prob_quantum", "prob_classical", "prob_asymptotic"};
  const double vals[3] = {row.prob_quantum, row.prob_classical, row.prob_asymptotic};
  for (int i = 0; i < 3; ++i) {
    out += ", \"";
    out += names[i];
    out += "\": ";
    out += is_unset(vals[i]) ? "null" : format_double(vals[i]);
  }
  out += '}';
}

void append_peak_json(std::string& out, const char* name,
                      const std::optional<PeakRecord>& peak) {
  out += '"';
  out += name;
  out += "\": ";
  if (peak.has_value()) {
    out += "{\"t_star\": " + std::to_string(peak->t_star) +
           ", \"p_star\": " + format_double(peak->p_star) + "}";
  } else {
    out += "null";
  }
}

void append_sweep_json(std::string& out, const SweepResult& result) {
  out += "{\"n\": " + std::to_string(result.n) + ", \"rows\": [";
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    if (i > 0) out += ", ";
    append_row_json(out, result.rows[i]);
  }
  out += "], \"peaks\": {";
  append_peak_json(out, "quantum", result.peak_quantum);
  out += ", ";
  append_peak_json(out, "classical", result.peak_classical);
  out += ", ";
  append_peak_json(out, "asymptotic", result.peak_asymptotic);
  out += "}}";
}

std::optional<PeakRecord> extract_peak(const std::vector<SweepRow>& rows,
                                       double SweepRow::* field) {
  std::optional<PeakRecord> best;
  for (const SweepRow& row : rows) {
    const double v = row.*field;
    if (is_unset(v)) continue;
    if (!best.has_value() || v > best->p_star) {
      best = PeakRecord{row.t, v};
    }
  }
  return best;
}

}  // namespace

double unset_value() { return std::numeric_limits<double>::quiet_NaN(); }

bool is_unset(double v) { return std::isnan(v); }

std::pair<int, double> runtime_estimate(
    const std::vector<std::pair<int, double>>& probs) {
  bool found = false;
  int t_best = 0;
  double best = 0.0;
  for (const auto& [t, p] : probs) {
    if (!(p > 0.0)) continue;
    const double cost = t / p;
    if (!found || cost < best || (cost == best && t < t_best)) {
      found = true;
      best = cost;
      t_best = t;
    }
  }
  if (!found) {
    throw no_signal_error("runtime_estimate: no positive probability in the sequence");
  }
  return {t_best, best};
}

ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points,
                       double window_frac) {
  if (points.size() < 4) {
    throw parameter_error("fit_scaling: need at least 4 points, got " +
                          std::to_string(points.size()));
  }
  if (!(window_frac > 0.0 && window_frac <= 1.0)) {
    throw parameter_error("fit_scaling: window fraction must lie in (0, 1]");
  }
  std::vector<std::pair<double, double>> pts = points;
  std::sort(pts.begin(), pts.end());
  for (const auto& [n, runtime] : pts) {
    if (!(runtime > 0.0) || !std::isfinite(runtime)) {
      throw parameter_error("fit_scaling: runtimes must be positive and finite");
    }
    if (!(n > 0.0)) {
      throw parameter_error("fit_scaling: depths must be positive");
    }
  }
  const double n_lo = pts.front().first;
  const double n_hi = pts.back().first;
  // Trailing window by n-range, e.g. the last quarter for the default 0.25.
  const double threshold = n_hi - window_frac * (n_hi - n_lo);
  std::vector<double> xs, ys, lx;
  for (const auto& [n, runtime] : pts) {
    if (n + 1e-12 * std::max(1.0, std::abs(n)) < threshold) continue;
    xs.push_back(n);
    ys.push_back(std::log(runtime));
    lx.push_back(std::log(n));
  }
  if (xs.size() < 2 || xs.front() == xs.back()) {
    throw parameter_error("fit_scaling: degenerate window (fewer than two distinct depths)");
  }
  ScalingFit fit;
  std::tie(fit.slope, fit.intercept) = lsq_line(xs, ys);
  std::tie(fit.power_slope, fit.power_intercept) = lsq_line(lx, ys);
  fit.n_min = xs.front();
  fit.n_max = xs.back();
  fit.residuals.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fit.residuals[i] = ys[i] - (fit.intercept + fit.slope * xs[i]);
  }
  return fit;
}

FitReport compare_scaling(
    const std::vector<std::pair<double, double>>& quantum_points,
    const std::vector<std::pair<double, double>>& classical_points,
    double window_frac) {
  const ScalingFit q = fit_scaling(quantum_points, window_frac);
  const ScalingFit c = fit_scaling(classical_points, window_frac);
  FitReport report;
  report.slope_quantum = q.slope;
  report.slope_classical = c.slope;
  report.ratio = q.slope / c.slope;
  report.n_min = std::min(q.n_min, c.n_min);
  report.n_max = std::max(q.n_max, c.n_max);
  report.residuals_quantum = q.residuals;
  report.residuals_classical = c.residuals;
  return report;
}

int default_t_max(int n) { return std::max(4 * n, n + 600); }

SweepResult run_sweep(int n, int t_max, const SweepOptions& options) {
  if (n < 1) throw parameter_error("run_sweep: need n >= 1");
  if (t_max < n) throw parameter_error("run_sweep: need t_max >= n");
  SweepResult result;
  result.n = n;
  std::vector<Amplitude> quantum_amps;
  if (options.quantum) quantum_amps = series::amplitude_sequence(n, t_max);
  std::vector<double> classical_probs;
  if (options.classical) {
    classical_probs = classical::chain_dp(n, t_max, classical::ChainParams{});
  }
  result.rows.reserve(static_cast<std::size_t>(t_max - n) + 1);
  for (int t = n; t <= t_max; ++t) {
    SweepRow row;
    row.t = t;
    if (options.quantum) {
      row.prob_quantum = std::norm(quantum_amps[static_cast<std::size_t>(t)]);
    }
    if (options.classical) {
      row.prob_classical = classical_probs[static_cast<std::size_t>(t)];
    }
    if (options.asymptotic && t > n) {
      try {
        row.prob_asymptotic = asymptotics::asymptotic_probability(n, t);
      } catch (const domain_error&) {
        // below the saddle-coalescence threshold; leave the field empty
      }
    }
    result.rows.push_back(row);
  }
  result.peak_quantum = extract_peak(result.rows, &SweepRow::prob_quantum);
  result.peak_classical = extract_peak(result.rows, &SweepRow::prob_classical);
  result.peak_asymptotic = extract_peak(result.rows, &SweepRow::prob_asymptotic);
  return result;
}

namespace {
int g_precision = 17;
}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", g_precision, v);
  return buf;
}

int set_output_precision(int digits) {
  if (digits < 1 || digits > 17) {
    throw parameter_error("set_output_precision: need 1..17 significant digits");
  }
  const int prev = g_precision;
  g_precision = digits;
  return prev;
}

std::string emit_results(const SweepResult& result, OutputFormat format) {
  return emit_results(std::vector<SweepResult>{result}, format);
}

std::string emit_results(const std::vector<SweepResult>& results,
                         OutputFormat format) {
  std::vector<const SweepResult*> ordered;
  ordered.reserve(results.size());
  for (const SweepResult& r : results) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const SweepResult* a, const SweepResult* b) { return a->n < b->n; });
  std::string out;
  if (format == OutputFormat::csv) {
    out = "n,t,prob_quantum,prob_classical,prob_asymptotic\n";
    for (const SweepResult* r : ordered) {
      for (const SweepRow& row : r->rows) append_row_csv(out, r->n, row);
    }
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i > 0) out += ", ";
    append_sweep_json(out, *ordered[i]);
  }
  out += "]\n";
  return out;
}

std::string emit_results(const FitReport& report, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "field,value\n";
    out += "slope_quantum," + format_double(report.slope_quantum) + "\n";
    out += "slope_classical," + format_double(report.slope_classical) + "\n";
    out += "ratio," + format_double(report.ratio) + "\n";
    out += "n_min," + format_double(report.n_min) + "\n";
    out += "n_max," + format_double(report.n_max) + "\n";
    for (std::size_t i = 0; i < report.residuals_quantum.size(); ++i) {
      out += "residual_quantum_" + std::to_string(i) + "," +
             format_double(report.residuals_quantum[i]) + "\n";
    }
    for (std::size_t i = 0; i < report.residuals_classical.size(); ++i) {
      out += "residual_classical_" + std::to_string(i) + "," +
             format_double(report.residuals_classical[i]) + "\n";
    }
    return out;
  }
  std::string out = "{\"slope_quantum\": " + format_double(report.slope_quantum);
  out += ", \"slope_classical\": " + format_double(report.slope_classical);
  out += ", \"ratio\": " + format_double(report.ratio);
  out += ", \"n_min\": " + format_double(report.n_min);
  out += ", \"n_max\": " + format_double(report.n_max);
  out += ", \"residuals_quantum\": [";
  for (std::size_t i = 0; i < report.residuals_quantum.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(report.residuals_quantum[i]);
  }
  out += "], \"residuals_classical\": [";
  for (std::size_t i = 0; i < report.residuals_classical.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(report.residuals_classical[i]);
  }
  out += "]}\n";
  return out;
}

std::vector<SweepResult> parse_results_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "n,t,prob_quantum,prob_classical,prob_asymptotic") {
    throw parameter_error("parse_results_csv: missing or wrong header line");
  }
  std::vector<SweepResult> results;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<std::string, 5> fields;
    std::size_t start = 0;
    for (int f = 0; f < 5; ++f) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        if (f != 4) throw parameter_error("parse_results_csv: expected 5 fields");
        fields[static_cast<std::size_t>(f)] = line.substr(start);
        break;
      }
      fields[static_cast<std::size_t>(f)] = line.substr(start, comma - start);
      start = comma + 1;
    }
    SweepRow row;
    const int n = std::stoi(fields[0]);
    row.t = std::stoi(fields[1]);
    for (int f = 2; f < 5; ++f) {
      const std::string& s = fields[static_cast<std::size_t>(f)];
      if (s.empty()) continue;
      const double v = std::strtod(s.c_str(), nullptr);
      if (f == 2) row.prob_quantum = v;
      if (f == 3) row.prob_classical = v;
      if (f == 4) row.prob_asymptotic = v;
    }
    if (results.empty() || results.back().n != n) {
      SweepResult r;
      r.n = n;
      results.push_back(r);
    }
    results.back().rows.push_back(row);
  }
  for (SweepResult& r : results) {
    r.peak_quantum = extract_peak(r.rows, &SweepRow::prob_quantum);
    r.peak_classical = extract_peak(r.rows, &SweepRow::prob_classical);
    r.peak_asymptotic = extract_peak(r.rows, &SweepRow::prob_asymptotic);
  }
  return results;
}

}  // namespace qwalk::cli
