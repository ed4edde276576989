// Command-line front end: per-depth sweeps of the tree walk's root-return
// probability (direct simulation, generating-function series, saddle-point
// asymptotics), the exact classical benchmark, peak tables, run-time scaling
// fits, and two framework demos.  Emits CSV or JSON; deterministic output;
// exit 0 on success, nonzero with a machine-readable error line on stderr.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwalk/asymptotics.hpp"
#include "qwalk/btree.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/cli.hpp"
#include "qwalk/interchange.hpp"
#include "qwalk/memchain.hpp"
#include "qwalk/series.hpp"

namespace {

using qwalk::cli::OutputFormat;

const char* error_kind(const qwalk::error& e) {
  if (dynamic_cast<const qwalk::branch_error*>(&e)) return "branch_error";
  if (dynamic_cast<const qwalk::singular_error*>(&e)) return "singular_error";
  if (dynamic_cast<const qwalk::no_signal_error*>(&e)) return "no_signal_error";
  if (dynamic_cast<const qwalk::parameter_error*>(&e)) return "parameter_error";
  if (dynamic_cast<const qwalk::config_error*>(&e)) return "config_error";
  if (dynamic_cast<const qwalk::resource_error*>(&e)) return "resource_error";
  if (dynamic_cast<const qwalk::numeric_error*>(&e)) return "numeric_error";
  if (dynamic_cast<const qwalk::domain_error*>(&e)) return "domain_error";
  return "error";
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
  int precision = 17;

  OutputFormat parsed_format() const {
    return format == "json" ? OutputFormat::json : OutputFormat::csv;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--precision", opts.precision,
                  "Significant digits for floating-point output (1..17)")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

void deliver(const std::string& payload, const CommonOpts& opts) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f || !(f << payload) || !f.flush()) {
    throw qwalk::error("cannot write output file: " + opts.out_path);
  }
}

// (site, probability) table shared by the two demo subcommands.
std::string emit_site_table(const std::vector<std::pair<long long, double>>& rows,
                            OutputFormat format) {
  std::string out;
  if (format == OutputFormat::csv) {
    out = "site,probability\n";
    for (const auto& [site, p] : rows) {
      out += std::to_string(site) + "," + qwalk::cli::format_double(p) + "\n";
    }
    return out;
  }
  out = "[";
  bool first = true;
  for (const auto& [site, p] : rows) {
    if (!first) out += ", ";
    first = false;
    out += "{\"site\": " + std::to_string(site) +
           ", \"probability\": " + qwalk::cli::format_double(p) + "}";
  }
  out += "]\n";
  return out;
}

qwalk::cli::SweepResult sweep_from_amplitudes(int n, const std::vector<qwalk::Amplitude>& amps) {
  qwalk::cli::SweepResult result;
  result.n = n;
  for (int t = n; t < static_cast<int>(amps.size()); ++t) {
    qwalk::cli::SweepRow row;
    row.t = t;
    row.prob_quantum = std::norm(amps[static_cast<std::size_t>(t)]);
    result.rows.push_back(row);
  }
  for (const auto& row : result.rows) {
    if (!result.peak_quantum || row.prob_quantum > result.peak_quantum->p_star) {
      result.peak_quantum = qwalk::cli::PeakRecord{row.t, row.prob_quantum};
    }
  }
  return result;
}

int run(int argc, char** argv) {
  CLI::App app{"Root-return statistics of the coinless binary-tree quantum walk"};
  app.require_subcommand(1);

  // --- simulate: direct state-vector evolution -----------------------------
  auto* sim = app.add_subcommand("simulate", "Direct evolution (full tree or projected line)");
  int sim_n = 3, sim_tmax = -1;
  std::string sim_method = "projected";
  CommonOpts sim_opts;
  sim->add_option("--n", sim_n, "Start level")->capture_default_str();
  sim->add_option("--t-max", sim_tmax, "Number of steps (default n + 20)");
  sim->add_option("--method", sim_method, "Simulator")
      ->check(CLI::IsMember({"tree", "projected"}))
      ->capture_default_str();
  add_common(sim, sim_opts);

  // --- series: generating-function route -----------------------------------
  auto* ser = app.add_subcommand("series", "Root-return probabilities via series inversion");
  int ser_n = 10, ser_tmax = -1;
  CommonOpts ser_opts;
  ser->add_option("--n", ser_n, "Start level")->capture_default_str();
  ser->add_option("--t-max", ser_tmax, "Horizon (default max(4n, n+600))");
  add_common(ser, ser_opts);

  // --- asympt: saddle-point model -------------------------------------------
  auto* asy = app.add_subcommand("asympt", "Saddle-point asymptotic probabilities");
  int asy_n = 10, asy_tmax = -1;
  CommonOpts asy_opts;
  asy->add_option("--n", asy_n, "Start level")->capture_default_str();
  asy->add_option("--t-max", asy_tmax, "Horizon (default max(4n, n+600))");
  add_common(asy, asy_opts);

  // --- classical: benchmark chain -------------------------------------------
  auto* cla = app.add_subcommand("classical", "Classical chain root-occupancy probabilities");
  int cla_n = 10, cla_tmax = -1;
  CommonOpts cla_opts;
  cla->add_option("--n", cla_n, "Start site")->capture_default_str();
  cla->add_option("--t-max", cla_tmax, "Horizon (default max(4n, n+600))");
  add_common(cla, cla_opts);

  // --- table1: peak grid -----------------------------------------------------
  auto* tab = app.add_subcommand("table1", "Quantum and classical peak probabilities and times");
  CommonOpts tab_opts;
  add_common(tab, tab_opts);

  // --- fit: run-time scaling --------------------------------------------------
  auto* fit = app.add_subcommand("fit", "Exponential run-time scaling fit, quantum vs classical");
  int fit_n = 500;
  double fit_frac = 0.25;
  CommonOpts fit_opts;
  fit->add_option("--n", fit_n, "Largest depth in the sweep")->capture_default_str();
  fit->add_option("--window-frac", fit_frac, "Trailing fraction of the depth range to fit")
      ->capture_default_str();
  add_common(fit, fit_opts);

  // --- memchain-demo -----------------------------------------------------------
  auto* mem = app.add_subcommand("memchain-demo",
                                 "Persistent cycle walk: site marginal after t steps");
  int mem_n = 8, mem_tmax = 6;
  double mem_p = 0.5;
  CommonOpts mem_opts;
  mem->add_option("--n", mem_n, "Cycle size")->capture_default_str();
  mem->add_option("--t-max", mem_tmax, "Steps")->capture_default_str();
  mem->add_option("--p", mem_p, "Persistence probability")->capture_default_str();
  add_common(mem, mem_opts);

  // --- line-demo ----------------------------------------------------------------
  auto* lin = app.add_subcommand("line-demo",
                                 "Coinless line walk: position distribution after t steps");
  int lin_tmax = 10;
  double lin_p = 0.5;
  CommonOpts lin_opts;
  lin->add_option("--t-max", lin_tmax, "Steps")->capture_default_str();
  lin->add_option("--p", lin_p, "Transmission probability")->capture_default_str();
  add_common(lin, lin_opts);

  CLI11_PARSE(app, argc, argv);

  if (sim->parsed()) {
    qwalk::cli::set_output_precision(sim_opts.precision);
    const int t_max = sim_tmax >= 0 ? sim_tmax : sim_n + 20;
    const auto amps = sim_method == "tree" ? qwalk::btree::simulate_tree(sim_n, t_max)
                                           : qwalk::btree::simulate_projected(sim_n, t_max);
    deliver(qwalk::cli::emit_results(sweep_from_amplitudes(sim_n, amps),
                                     sim_opts.parsed_format()),
            sim_opts);
  } else if (ser->parsed()) {
    qwalk::cli::set_output_precision(ser_opts.precision);
    const int t_max = ser_tmax >= 0 ? ser_tmax : qwalk::cli::default_t_max(ser_n);
    qwalk::cli::SweepOptions options;
    options.quantum = true;
    options.classical = false;
    deliver(qwalk::cli::emit_results(qwalk::cli::run_sweep(ser_n, t_max, options),
                                     ser_opts.parsed_format()),
            ser_opts);
  } else if (asy->parsed()) {
    qwalk::cli::set_output_precision(asy_opts.precision);
    const int t_max = asy_tmax >= 0 ? asy_tmax : qwalk::cli::default_t_max(asy_n);
    qwalk::cli::SweepOptions options;
    options.quantum = false;
    options.classical = false;
    options.asymptotic = true;
    deliver(qwalk::cli::emit_results(qwalk::cli::run_sweep(asy_n, t_max, options),
                                     asy_opts.parsed_format()),
            asy_opts);
  } else if (cla->parsed()) {
    qwalk::cli::set_output_precision(cla_opts.precision);
    const int t_max = cla_tmax >= 0 ? cla_tmax : qwalk::cli::default_t_max(cla_n);
    qwalk::cli::SweepOptions options;
    options.quantum = false;
    options.classical = true;
    deliver(qwalk::cli::emit_results(qwalk::cli::run_sweep(cla_n, t_max, options),
                                     cla_opts.parsed_format()),
            cla_opts);
  } else if (tab->parsed()) {
    qwalk::cli::set_output_precision(tab_opts.precision);
    std::vector<qwalk::cli::SweepResult> grid;
    for (int n : {10, 20, 50, 100, 200, 500}) {
      qwalk::cli::SweepOptions options;  // quantum + classical
      const auto sweep =
          qwalk::cli::run_sweep(n, qwalk::cli::default_t_max(n), options);
      qwalk::cli::SweepResult peaks;
      peaks.n = n;
      qwalk::cli::SweepRow qrow;
      qrow.t = sweep.peak_quantum->t_star;
      qrow.prob_quantum = sweep.peak_quantum->p_star;
      qwalk::cli::SweepRow crow;
      crow.t = sweep.peak_classical->t_star;
      crow.prob_classical = sweep.peak_classical->p_star;
      peaks.rows = {qrow, crow};
      peaks.peak_quantum = sweep.peak_quantum;
      peaks.peak_classical = sweep.peak_classical;
      grid.push_back(peaks);
    }
    deliver(qwalk::cli::emit_results(grid, tab_opts.parsed_format()), tab_opts);
  } else if (fit->parsed()) {
    qwalk::cli::set_output_precision(fit_opts.precision);
    if (fit_n < 40) throw qwalk::parameter_error("fit: need --n >= 40");
    std::vector<std::pair<double, double>> q_points, c_points;
    for (int i = 1; i <= 10; ++i) {
      const int n = fit_n * i / 10;
      qwalk::cli::SweepOptions options;  // quantum + classical
      const auto sweep =
          qwalk::cli::run_sweep(n, qwalk::cli::default_t_max(n), options);
      std::vector<std::pair<int, double>> probs_q, probs_c;
      for (const auto& row : sweep.rows) {
        probs_q.emplace_back(row.t, row.prob_quantum);
        probs_c.emplace_back(row.t, row.prob_classical);
      }
      q_points.emplace_back(n, qwalk::cli::runtime_estimate(probs_q).second);
      c_points.emplace_back(n, qwalk::cli::runtime_estimate(probs_c).second);
    }
    deliver(qwalk::cli::emit_results(
                qwalk::cli::compare_scaling(q_points, c_points, fit_frac),
                fit_opts.parsed_format()),
            fit_opts);
  } else if (mem->parsed()) {
    qwalk::cli::set_output_precision(mem_opts.precision);
    const auto chain = qwalk::memchain::persistent_cycle_chain(mem_n, mem_p);
    qwalk::memchain::MemoryDistribution mu(mem_n);
    mu.at(0, 1 % mem_n) = 1.0;  // walker at site 1, arrived from site 0
    for (int t = 0; t < mem_tmax; ++t) {
      mu = qwalk::memchain::evolve_distribution(mu, chain);
    }
    const auto marg = qwalk::memchain::marginal(mu);
    std::vector<std::pair<long long, double>> rows;
    for (int s = 0; s < mem_n; ++s) rows.emplace_back(s, marg[static_cast<std::size_t>(s)]);
    deliver(emit_site_table(rows, mem_opts.parsed_format()), mem_opts);
  } else if (lin->parsed()) {
    qwalk::cli::set_output_precision(lin_opts.precision);
    qwalk::interchange::InterchangeWalk walk;
    const double p = lin_p;
    walk.adjacency = [](qwalk::NodeId v) {
      return std::vector<qwalk::NodeId>{v - 1, v + 1};
    };
    walk.unitary_factory = [p](qwalk::NodeId v) {
      return qwalk::interchange::line_unitary(v, p);
    };
    qwalk::interchange::ProductState state;
    state.add(-1, 0, qwalk::Amplitude{1.0, 0.0});  // moving right through 0
    for (int t = 0; t < lin_tmax; ++t) {
      state = qwalk::interchange::step(state, walk);
    }
    std::map<long long, double> dist;
    for (const auto& [key, amp] : state.entries) {
      dist[key.second] += std::norm(amp);
    }
    std::vector<std::pair<long long, double>> rows(dist.begin(), dist.end());
    deliver(emit_site_table(rows, lin_opts.parsed_format()), lin_opts);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qwalk::error& e) {
    std::cerr << "{\"error\": \"" << error_kind(e) << "\", \"message\": \""
              << json_escape(e.what()) << "\"}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"internal\", \"message\": \"" << json_escape(e.what())
              << "\"}\n";
    return 3;
  }
}
