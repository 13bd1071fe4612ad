// Copyright 2026 The Scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scramble/config.hpp"
#include "scramble/csv.hpp"
#include "scramble/errors.hpp"
#include "scramble/experiments.hpp"
#include "scramble/power_law.hpp"
#include "scramble/series.hpp"
#include "scramble/svg.hpp"

#ifndef SCRAMBLE_VERSION
#define SCRAMBLE_VERSION "unknown"
#endif

namespace scramble::cli {

namespace fs = std::filesystem;

namespace {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kNormalizationNote =
    "i3_avg is the mean of I3(n) over kicks n = T1..T2 inclusive, divided by the number of terms "
    "T2 - T1 + 1; for the continuous model it is the trapezoidal integral over [T1, T2] divided "
    "by T2 - T1 on the dt grid.";

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw OutputError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw OutputError("cannot open " + path.string() + " for writing");
  f << content;
  f.flush();
  if (!f) throw OutputError("write to " + path.string() + " failed");
}

void emit(const std::string& out_path, const std::string& content, std::ostream& out) {
  if (out_path.empty() || out_path == "-")
    out << content;
  else
    write_file(out_path, content);
}

std::string csv_text(const CsvTable& table) {
  std::ostringstream s;
  write_csv(s, table);
  return s.str();
}

CsvTable load_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open " + path);
  return read_csv(f);
}

std::vector<InitialStateKind> parse_inits(const std::vector<std::string>& names) {
  std::vector<InitialStateKind> out;
  for (const auto& n : names) out.push_back(parse_initial_state(n));
  return out;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
  std::string model = "floquet";
  int n = 11;
  int ell = 5;
  std::string tau;
  std::string init = "allup";
  int steps = 500;
  double hx = 0.0;
  double hz = 1.0;
  double J = 1.0;
  double dt = 0.1;
  bool oracle = false;
  std::string out;
};

void add_simulate_flags(CLI::App* cmd, SimulateArgs& a, bool fixed_point) {
  if (!fixed_point) {
    cmd->add_option("--model", a.model, "floquet or tfim")->capture_default_str();
    cmd->add_option("--n", a.n, "chain length N")->capture_default_str();
    cmd->add_option("--ell", a.ell, "size of subsystem Y")->capture_default_str();
    cmd->add_option("--tau", a.tau, "kick period: pi/4, 3*pi/16, k*eps/2 or radians");
    cmd->add_option("--init", a.init, "allup or neel")->capture_default_str();
    cmd->add_option("--steps", a.steps, "kicks (floquet) or dt steps (tfim)")->capture_default_str();
    cmd->add_option("--hx", a.hx, "transverse field h_x")->capture_default_str();
    cmd->add_option("--hz", a.hz, "field h_z")->capture_default_str();
    cmd->add_option("--J", a.J, "Ising coupling")->capture_default_str();
    cmd->add_option("--dt", a.dt, "time step of the tfim grid")->capture_default_str();
  }
  cmd->add_flag("--oracle", a.oracle, "use the explicit partial-trace entropy path");
  cmd->add_option("--out", a.out, "output CSV (stdout when omitted)");
}

TmiSeries simulate(const SimulateArgs& a, const CLI::App& cmd) {
  const ModelKind model = parse_model_kind(a.model);
  ModelParams p;
  p.J = a.J;
  p.h_x = a.hx;
  p.h_z = a.hz;
  p.num_sites = a.n;
  if (a.n > kMaxExperimentSites)
    throw ResourceError("N = " + std::to_string(a.n) + " exceeds the 2^12 amplitude budget");
  const Partition part(a.n, a.ell);
  const InitialStateKind init = parse_initial_state(a.init);
  const EntropyMethod method = a.oracle ? EntropyMethod::PartialTrace : EntropyMethod::Schmidt;
  const auto* dt_flag = cmd.get_option_no_throw("--dt");
  if (model == ModelKind::Floquet) {
    if (dt_flag && dt_flag->count() > 0) throw ArgumentError("--dt applies to --model tfim only");
    if (a.tau.empty()) throw ArgumentError("--model floquet requires --tau");
    p.tau = Period::parse(a.tau);
    p.validate();
    return tmi_time_series(p, part, init, a.steps, method);
  }
  if (!a.tau.empty()) throw ArgumentError("--tau applies to --model floquet only");
  if (a.steps < 1) throw ArgumentError("--steps must be positive");
  p.validate();
  return tfim_time_series(p, part, init, TimeGrid{a.dt, static_cast<std::size_t>(a.steps)}, method);
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  std::string config;
  std::string out;
  int threads = 0;
  bool no_series = false;
};

std::string series_file_name(const RecordKey& k) {
  std::string tau = "r" + format_float(k.tau.value());
  if (auto f = k.tau.fraction()) tau = std::to_string(f->first) + "-" + std::to_string(f->second);
  return std::string(to_string(k.model)) + "_hx" + format_float(k.h_x) + "_" +
         std::string(to_string(k.init)) + "_N" + std::to_string(k.num_sites) + "_tau" + tau + "_ell" +
         std::to_string(k.ell) + ".csv";
}

int cmd_sweep(const SweepArgs& a, std::ostream& err) {
  const ExperimentSpec spec = load_experiment_config(a.config);
  const fs::path dir(a.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw OutputError("cannot create output directory " + a.out);
  {
    std::ofstream probe(dir / "summary.csv", std::ios::binary);
    if (!probe) throw OutputError("output directory " + a.out + " is not writable");
  }

  err << "sweep: " << spec.grid_size() << " grid points\n";
  const SweepResult result = run_sweep(spec, a.threads);

  std::size_t failed = 0;
  if (!a.no_series) {
    for (const auto& r : result.records)
      if (r.series) write_file(dir / "series" / series_file_name(r.key), csv_text(series_table(*r.series)));
  }
  for (const auto& r : result.records)
    if (!r.ok()) {
      ++failed;
      err << "record " << series_file_name(r.key) << " failed: " << r.error << '\n';
    }
  write_file(dir / "summary.csv", csv_text(summary_table(result)));

  nlohmann::ordered_json side;
  side["version"] = SCRAMBLE_VERSION;
  nlohmann::ordered_json echo = nlohmann::ordered_json::object();
  for (const auto& [k, v] : describe_experiment(spec)) echo[k] = v;
  side["spec"] = echo;
  side["normalization"] = kNormalizationNote;
  side["records"] = result.records.size();
  side["failed"] = failed;
  side["summary"] = "summary.csv";
  write_file(dir / "summary.json", side.dump(2) + "\n");
  return kOk;
}

// ---- plot -----------------------------------------------------------------

struct PlotArgs {
  std::vector<std::string> inputs;
  std::string out;
  bool loglog = false;
  std::string x_axis = "tau";
  std::string title;
};

bool is_series(const CsvTable& t) { return t.column("time") && t.column("i3"); }
bool is_summary(const CsvTable& t) {
  return std::all_of(summary_header().begin(), summary_header().begin() + 10,
                     [&](const std::string& c) { return t.column(c).has_value(); });
}

int cmd_plot(const PlotArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<PlotSeries> groups;
  std::size_t skipped = 0;
  PlotOptions opt;
  opt.loglog = a.loglog;
  opt.title = a.title;

  for (const auto& path : a.inputs) {
    const CsvTable t = load_csv(path);
    if (is_series(t)) {
      PlotSeries s;
      s.label = fs::path(path).stem().string();
      const std::size_t ct = *t.column("time"), ci = *t.column("i3");
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const double x = parse_float(t.rows[r][ct], r + 2);
        const double i3 = parse_float(t.rows[r][ci], r + 2);
        const double y = a.loglog ? 1.0 - i3 : i3;
        if (a.loglog && (x <= 0.0 || y <= 0.0)) {
          ++skipped;
          continue;
        }
        s.x.push_back(x);
        s.y.push_back(y);
      }
      opt.x_label = a.loglog ? "log t" : "t";
      opt.y_label = a.loglog ? "log(1 - I3)" : "I3";
      groups.push_back(std::move(s));
    } else if (is_summary(t)) {
      static const std::vector<std::string> axes{"tau", "ell", "N"};
      if (std::find(axes.begin(), axes.end(), a.x_axis) == axes.end())
        throw ArgumentError("--x must be tau, ell or N");
      std::map<std::string, PlotSeries> by_key;
      const auto col = [&](const char* name) { return *t.column(name); };
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        const std::size_t lineno = r + 2;
        if (row[col("i3_avg")].empty()) {
          ++skipped;
          continue;
        }
        double x;
        std::string key = row[col("model")] + " " + row[col("init")];
        if (const auto hx = t.column("hx")) key += " hx=" + row[*hx];
        if (a.x_axis == "tau") {
          x = parse_float(row[col("tau_num")], lineno) / parse_float(row[col("tau_den")], lineno);
          key += " N=" + row[col("N")] + " ell=" + row[col("ell")];
        } else if (a.x_axis == "ell") {
          x = parse_float(row[col("ell")], lineno);
          key += " N=" + row[col("N")] + " tau=" + row[col("tau_num")] + "pi/" + row[col("tau_den")];
        } else {
          x = parse_float(row[col("N")], lineno);
          key += " ell=" + row[col("ell")] + " tau=" + row[col("tau_num")] + "pi/" + row[col("tau_den")];
        }
        const double avg = parse_float(row[col("i3_avg")], lineno);
        const double y = a.loglog ? 1.0 - avg : avg;
        if (a.loglog && (x <= 0.0 || y <= 0.0)) {
          ++skipped;
          continue;
        }
        auto& s = by_key[key];
        s.label = key;
        s.x.push_back(x);
        s.y.push_back(y);
      }
      for (auto& [key, s] : by_key) {
        std::vector<std::size_t> order(s.x.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](auto l, auto r) { return s.x[l] < s.x[r]; });
        PlotSeries sorted{s.label, {}, {}};
        for (auto i : order) {
          sorted.x.push_back(s.x[i]);
          sorted.y.push_back(s.y[i]);
        }
        groups.push_back(std::move(sorted));
      }
      opt.x_label = a.x_axis == "tau" ? "tau / pi" : a.x_axis;
      opt.y_label = a.loglog ? "1 - mean I3" : "mean I3";
    } else {
      throw MalformedCsvError(1, path + ": header matches neither the series nor the summary schema");
    }
  }
  if (skipped) err << "warning: skipped " << skipped << " row(s) with values outside the plot domain\n";
  emit(a.out, render_svg(groups, opt), out);
  return kOk;
}

// ---- fit ------------------------------------------------------------------

struct FitArgs {
  std::string input;
  FitOptions options;
  int smoothing = 3;
  int min_points = 4;
};

int cmd_fit(const FitArgs& a, std::ostream& out) {
  const CsvTable table = load_csv(a.input);
  const auto ct = table.column("time"), ci = table.column("i3");
  if (!ct || !ci) throw MalformedCsvError(1, "expected columns 'time' and 'i3'");
  std::vector<double> t, i3;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    t.push_back(parse_float(table.rows[r][*ct], r + 2));
    i3.push_back(parse_float(table.rows[r][*ci], r + 2));
  }
  FitOptions opt = a.options;
  opt.smoothing = a.smoothing;
  if (a.min_points < 2) throw ArgumentError("--min-points must be at least 2");
  opt.min_points = static_cast<std::size_t>(a.min_points);
  const FitResult r = fit_power_law(t, i3, opt);
  out << "exponent," << format_float(r.exponent) << '\n'
      << "log_prefactor," << format_float(r.log_prefactor) << '\n'
      << "window_start," << format_float(t[r.window_start]) << '\n'
      << "window_end," << format_float(t[r.window_end]) << '\n'
      << "rms_residual," << format_float(r.rms_residual) << '\n';
  return kOk;
}

// ---- self-dual ------------------------------------------------------------

struct SelfDualArgs {
  int n = 11;
  int ell = 5;
  int steps = 500;
  int t1 = 100;
  int t2 = 500;
  double hx = 0.0;
  std::vector<std::string> inits{"allup", "neel"};
};

int cmd_self_dual(const SelfDualArgs& a, std::ostream& out, std::ostream& err) {
  const auto report = self_dual_report(a.n, a.ell, parse_inits(a.inits), a.steps, a.t1, a.t2, a.hx);
  out << "init,i3_avg,period_defect,periodic\n";
  for (const auto& tr : report.trajectories)
    out << to_string(tr.init) << ',' << format_float(tr.i3_avg) << ',' << format_float(tr.period_defect) << ','
        << (tr.periodic ? "yes" : "no") << '\n';
  for (const auto& f : report.failures) err << "check failed: " << f << '\n';
  return report.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information scrambling in kicked and continuous Ising chains", "scramble"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SCRAMBLE_VERSION);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "I3 time series for one trajectory (CSV)");
  add_simulate_flags(simulate_cmd, sim, false);

  SimulateArgs table;
  table.tau = "pi/4";
  table.steps = 11;
  auto* table_cmd = app.add_subcommand("entropy-table", "entropies over one period at the self-dual point, N = 11, ell = 5");
  add_simulate_flags(table_cmd, table, true);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a config-file grid; writes summary, series and JSON");
  sweep_cmd->add_option("--config", sweep.config, "experiment config file")->required();
  sweep_cmd->add_option("--out", sweep.out, "output directory")->required();
  sweep_cmd->add_option("--threads", sweep.threads, "workers (default: SCRAMBLE_THREADS or all cores)");
  sweep_cmd->add_flag("--no-series", sweep.no_series, "write only the summary files");

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "render series or summary CSV files as SVG");
  plot_cmd->add_option("inputs", plot.inputs, "CSV files")->required();
  plot_cmd->add_option("--out", plot.out, "output SVG (stdout when omitted)");
  plot_cmd->add_flag("--loglog", plot.loglog, "plot 1 - I3 on log-log axes");
  plot_cmd->add_option("--x", plot.x_axis, "summary x axis: tau, ell or N")->capture_default_str();
  plot_cmd->add_option("--title", plot.title, "plot title");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "power-law exponent of 1 - I3 from a series CSV");
  fit_cmd->add_option("input", fit.input, "series CSV")->required();
  fit_cmd->add_option("--delta", fit.options.delta, "window threshold")->capture_default_str();
  fit_cmd->add_option("--smoothing", fit.smoothing, "moving-average width")->capture_default_str();
  fit_cmd->add_option("--min-points", fit.min_points, "minimum window length")->capture_default_str();

  SelfDualArgs dual;
  auto* dual_cmd = app.add_subcommand("self-dual", "periodicity and init-independence at tau = pi/4");
  dual_cmd->add_option("--n", dual.n, "odd chain length")->capture_default_str();
  dual_cmd->add_option("--ell", dual.ell, "size of subsystem Y")->capture_default_str();
  dual_cmd->add_option("--steps", dual.steps, "kicks")->capture_default_str();
  dual_cmd->add_option("--t1", dual.t1, "averaging start")->capture_default_str();
  dual_cmd->add_option("--t2", dual.t2, "averaging end")->capture_default_str();
  dual_cmd->add_option("--hx", dual.hx, "transverse field h_x")->capture_default_str();
  dual_cmd->add_option("--init", dual.inits, "initial states")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n\n";
    const CLI::App* ctx = &app;
    for (auto* sub : app.get_subcommands()) ctx = sub;
    err << ctx->help();
    return kUsage;
  }

  try {
    if (*simulate_cmd) {
      const auto series = simulate(sim, *simulate_cmd);
      emit(sim.out, csv_text(series_table(series)), out);
      return kOk;
    }
    if (*table_cmd) {
      const auto series = simulate(table, *table_cmd);
      emit(table.out, csv_text(series_table(series)), out);
      return kOk;
    }
    if (*sweep_cmd) return cmd_sweep(sweep, err);
    if (*plot_cmd) return cmd_plot(plot, out, err);
    if (*fit_cmd) return cmd_fit(fit, out);
    if (*dual_cmd) return cmd_self_dual(dual, out, err);
  } catch (const MalformedCsvError& e) {
    err << "error: malformed CSV, " << e.what() << '\n';
    return kMalformedCsv;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kUnwritable;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FitInfeasibleError& e) {
    err << "error: no fit window: " << e.what() << '\n';
    return kNumerical;
  } catch (const NumericalError& e) {
    err << "error: numerical check failed: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace scramble::cli
