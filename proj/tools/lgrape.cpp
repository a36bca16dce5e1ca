// Command-line driver: sweeps, single optimizations, pulse evaluation and the
// verification suite.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lgrape/controls.hpp"
#include "lgrape/errors.hpp"
#include "lgrape/experiment.hpp"
#include "lgrape/grape.hpp"
#include "lgrape/pulse_io.hpp"
#include "lgrape/sweep.hpp"
#include "lgrape/verify.hpp"

namespace fs = std::filesystem;
using namespace lgrape;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

struct Options {
  std::string experiment = "single";
  std::vector<std::string> schemes;
  std::string noise = "none";
  std::optional<double> T, dt, gamma1, gamma2, eta1, eta2, omega0, theta, p, axis_theta, axis_phi,
      omega_c, u_max;
  std::string grid;
  std::uint64_t seed = 42;
  int jobs = 0;
  std::string out;
  std::string pulse;
  std::optional<int> max_iters, restarts;
  double lr = 0.001;
  std::string rule = "plain";
  bool record_timing = false;
  std::string fault = "none";
};

void require_noise(const std::optional<double>& v, const char* flag, bool ok, NoiseKind noise) {
  if (v && !ok) {
    throw ArgumentError(std::string(flag) + " does not apply to noise '" +
                        std::string(to_string(noise)) + "'");
  }
}

int resolved_jobs(int requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

ExperimentParams params_from(const Options& o) {
  ExperimentParams p;
  p.noise = parse_noise_kind(o.noise);
  const bool homogeneous = p.noise != NoiseKind::None && p.noise != NoiseKind::SpinBosonPC;
  require_noise(o.gamma1, "--gamma1", homogeneous, p.noise);
  require_noise(o.gamma2, "--gamma2", homogeneous, p.noise);
  require_noise(o.eta1, "--eta1", p.noise == NoiseKind::SpinBosonPC, p.noise);
  require_noise(o.eta2, "--eta2", p.noise == NoiseKind::SpinBosonPC, p.noise);
  require_noise(o.theta, "--theta", p.noise == NoiseKind::SpinBosonPC, p.noise);
  require_noise(o.omega_c, "--omega-c", p.noise == NoiseKind::SpinBosonPC, p.noise);
  require_noise(o.p, "--p", p.noise == NoiseKind::PauliXY, p.noise);
  require_noise(o.axis_theta, "--axis-theta", p.noise == NoiseKind::GeneralizedPauliDephasing, p.noise);
  require_noise(o.axis_phi, "--axis-phi", p.noise == NoiseKind::GeneralizedPauliDephasing, p.noise);
  p.gamma1 = o.gamma1;
  p.gamma2 = o.gamma2;
  p.eta1 = o.eta1;
  p.eta2 = o.eta2;
  p.theta = o.theta;
  p.p = o.p;
  p.axis_theta = o.axis_theta;
  p.axis_phi = o.axis_phi;
  if (o.omega_c) p.omega_c = *o.omega_c;
  if (o.omega0) p.omega0 = *o.omega0;
  if (o.T) p.T = *o.T;
  if (o.dt) p.dt = *o.dt;

  auto& opt = p.optimizer;
  opt.seed = o.seed;
  opt.learning_rate = o.lr;
  if (o.max_iters) opt.max_iters = *o.max_iters;
  if (o.restarts) opt.restarts = *o.restarts;
  opt.u_max = o.u_max;
  if (o.rule == "adam") {
    opt.rule = AscentRule::Adam;
  } else if (o.rule != "plain") {
    throw ArgumentError("--rule must be plain or adam");
  }
  if (opt.restarts < 1 || opt.max_iters < 0 || !(opt.learning_rate > 0.0)) {
    throw ArgumentError("need --restarts >= 1, --max-iters >= 0 and --lr > 0");
  }
  opt.jobs = resolved_jobs(o.jobs);
  return p;
}

SchemeKind single_scheme(const Options& o) {
  if (o.schemes.size() != 1) throw ArgumentError("exactly one --scheme is required");
  return parse_scheme_kind(o.schemes.front());
}

// Appends a row, writing the header first when the file is new or empty.
void append_row(const std::string& path, const ResultRow& row) {
  if (path.empty()) {
    std::cout << csv_header() << '\n' << to_csv_line(row) << '\n';
    return;
  }
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot open " + path + " for appending");
  if (fresh) out << csv_header() << '\n';
  out << to_csv_line(row) << '\n';
  if (!out) throw IoError("failed writing " + path);
}

int cmd_sweep(const Options& o) {
  SweepSpec spec;
  spec.experiment = parse_experiment(o.experiment);
  if (o.schemes.empty()) throw ArgumentError("--scheme is required");
  for (const auto& s : o.schemes) spec.schemes.push_back(parse_scheme_kind(s));
  spec.params = params_from(o);
  if (!o.grid.empty()) spec.grid = parse_grid(o.grid);
  spec.record_timing = o.record_timing;
  spec.jobs = resolved_jobs(o.jobs);
  spec.validate();

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + o.out + " for writing");
    out = &file;
  }
  *out << csv_header() << '\n';
  run_sweep(
      spec,
      [&](const ResultRow& row) {
        *out << to_csv_line(row) << '\n';
        out->flush();
      },
      &std::cerr);
  if (!*out) throw IoError("failed writing " + o.out);
  return kOk;
}

int cmd_optimize(const Options& o) {
  const SchemeKind kind = single_scheme(o);
  if (!is_controlled(kind)) {
    throw ArgumentError("optimize needs a controlled scheme (CUE, CNLA or CNA), got " +
                        std::string(to_string(kind)));
  }
  if (o.pulse.empty()) throw ArgumentError("--pulse is required");
  ExperimentParams params = params_from(o);
  const SchemeConfig scheme = resolve_scheme(params, kind);

  const auto start = std::chrono::steady_clock::now();
  const auto result = grape::optimize(scheme);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "optimized " << to_string(kind) << " in " << seconds << " s, best restart "
            << result.best_restart << ", " << result.iterations_run << " iterations\n";

  write_pulse(fs::path(o.pulse), PulseFile{result.best_pulse, kind, result.seed});
  ResultRow row = make_row(scheme, result.best_qfi, result.iterations_run, result.seed);
  if (o.record_timing) row.wall_time_s = seconds;
  append_row(o.out, row);
  return kOk;
}

int cmd_evaluate(const Options& o) {
  if (o.pulse.empty()) throw ArgumentError("--pulse is required");
  const PulseFile file = read_pulse(fs::path(o.pulse));
  const SchemeKind kind = o.schemes.empty() ? file.scheme : single_scheme(o);
  ExperimentParams params = params_from(o);
  if (!o.dt) params.dt = file.pulse.dt;
  const SchemeConfig scheme = resolve_scheme(params, kind);
  if (file.pulse.segments() != scheme.segments() || file.pulse.controls() != control_count(kind)) {
    throw FormatError("pulse file is " + std::to_string(file.pulse.segments()) + "x" +
                      std::to_string(file.pulse.controls()) + ", scheme " +
                      std::string(to_string(kind)) + " expects " +
                      std::to_string(scheme.segments()) + "x" + std::to_string(control_count(kind)));
  }
  const double fq = evaluate(scheme, file.pulse).fq;
  append_row(o.out, make_row(scheme, fq, 0, file.seed));
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  if (o.dt) v.dt = *o.dt;
  if (o.T) v.T = *o.T;
  v.seed = o.seed;
  if (o.fault == "dissipator-sign") {
    v.fault = Fault::DissipatorSign;
  } else if (o.fault != "none") {
    throw ArgumentError("unknown fault '" + o.fault + "'");
  }
  const VerifyReport report = run_verify(v, std::cout);
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Fisher information control: sweeps, optimization, evaluation, verification",
               "lgrape"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; command-line flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Options o;
  app.add_option("--experiment", o.experiment, "time, gamma, omega, theta or single (sweep)");
  app.add_option("--scheme,--schemes", o.schemes, "UE, NLA, NA, CUE, CNLA, CNA (comma list for sweep)")
      ->delimiter(',');
  app.add_option("--noise", o.noise, "none, spontaneous-emission|se, pauli-dephasing|gpd, pauli-xy|xy, spin-boson|sb");
  app.add_option("--t,--T", o.T, "Evolution time (default 20)");
  app.add_option("--dt", o.dt, "Segment length (default 0.01)");
  app.add_option("--gamma1", o.gamma1);
  app.add_option("--gamma2", o.gamma2);
  app.add_option("--eta1", o.eta1);
  app.add_option("--eta2", o.eta2);
  app.add_option("--omega0", o.omega0, "Encoded frequency (default 3)");
  app.add_option("--theta", o.theta, "Spin-boson coupling angle in [0, pi/2]");
  app.add_option("--omega-c,--omega_c", o.omega_c, "Spin-boson cutoff (default 1)");
  app.add_option("--p", o.p, "Pauli-XY asymmetry in [0, 1]");
  app.add_option("--axis-theta,--axis_theta", o.axis_theta, "Pauli-dephasing polar angle");
  app.add_option("--axis-phi,--axis_phi", o.axis_phi, "Pauli-dephasing azimuth");
  app.add_option("--grid", o.grid, "start:step:stop or comma list; pi allowed, e.g. 0:pi/16:pi/2");
  app.add_option("--seed", o.seed, "Optimizer seed (default 42)");
  app.add_option("--jobs", o.jobs, "Worker threads (default: logical cores)")
      ->envname("LGRAPE_JOBS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out,--output", o.out, "CSV output path (stdout when omitted)");
  app.add_option("--pulse", o.pulse, "Pulse file");
  app.add_option("--max-iters,--max_iters", o.max_iters, "Ascent iterations per restart (default 2000)");
  app.add_option("--restarts", o.restarts, "Restarts (default 5)");
  app.add_option("--lr", o.lr, "Learning rate (default 0.001)");
  app.add_option("--rule", o.rule, "plain or adam");
  app.add_option("--u-max,--u_max", o.u_max, "Clamp amplitudes to [-u_max, u_max]");
  app.add_flag("--record-timing,--record_timing", o.record_timing,
               "Fill wall_time_s (makes CSV output run-dependent)");
  app.add_option("--inject-fault", o.fault)->group("");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  auto* optimize = app.add_subcommand("optimize", "Optimize one controlled scheme; write pulse and CSV row");
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a pulse file without optimizing");
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    app.exit(e);
    return kIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sweep->parsed()) return cmd_sweep(o);
    if (optimize->parsed()) return cmd_optimize(o);
    if (evaluate_cmd->parsed()) return cmd_evaluate(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const ArgumentError& e) {
    std::cerr << "lgrape: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "lgrape: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "lgrape: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "lgrape: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
