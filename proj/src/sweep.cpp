#include "lgrape/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>

#include "lgrape/errors.hpp"
#include "lgrape/grape.hpp"
#include "lgrape/parallel.hpp"

namespace lgrape {

namespace {

double round15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::stod(buf);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_factor(const std::string& token) {
  if (token == "pi") return std::numbers::pi;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) throw ArgumentError("bad grid number '" + token + "'");
  return v;
}

// number := factor (('*' | '/') factor)*
double parse_number(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ArgumentError("empty number in grid");
  double value = 0.0;
  char op = '*';
  std::size_t start = 0;
  bool first = true;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != '*' && s[i] != '/') continue;
    const double f = parse_factor(trim(std::string_view(s).substr(start, i - start)));
    if (first) {
      value = f;
      first = false;
    } else {
      value = op == '*' ? value * f : value / f;
    }
    if (i < s.size()) op = s[i];
    start = i + 1;
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

struct Task {
  SchemeKind kind;
  std::vector<double> values;  // grid points handled by this task
  std::size_t first_row;
};

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::Time: return "time";
    case Experiment::Gamma: return "gamma";
    case Experiment::Omega: return "omega";
    case Experiment::Theta: return "theta";
    case Experiment::Single: return "single";
  }
  return "?";
}

Experiment parse_experiment(std::string_view name) {
  for (auto e : {Experiment::Time, Experiment::Gamma, Experiment::Omega, Experiment::Theta,
                 Experiment::Single}) {
    if (name == to_string(e)) return e;
  }
  throw ArgumentError("unknown experiment '" + std::string(name) +
                      "' (expected time, gamma, omega, theta or single)");
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ArgumentError("grid must be start:step:stop");
    const double start = parse_number(parts[0]);
    const double step = parse_number(parts[1]);
    const double stop = parse_number(parts[2]);
    if (!(step > 0.0)) throw ArgumentError("grid step must be positive");
    if (stop < start) throw ArgumentError("grid stop is below start");
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(round15(start + static_cast<double>(i) * step));
  } else {
    for (auto part : split(text, ',')) out.push_back(round15(parse_number(part)));
  }
  return out;
}

std::vector<double> default_grid(Experiment e) {
  switch (e) {
    case Experiment::Time: return parse_grid("1:1:20");
    case Experiment::Gamma: return parse_grid("0:0.05:0.5");
    case Experiment::Omega: return parse_grid("1:0.2:5");
    case Experiment::Theta: return parse_grid("0:pi/16:pi/2");
    case Experiment::Single: return {};
  }
  return {};
}

std::vector<double> SweepSpec::effective_grid() const {
  if (experiment == Experiment::Single) return {params.T};
  return grid.empty() ? default_grid(experiment) : grid;
}

void SweepSpec::validate() const {
  if (schemes.empty()) throw ArgumentError("sweep needs at least one scheme");
  if (experiment == Experiment::Single && !grid.empty()) {
    throw ArgumentError("single experiment takes no grid");
  }
  const auto g = effective_grid();
  if (g.empty()) throw ArgumentError("sweep grid is empty");
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!(g[i] > g[i - 1])) throw ArgumentError("sweep grid must be strictly increasing");
  }
  if (experiment == Experiment::Gamma &&
      (params.noise == NoiseKind::None || params.noise == NoiseKind::SpinBosonPC)) {
    throw ArgumentError("gamma sweep needs a time-homogeneous noise kind");
  }
  if (experiment == Experiment::Theta && params.noise != NoiseKind::SpinBosonPC) {
    throw ArgumentError("theta sweep needs spin-boson noise");
  }
  if (params.optimizer.restarts < 1 || params.optimizer.max_iters < 0) {
    throw ArgumentError("restarts must be >= 1 and max-iters >= 0");
  }
  // Builds every grid configuration once so bad T/dt pairs fail before any work.
  for (auto kind : schemes) {
    for (double v : g) grid_scheme(*this, kind, v);
  }
}

SchemeConfig grid_scheme(const SweepSpec& spec, SchemeKind kind, double value) {
  ExperimentParams p = spec.params;
  switch (spec.experiment) {
    case Experiment::Time:
      p.T = value;
      break;
    case Experiment::Gamma:
      p.gamma1 = value;
      if (!p.gamma2) p.gamma2 = 0.5;
      break;
    case Experiment::Omega:
      p.omega0 = value;
      break;
    case Experiment::Theta:
    case Experiment::Single:
      break;
  }
  SchemeConfig scheme = resolve_scheme(p, kind);
  // Rates stay at the base-angle defaults so the curve is continuous in theta.
  if (spec.experiment == Experiment::Theta) {
    scheme.noise.coupling_theta = value;
    scheme.noise.validate();
  }
  return scheme;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const RowSink& sink, std::ostream* log) {
  spec.validate();
  const auto grid = spec.effective_grid();

  std::vector<Task> tasks;
  for (auto kind : spec.schemes) {
    const std::size_t first = tasks.empty() ? 0 : tasks.back().first_row + tasks.back().values.size();
    if (spec.experiment == Experiment::Omega) {
      tasks.push_back({kind, grid, first});
    } else {
      for (std::size_t i = 0; i < grid.size(); ++i) tasks.push_back({kind, {grid[i]}, first + i});
    }
  }
  const std::size_t n_rows = spec.schemes.size() * grid.size();
  std::vector<ResultRow> rows(n_rows);
  std::vector<bool> done(n_rows, false);
  std::size_t next_emit = 0;
  std::mutex emit_mutex;

  const int jobs = std::max(1, spec.jobs);
  const int outer = std::min<int>(jobs, static_cast<int>(tasks.size()));
  const int inner = std::max(1, jobs / std::max(1, outer));

  parallel_for(static_cast<int>(tasks.size()), outer, [&](int t) {
    const Task& task = tasks[static_cast<std::size_t>(t)];
    const auto start = std::chrono::steady_clock::now();
    std::vector<ResultRow> produced;

    if (spec.experiment == Experiment::Omega) {
      SweepSpec base = spec;
      base.experiment = Experiment::Single;
      SchemeConfig train = grid_scheme(base, task.kind, 0.0);
      train.optimizer.jobs = inner;
      const auto result = grape::optimize(train);
      for (double w : task.values) {
        const SchemeConfig eval = grid_scheme(spec, task.kind, w);
        const double fq = evaluate(eval, result.best_pulse).fq;
        produced.push_back(make_row(eval, fq, result.iterations_run, result.seed));
      }
    } else {
      SchemeConfig scheme = grid_scheme(spec, task.kind, task.values.front());
      scheme.optimizer.jobs = inner;
      const auto result = grape::optimize(scheme);
      produced.push_back(make_row(scheme, result.best_qfi, result.iterations_run, result.seed));
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::lock_guard lock(emit_mutex);
    if (log) {
      *log << to_string(task.kind);
      for (double v : task.values) *log << ' ' << v;
      *log << " done in " << seconds << " s\n";
    }
    for (std::size_t i = 0; i < produced.size(); ++i) {
      if (spec.record_timing) produced[i].wall_time_s = seconds;
      rows[task.first_row + i] = std::move(produced[i]);
      done[task.first_row + i] = true;
    }
    while (next_emit < n_rows && done[next_emit]) {
      if (sink) sink(rows[next_emit]);
      ++next_emit;
    }
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << csv_header() << '\n';
  for (const auto& row : rows) out << to_csv_line(row) << '\n';
}

}  // namespace lgrape
