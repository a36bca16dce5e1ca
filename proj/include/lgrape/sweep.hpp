#pragma once

#include <functional>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lgrape/csv.hpp"
#include "lgrape/experiment.hpp"
#include "lgrape/scheme.hpp"

namespace lgrape {

enum class Experiment { Time, Gamma, Omega, Theta, Single };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

/// Grid syntax: "start:step:stop" (inclusive, values start + i*step) or a
/// comma list. Each number may be a product/quotient with `pi`, e.g. "pi/16".
/// Values are rounded to 15 significant digits.
std::vector<double> parse_grid(std::string_view text);

/// time 1:1:20, gamma 0:0.05:0.5, omega 1:0.2:5, theta 0:pi/16:pi/2. Single
/// experiments have no grid.
std::vector<double> default_grid(Experiment e);

struct SweepSpec {
  Experiment experiment = Experiment::Single;
  std::vector<SchemeKind> schemes;
  ExperimentParams params;  // fixed parameters; seed lives in params.optimizer
  std::vector<double> grid;  // empty selects default_grid (single uses {params.T})
  bool record_timing = false;
  int jobs = 1;

  std::vector<double> effective_grid() const;

  /// Throws ArgumentError: empty scheme list, grid not strictly increasing,
  /// gamma sweep on time-dependent or absent noise, theta sweep off spin-boson.
  void validate() const;
};

/// Scheme configuration at one grid point. For omega sweeps this is the
/// evaluation configuration; pulses are optimized at params.omega0.
SchemeConfig grid_scheme(const SweepSpec& spec, SchemeKind kind, double value);

using RowSink = std::function<void(const ResultRow&)>;

/// One row per (scheme, grid point), scheme-major. The sink sees rows in that
/// order regardless of which worker finishes first. Progress goes to `log`.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const RowSink& sink = {},
                                 std::ostream* log = nullptr);

/// Header line plus one line per row.
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

}  // namespace lgrape
