#pragma once

#include <cstdint>
#include <vector>

#include "lgrape/propagate.hpp"
#include "lgrape/pulse.hpp"
#include "lgrape/scheme.hpp"

namespace lgrape::grape {

struct OptimizationResult {
  ControlPulse best_pulse;
  double best_qfi = 0.0;
  std::vector<double> qfi_trace;  // F_Q evaluated at each iteration of the best restart
  int iterations_run = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  int best_restart = 0;
};

/// Exact dF_Q/du_{k,c} of the piecewise-exponential model.
Eigen::MatrixXd gradient(const SchemeConfig& scheme, const ControlPulse& pulse);

/// F_Q and its gradient in one forward/adjoint sweep.
double qfi_and_gradient(const Propagator& prop, const ControlPulse& pulse, Eigen::MatrixXd& grad);

/// Starting pulse of a restart: zeros for restart 0, otherwise i.i.d.
/// uniform in [-init_amplitude, init_amplitude] drawn from (seed, restart).
ControlPulse initial_pulse(const SchemeConfig& scheme, int restart);

/// Gradient ascent u <- u + lr * grad F_Q from every restart; returns the best.
/// Uncontrolled schemes return the zero-pulse evaluation without iterating.
OptimizationResult optimize(const SchemeConfig& scheme);

}  // namespace lgrape::grape
