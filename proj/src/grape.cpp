#include "lgrape/grape.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "lgrape/controls.hpp"
#include "lgrape/parallel.hpp"
#include "lgrape/qfi.hpp"

namespace lgrape::grape {

namespace {

TerminalSensitivity qfi_terminal(const StatePair& sp) { return qfi::qfi_sensitivity(sp); }

void clamp(Eigen::MatrixXd& u, const std::optional<double>& u_max) {
  if (u_max) u = u.cwiseMax(-*u_max).cwiseMin(*u_max);
}

OptimizationResult run_restart(const Propagator& prop, const SchemeConfig& scheme, int restart) {
  const OptimizerSettings& opt = scheme.optimizer;
  OptimizationResult out;
  out.seed = opt.seed;
  out.best_restart = restart;
  out.best_qfi = -std::numeric_limits<double>::infinity();

  ControlPulse pulse = initial_pulse(scheme, restart);
  clamp(pulse.amplitudes, opt.u_max);
  Eigen::MatrixXd grad;

  // Adaptive-moment state (only used by AscentRule::Adam).
  constexpr double kBeta1 = 0.9;
  constexpr double kBeta2 = 0.999;
  constexpr double kEps = 1e-8;
  Eigen::MatrixXd first = Eigen::MatrixXd::Zero(pulse.segments(), pulse.controls());
  Eigen::MatrixXd second = first;

  double previous = std::numeric_limits<double>::quiet_NaN();
  int flat = 0;
  const int iterations = std::max(opt.max_iters, 1);
  for (int it = 0; it < iterations; ++it) {
    const double f = qfi_and_gradient(prop, pulse, grad);
    out.qfi_trace.push_back(f);
    if (f > out.best_qfi) {
      out.best_qfi = f;
      out.best_pulse = pulse;
    }
    if (it > 0) {
      flat = std::abs(f - previous) < opt.plateau_tol * std::max(1.0, f) ? flat + 1 : 0;
      if (flat >= opt.plateau_window) {
        out.converged = true;
        break;
      }
    }
    previous = f;
    if (opt.max_iters == 0) break;

    if (opt.rule == AscentRule::Plain) {
      pulse.amplitudes += opt.learning_rate * grad;
    } else {
      first = kBeta1 * first + (1 - kBeta1) * grad;
      second = kBeta2 * second + (1 - kBeta2) * grad.cwiseProduct(grad);
      const double c1 = 1 - std::pow(kBeta1, it + 1);
      const double c2 = 1 - std::pow(kBeta2, it + 1);
      pulse.amplitudes.array() +=
          opt.learning_rate * (first.array() / c1) / ((second.array() / c2).sqrt() + kEps);
    }
    clamp(pulse.amplitudes, opt.u_max);
  }
  out.iterations_run = static_cast<int>(out.qfi_trace.size());
  return out;
}

}  // namespace

double qfi_and_gradient(const Propagator& prop, const ControlPulse& pulse, Eigen::MatrixXd& grad) {
  return prop.value_and_gradient(pulse, qfi_terminal, grad);
}

Eigen::MatrixXd gradient(const SchemeConfig& scheme, const ControlPulse& pulse) {
  Eigen::MatrixXd grad;
  qfi_and_gradient(Propagator(scheme), pulse, grad);
  return grad;
}

ControlPulse initial_pulse(const SchemeConfig& scheme, int restart) {
  ControlPulse pulse = zero_pulse(scheme);
  if (restart == 0) return pulse;
  std::seed_seq seq{static_cast<std::uint64_t>(scheme.optimizer.seed),
                    static_cast<std::uint64_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> dist(-scheme.optimizer.init_amplitude,
                                              scheme.optimizer.init_amplitude);
  for (int k = 0; k < pulse.segments(); ++k) {
    for (int c = 0; c < pulse.controls(); ++c) pulse.amplitudes(k, c) = dist(rng);
  }
  return pulse;
}

OptimizationResult optimize(const SchemeConfig& scheme) {
  const Propagator prop(scheme);
  if (!scheme.controlled) {
    OptimizationResult out;
    out.best_pulse = zero_pulse(scheme);
    out.best_qfi = qfi::qfi(prop.propagate(out.best_pulse));
    out.qfi_trace = {out.best_qfi};
    out.iterations_run = 0;
    out.seed = scheme.optimizer.seed;
    out.converged = true;
    return out;
  }
  const int restarts = scheme.optimizer.restarts;
  std::vector<OptimizationResult> results(static_cast<std::size_t>(restarts));
  parallel_for(restarts, scheme.optimizer.jobs, [&](int r) {
    results[static_cast<std::size_t>(r)] = run_restart(prop, scheme, r);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].best_qfi > results[best].best_qfi) best = r;
  }
  return std::move(results[best]);
}

}  // namespace lgrape::grape
