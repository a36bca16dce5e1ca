#pragma once

#include <cstdint>
#include <optional>

#include "lgrape/csv.hpp"
#include "lgrape/noise.hpp"
#include "lgrape/scheme.hpp"

namespace lgrape {

/// User-facing scheme arguments. Unset noise parameters take the per-noise
/// experiment defaults when resolved against a scheme kind.
struct ExperimentParams {
  NoiseKind noise = NoiseKind::None;
  std::optional<double> gamma1;
  std::optional<double> gamma2;
  std::optional<double> eta1;
  std::optional<double> eta2;
  std::optional<double> theta;  // spin-boson coupling angle
  std::optional<double> p;
  std::optional<double> axis_theta;
  std::optional<double> axis_phi;
  double omega_c = 1.0;
  double omega0 = 3.0;
  double T = 20.0;
  double dt = 0.01;
  OptimizerSettings optimizer;
};

/// Noise model for `kind` with defaults:
///   spontaneous emission  gamma = (0.1, 0.05)
///   Pauli dephasing       axis (pi/4, 0); gamma1 = 0.05, or (0.1, 0.05) with a noisy ancilla
///   Pauli-XY              p = 0.5, gamma = (0.1, 0.05)
///   spin-boson            theta = 0, eta = (0.05, 0.025); eta = (0.03, 0.015) at theta = pi/2
/// Only as many rates as the scheme has noisy particles are kept.
NoiseModel resolve_noise(const ExperimentParams& params, SchemeKind kind);

SchemeConfig resolve_scheme(const ExperimentParams& params, SchemeKind kind);

/// Row describing `scheme`; fisher columns are filled from fq.
ResultRow make_row(const SchemeConfig& scheme, double fq, int iterations, std::uint64_t seed);

}  // namespace lgrape
