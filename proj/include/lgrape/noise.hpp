#pragma once

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "lgrape/qcore.hpp"

namespace lgrape {

enum class NoiseKind { None, SpontaneousEmission, GeneralizedPauliDephasing, PauliXY, SpinBosonPC };

std::string_view to_string(NoiseKind kind);

/// Accepts the canonical names printed by to_string plus short aliases
/// (se, gpd, xy, sb). Throws ArgumentError on anything else.
NoiseKind parse_noise_kind(std::string_view name);

/// Noise acting on the first `rates.size()` particles of the register.
///
/// For the time-homogeneous kinds `rates` holds gamma_i; for SpinBosonPC it
/// holds eta_i and the instantaneous rate is eta_i * atan(cutoff * t).
struct NoiseModel {
  NoiseKind kind = NoiseKind::None;
  std::vector<double> rates;
  double axis_theta = std::numbers::pi / 4;  // GeneralizedPauliDephasing
  double axis_phi = 0.0;
  double asymmetry = 0.5;       // PauliXY p
  double coupling_theta = 0.0;  // SpinBosonPC, in [0, pi/2]
  double cutoff = 1.0;          // SpinBosonPC omega_c

  int noisy_particles() const { return static_cast<int>(rates.size()); }
  bool time_dependent() const { return kind == NoiseKind::SpinBosonPC; }

  /// Throws ArgumentError when a rate is negative or an angle/asymmetry is
  /// out of range.
  void validate() const;
};

enum class DissipatorForm {
  Standard,        // L rho L^dag - 1/2 {L^dag L, rho}
  HalfDifference,  // L rho L - rho, for L = L^dag with L^2 = I
};

struct Dissipator {
  double rate;
  Operator op;
  DissipatorForm form;
};

/// Unit vector of the generalized Pauli dephasing axis:
/// (sin t cos p, sin t sin p, cos t).
Eigen::Vector3d dephasing_axis(double theta, double phi);

/// Spin-boson instantaneous rate eta * atan(cutoff * t).
double spin_boson_rate(double eta, double cutoff, double t);

/// Dissipator list of `model` at time t on an n-particle register.
std::vector<Dissipator> dissipators(const NoiseModel& model, double t, int n_particles);

}  // namespace lgrape
