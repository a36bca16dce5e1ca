#include "lgrape/noise.hpp"

#include <cmath>

#include "lgrape/errors.hpp"

namespace lgrape {

std::string_view to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::None:
      return "none";
    case NoiseKind::SpontaneousEmission:
      return "spontaneous-emission";
    case NoiseKind::GeneralizedPauliDephasing:
      return "pauli-dephasing";
    case NoiseKind::PauliXY:
      return "pauli-xy";
    case NoiseKind::SpinBosonPC:
      return "spin-boson";
  }
  return "unknown";
}

NoiseKind parse_noise_kind(std::string_view name) {
  if (name == "none") return NoiseKind::None;
  if (name == "spontaneous-emission" || name == "se") return NoiseKind::SpontaneousEmission;
  if (name == "pauli-dephasing" || name == "gpd") return NoiseKind::GeneralizedPauliDephasing;
  if (name == "pauli-xy" || name == "xy") return NoiseKind::PauliXY;
  if (name == "spin-boson" || name == "sb") return NoiseKind::SpinBosonPC;
  throw ArgumentError("unknown noise kind '" + std::string(name) + "'");
}

void NoiseModel::validate() const {
  for (double r : rates) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw ArgumentError("noise rates must be finite and non-negative");
    }
  }
  if (kind == NoiseKind::None && !rates.empty()) {
    throw ArgumentError("noise kind 'none' takes no rates");
  }
  if (kind != NoiseKind::None && rates.empty()) {
    throw ArgumentError("noise kind '" + std::string(to_string(kind)) + "' needs at least one rate");
  }
  if (rates.size() > 2) {
    throw ArgumentError("at most two noisy particles are supported");
  }
  if (!(asymmetry >= 0.0 && asymmetry <= 1.0)) {
    throw ArgumentError("Pauli-XY asymmetry p must lie in [0, 1]");
  }
  if (!(coupling_theta >= 0.0 && coupling_theta <= std::numbers::pi / 2 + 1e-12)) {
    throw ArgumentError("spin-boson coupling angle must lie in [0, pi/2]");
  }
  if (!(cutoff >= 0.0) || !std::isfinite(cutoff)) {
    throw ArgumentError("spin-boson cutoff frequency must be finite and non-negative");
  }
}

Eigen::Vector3d dephasing_axis(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double spin_boson_rate(double eta, double cutoff, double t) { return eta * std::atan(cutoff * t); }

std::vector<Dissipator> dissipators(const NoiseModel& model, double t, int n_particles) {
  if (t < 0.0) {
    throw ArgumentError("dissipators: time must be non-negative");
  }
  if (model.noisy_particles() > n_particles) {
    throw ArgumentError("dissipators: more noise rates than particles");
  }
  std::vector<Dissipator> out;
  const int k = model.noisy_particles();
  for (int i = 0; i < k; ++i) {
    const int particle = i + 1;
    const double gamma = model.rates[static_cast<std::size_t>(i)];
    switch (model.kind) {
      case NoiseKind::None:
        break;
      case NoiseKind::SpontaneousEmission:
        out.push_back({gamma, qcore::embed(qcore::lowering(), particle, n_particles),
                       DissipatorForm::Standard});
        break;
      case NoiseKind::GeneralizedPauliDephasing: {
        const Eigen::Vector3d n = dephasing_axis(model.axis_theta, model.axis_phi);
        Operator l = n.x() * qcore::pauli(1, particle, n_particles) +
                     n.y() * qcore::pauli(2, particle, n_particles) +
                     n.z() * qcore::pauli(3, particle, n_particles);
        out.push_back({gamma / 2, std::move(l), DissipatorForm::HalfDifference});
        break;
      }
      case NoiseKind::PauliXY: {
        const double p[2] = {model.asymmetry, 1.0 - model.asymmetry};
        for (int j = 0; j < 2; ++j) {
          out.push_back({gamma * p[j] / 2, qcore::pauli(j + 1, particle, n_particles),
                         DissipatorForm::HalfDifference});
        }
        break;
      }
      case NoiseKind::SpinBosonPC: {
        const double rate = spin_boson_rate(gamma, model.cutoff, t);
        const double c2 = std::pow(std::cos(model.coupling_theta), 2);
        const double s2 = std::pow(std::sin(model.coupling_theta), 2);
        out.push_back({rate * c2, qcore::embed(qcore::lowering(), particle, n_particles),
                       DissipatorForm::Standard});
        out.push_back({rate * c2, qcore::embed(qcore::raising(), particle, n_particles),
                       DissipatorForm::Standard});
        out.push_back({rate * s2 / 2, qcore::pauli(3, particle, n_particles),
                       DissipatorForm::Standard});
        break;
      }
    }
  }
  return out;
}

}  // namespace lgrape
