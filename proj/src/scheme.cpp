#include "lgrape/scheme.hpp"

#include <cmath>
#include <string>

#include "lgrape/controls.hpp"
#include "lgrape/errors.hpp"
#include "lgrape/propagate.hpp"
#include "lgrape/qfi.hpp"

namespace lgrape {

namespace {

Operator plus_state() {
  CVector psi(2);
  psi << 1.0, 1.0;
  psi /= std::sqrt(2.0);
  return psi * psi.adjoint();
}

Operator bell_state() {
  CVector psi = CVector::Zero(4);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(3) = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

}  // namespace

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::UE:
      return "UE";
    case SchemeKind::NLA:
      return "NLA";
    case SchemeKind::NA:
      return "NA";
    case SchemeKind::CUE:
      return "CUE";
    case SchemeKind::CNLA:
      return "CNLA";
    case SchemeKind::CNA:
      return "CNA";
  }
  return "?";
}

SchemeKind parse_scheme_kind(std::string_view name) {
  for (auto kind : {SchemeKind::UE, SchemeKind::NLA, SchemeKind::NA, SchemeKind::CUE,
                    SchemeKind::CNLA, SchemeKind::CNA}) {
    if (name == to_string(kind)) return kind;
  }
  throw ArgumentError("unknown scheme '" + std::string(name) + "' (expected UE, NLA, NA, CUE, CNLA or CNA)");
}

int particle_count(SchemeKind kind) {
  return (kind == SchemeKind::UE || kind == SchemeKind::CUE) ? 1 : 2;
}

int noisy_particle_count(SchemeKind kind) {
  return (kind == SchemeKind::NA || kind == SchemeKind::CNA) ? 2 : 1;
}

bool is_controlled(SchemeKind kind) {
  return kind == SchemeKind::CUE || kind == SchemeKind::CNLA || kind == SchemeKind::CNA;
}

int segment_count(double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0)) {
    throw ArgumentError("T and dt must be positive");
  }
  const auto m = std::llround(T / dt);
  if (m < 1 || std::abs(static_cast<double>(m) * dt - T) > 1e-9) {
    throw ArgumentError("T = " + std::to_string(T) + " is not an integer multiple of dt = " +
                        std::to_string(dt));
  }
  return static_cast<int>(m);
}

int SchemeConfig::segments() const { return segment_count(T, dt); }

SchemeConfig make_scheme(SchemeKind kind, NoiseModel noise, double omega0, double T, double dt,
                         OptimizerSettings optimizer) {
  noise.validate();
  if (noise.kind != NoiseKind::None && noise.noisy_particles() != noisy_particle_count(kind)) {
    throw ArgumentError("scheme " + std::string(to_string(kind)) + " expects " +
                        std::to_string(noisy_particle_count(kind)) + " noise rate(s), got " +
                        std::to_string(noise.noisy_particles()));
  }
  if (!std::isfinite(omega0)) {
    throw ArgumentError("omega0 must be finite");
  }
  segment_count(T, dt);
  if (optimizer.max_iters < 0 || optimizer.restarts < 1 || optimizer.plateau_window < 1 ||
      !(optimizer.learning_rate > 0.0) || optimizer.jobs < 1) {
    throw ArgumentError("invalid optimizer settings");
  }

  SchemeConfig s;
  s.kind = kind;
  s.n_particles = particle_count(kind);
  s.initial_state = s.n_particles == 1 ? plus_state() : bell_state();
  s.controlled = is_controlled(kind);
  s.noise = std::move(noise);
  s.omega0 = omega0;
  s.T = T;
  s.dt = dt;
  s.optimizer = optimizer;
  return s;
}

ControlPulse zero_pulse(const SchemeConfig& scheme) {
  return ControlPulse::zeros(scheme.segments(), control_count(scheme.kind), scheme.dt);
}

Evaluation evaluate(const SchemeConfig& scheme, const ControlPulse& pulse) {
  if (!scheme.controlled && !pulse.is_zero()) {
    throw ArgumentError("scheme " + std::string(to_string(scheme.kind)) +
                        " is uncontrolled and only accepts the zero pulse");
  }
  const StatePair sp = propagate(scheme, pulse);
  const double fq = qfi::qfi(sp);
  return {fq, fq / scheme.T};
}

Evaluation evaluate(const SchemeConfig& scheme) { return evaluate(scheme, zero_pulse(scheme)); }

bool StateDefects::ok() const {
  return trace <= 1e-10 && hermiticity <= 1e-10 && min_eigenvalue >= -1e-9 && drho_trace <= 1e-10 &&
         drho_hermiticity <= 1e-10;
}

StateDefects state_defects(const StatePair& sp) {
  StateDefects d;
  d.trace = std::abs(sp.rho.trace() - 1.0);
  d.hermiticity = qcore::hermiticity_defect(sp.rho);
  const Operator sym = 0.5 * (sp.rho + sp.rho.adjoint());
  d.min_eigenvalue = qcore::herm_eig(sym).eigenvalues.minCoeff();
  d.drho_trace = std::abs(sp.drho.trace());
  d.drho_hermiticity = qcore::hermiticity_defect(sp.drho);
  return d;
}

}  // namespace lgrape
