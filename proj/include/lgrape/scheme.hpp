#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "lgrape/noise.hpp"
#include "lgrape/pulse.hpp"
#include "lgrape/qcore.hpp"

namespace lgrape {

/// The six metrology schemes: unentangled, noiseless ancilla, noisy ancilla,
/// and their controlled counterparts.
enum class SchemeKind { UE, NLA, NA, CUE, CNLA, CNA };

std::string_view to_string(SchemeKind kind);
SchemeKind parse_scheme_kind(std::string_view name);

int particle_count(SchemeKind kind);
int noisy_particle_count(SchemeKind kind);
bool is_controlled(SchemeKind kind);

enum class AscentRule { Plain, Adam };

struct OptimizerSettings {
  double learning_rate = 0.001;
  int max_iters = 2000;
  double plateau_tol = 1e-7;  // relative: |dF| < plateau_tol * max(1, F)
  int plateau_window = 25;
  int restarts = 5;
  std::uint64_t seed = 42;
  double init_amplitude = 0.1;
  std::optional<double> u_max;
  AscentRule rule = AscentRule::Plain;
  int jobs = 1;  // restarts run concurrently on up to this many threads
};

struct SchemeConfig {
  SchemeKind kind = SchemeKind::UE;
  int n_particles = 1;
  Operator initial_state;
  bool controlled = false;
  NoiseModel noise;
  double omega0 = 3.0;
  double T = 1.0;
  double dt = 0.01;
  OptimizerSettings optimizer;

  int segments() const;
};

/// Number of segments m with m * dt == T (1e-9); throws ArgumentError otherwise.
int segment_count(double T, double dt);

/// Throws ArgumentError when the noise rate count does not match the scheme's
/// noisy-particle count, or T/dt do not give an integral segment count.
SchemeConfig make_scheme(SchemeKind kind, NoiseModel noise, double omega0, double T, double dt,
                         OptimizerSettings optimizer = {});

ControlPulse zero_pulse(const SchemeConfig& scheme);

struct Evaluation {
  double fq = 0.0;
  double fq_over_t = 0.0;
};

/// Propagate and score. Uncontrolled kinds accept only an all-zero pulse.
Evaluation evaluate(const SchemeConfig& scheme, const ControlPulse& pulse);
Evaluation evaluate(const SchemeConfig& scheme);

}  // namespace lgrape
