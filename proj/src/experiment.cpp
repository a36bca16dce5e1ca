#include "lgrape/experiment.hpp"

#include <cmath>
#include <numbers>

namespace lgrape {

namespace {

bool has_noisy_ancilla(SchemeKind kind) { return noisy_particle_count(kind) == 2; }

std::vector<double> pick(SchemeKind kind, const std::optional<double>& r1,
                         const std::optional<double>& r2, double d1, double d2) {
  std::vector<double> rates{r1.value_or(d1)};
  if (has_noisy_ancilla(kind)) rates.push_back(r2.value_or(d2));
  return rates;
}

}  // namespace

NoiseModel resolve_noise(const ExperimentParams& params, SchemeKind kind) {
  NoiseModel model;
  model.kind = params.noise;
  switch (params.noise) {
    case NoiseKind::None:
      break;
    case NoiseKind::SpontaneousEmission:
      model.rates = pick(kind, params.gamma1, params.gamma2, 0.1, 0.05);
      break;
    case NoiseKind::GeneralizedPauliDephasing:
      model.axis_theta = params.axis_theta.value_or(std::numbers::pi / 4);
      model.axis_phi = params.axis_phi.value_or(0.0);
      model.rates = has_noisy_ancilla(kind)
                        ? pick(kind, params.gamma1, params.gamma2, 0.1, 0.05)
                        : pick(kind, params.gamma1, params.gamma2, 0.05, 0.0);
      break;
    case NoiseKind::PauliXY:
      model.asymmetry = params.p.value_or(0.5);
      model.rates = pick(kind, params.gamma1, params.gamma2, 0.1, 0.05);
      break;
    case NoiseKind::SpinBosonPC: {
      model.coupling_theta = params.theta.value_or(0.0);
      model.cutoff = params.omega_c;
      const bool dephasing = std::abs(model.coupling_theta - std::numbers::pi / 2) < 1e-12;
      model.rates = dephasing ? pick(kind, params.eta1, params.eta2, 0.03, 0.015)
                              : pick(kind, params.eta1, params.eta2, 0.05, 0.025);
      break;
    }
  }
  return model;
}

SchemeConfig resolve_scheme(const ExperimentParams& params, SchemeKind kind) {
  return make_scheme(kind, resolve_noise(params, kind), params.omega0, params.T, params.dt,
                     params.optimizer);
}

ResultRow make_row(const SchemeConfig& scheme, double fq, int iterations, std::uint64_t seed) {
  ResultRow row;
  row.scheme = std::string(to_string(scheme.kind));
  row.noise = std::string(to_string(scheme.noise.kind));
  row.T = scheme.T;
  row.dt = scheme.dt;
  row.omega0 = scheme.omega0;
  const auto& rates = scheme.noise.rates;
  const auto rate = [&](std::size_t i) {
    return i < rates.size() ? std::optional<double>(rates[i]) : std::nullopt;
  };
  switch (scheme.noise.kind) {
    case NoiseKind::None:
      break;
    case NoiseKind::SpinBosonPC:
      row.eta1 = rate(0);
      row.eta2 = rate(1);
      row.theta = scheme.noise.coupling_theta;
      break;
    case NoiseKind::PauliXY:
      row.p = scheme.noise.asymmetry;
      [[fallthrough]];
    default:
      row.gamma1 = rate(0);
      row.gamma2 = rate(1);
      break;
  }
  set_fisher(row, fq);
  row.iterations = iterations;
  row.seed = seed;
  return row;
}

}  // namespace lgrape
