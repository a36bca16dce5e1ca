#include "lgrape/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "lgrape/controls.hpp"
#include "lgrape/experiment.hpp"
#include "lgrape/grape.hpp"
#include "lgrape/liouvillian.hpp"
#include "lgrape/propagate.hpp"
#include "lgrape/qfi.hpp"
#include "lgrape/sweep.hpp"

namespace lgrape {

namespace {

constexpr SchemeKind kAllSchemes[] = {SchemeKind::UE,  SchemeKind::NLA,  SchemeKind::NA,
                                      SchemeKind::CUE, SchemeKind::CNLA, SchemeKind::CNA};

constexpr NoiseKind kNoisyKinds[] = {NoiseKind::SpontaneousEmission,
                                     NoiseKind::GeneralizedPauliDephasing, NoiseKind::PauliXY,
                                     NoiseKind::SpinBosonPC};

std::string label(const SchemeConfig& s) {
  std::ostringstream os;
  os << to_string(s.kind) << '/' << to_string(s.noise.kind);
  if (s.noise.kind == NoiseKind::SpinBosonPC) os << "(theta=" << s.noise.coupling_theta << ')';
  return os.str();
}

ControlPulse probe_pulse(const SchemeConfig& scheme, std::uint64_t seed) {
  SchemeConfig seeded = scheme;
  seeded.optimizer.seed = seed;
  ControlPulse p = grape::initial_pulse(seeded, 1);
  p.amplitudes *= 10.0;
  return p;
}

Operator segment_generator(const Propagator& prop, const SchemeConfig& scheme,
                           const ControlPulse& pulse, int k, Fault fault) {
  Operator l = prop.segment_liouvillian(pulse, k).matrix;
  if (fault == Fault::DissipatorSign) {
    const double t = segment_midpoint(k, scheme.dt);
    for (const auto& d : dissipators(scheme.noise, t, scheme.n_particles)) {
      l -= 2.0 * d.rate * qcore::kron(d.op.conjugate(), d.op);
    }
  }
  return l;
}

bool homogeneous_zero(const SchemeConfig& scheme, const ControlPulse& pulse) {
  return !scheme.noise.time_dependent() && pulse.is_zero();
}

struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& w) {
    if (v > value || where.empty()) {
      value = std::max(v, value);
      where = w;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

CheckResult make(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

}  // namespace

int VerifyReport::count(CheckStatus s) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

std::vector<SchemeConfig> default_experiments(double T, double dt) {
  std::vector<SchemeConfig> out;
  ExperimentParams params;
  params.T = T;
  params.dt = dt;
  for (auto kind : kAllSchemes) {
    params.noise = NoiseKind::None;
    out.push_back(resolve_scheme(params, kind));
    for (auto noise : kNoisyKinds) {
      params.noise = noise;
      out.push_back(resolve_scheme(params, kind));
    }
    params.noise = NoiseKind::SpinBosonPC;
    params.theta = std::numbers::pi / 2;
    out.push_back(resolve_scheme(params, kind));
    params.theta.reset();

    SweepSpec theta;
    theta.experiment = Experiment::Theta;
    theta.params = params;
    for (double v : default_grid(Experiment::Theta)) {
      if (v == 0.0) continue;  // already covered by the dissipative default
      out.push_back(grid_scheme(theta, kind, v));
    }
  }
  return out;
}

double gradient_error_ratio(const SchemeConfig& scheme, const ControlPulse& pulse, double eps) {
  const Propagator prop(scheme);
  Eigen::MatrixXd grad;
  grape::qfi_and_gradient(prop, pulse, grad);
  const int m = pulse.segments();
  std::vector<int> segs{0, m / 2, m - 1};
  segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
  double worst = 0.0;
  for (int k : segs) {
    for (int c = 0; c < pulse.controls(); ++c) {
      ControlPulse plus = pulse;
      ControlPulse minus = pulse;
      plus.amplitudes(k, c) += eps;
      minus.amplitudes(k, c) -= eps;
      const double fd =
          (qfi::qfi(prop.propagate(plus)) - qfi::qfi(prop.propagate(minus))) / (2.0 * eps);
      const double err = std::abs(fd - grad(k, c));
      worst = std::max(worst, err / std::max(1e-4 * std::abs(fd), 1e-7));
    }
  }
  return worst;
}

VerifyReport run_verify(const VerifyOptions& options, std::ostream& out) {
  VerifyReport report;
  const auto emit = [&](CheckResult r) {
    const char* tag = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Warn ? "WARN" : "FAIL";
    out << tag << "  " << r.name << ": " << r.detail << '\n';
    out.flush();
    report.checks.push_back(std::move(r));
  };

  const auto experiments = default_experiments(options.T, options.dt);

  // Generator and segment-map checks over zero and random pulses.
  {
    Worst trace, cp, state;
    std::size_t maps = 0;
    for (const auto& scheme : experiments) {
      const Propagator prop(scheme);
      std::vector<ControlPulse> pulses{zero_pulse(scheme)};
      if (scheme.controlled) pulses.push_back(probe_pulse(scheme, options.seed));
      for (const auto& pulse : pulses) {
        const int m = homogeneous_zero(scheme, pulse) ? 1 : pulse.segments();
        for (int k = 0; k < m; ++k) {
          const Operator l = segment_generator(prop, scheme, pulse, k, options.fault);
          const std::string where = label(scheme) + " segment " + std::to_string(k);
          trace.update(trace_defect(l), where);
          const Operator map = qcore::expm(scheme.dt * l);
          trace.update(trace_defect(map - Operator::Identity(map.rows(), map.cols())), where);
          cp.update(-choi_min_eigenvalue(map), where);
          ++maps;
        }
        if (options.fault == Fault::None) {
          prop.propagate(pulse, [&](int b, const StatePair& sp) {
            const auto d = state_defects(sp);
            const double bad = std::max({d.trace, d.hermiticity, -d.min_eigenvalue, d.drho_trace,
                                         d.drho_hermiticity});
            state.update(bad, label(scheme) + " boundary " + std::to_string(b));
          });
        }
      }
    }
    const std::string count = std::to_string(experiments.size()) + " configurations, " +
                              std::to_string(maps) + " segment maps";
    emit(make("trace-preservation", trace.value <= 1e-10,
              count + ", worst defect " + fmt(trace.value) + " at " + trace.where));
    emit(make("complete-positivity", cp.value <= 1e-10,
              "min Choi eigenvalue " + fmt(-cp.value) + " at " + cp.where));
    if (options.fault == Fault::None) {
      emit(make("state-validity", state.value <= 1e-9,
                "worst state defect " + fmt(state.value) + " at " + state.where));
    }
  }

  // Analytic gradient against central differences.
  {
    const double T = options.dt * std::ceil(options.gradient_T / options.dt - 1e-9);
    Worst ratio;
    ExperimentParams params;
    params.T = T;
    params.dt = options.dt;
    for (auto noise : {NoiseKind::None, NoiseKind::SpontaneousEmission,
                       NoiseKind::GeneralizedPauliDephasing, NoiseKind::PauliXY,
                       NoiseKind::SpinBosonPC}) {
      params.noise = noise;
      for (auto kind : {SchemeKind::CUE, SchemeKind::CNLA}) {
        const auto scheme = resolve_scheme(params, kind);
        ratio.update(gradient_error_ratio(scheme, probe_pulse(scheme, options.seed)), label(scheme));
      }
    }
    CheckResult r = make("gradient-vs-fd", ratio.value <= 1.0,
                         "T=" + fmt(T) + ", worst |fd-an|/max(1e-4|fd|,1e-7) = " + fmt(ratio.value) +
                             " at " + ratio.where);
    if (r.status == CheckStatus::Pass && ratio.value > 0.1) {
      r.status = CheckStatus::Warn;
      r.detail += " (degraded accuracy: above 10% of tolerance)";
    }
    emit(std::move(r));
  }

  // Midpoint sampling of time-dependent rates, against a halved step.
  {
    ExperimentParams params;
    params.noise = NoiseKind::SpinBosonPC;
    params.T = options.T;
    double worst = 0.0;
    for (auto kind : {SchemeKind::UE, SchemeKind::NA}) {
      params.dt = options.dt;
      const double coarse = evaluate(resolve_scheme(params, kind)).fq;
      params.dt = options.dt / 2;
      const double fine = evaluate(resolve_scheme(params, kind)).fq;
      worst = std::max(worst, std::abs(coarse - fine) / fine);
    }
    CheckResult r{"rate-discretization", CheckStatus::Pass,
                  "spin-boson F_Q at dt vs dt/2, rel diff " + fmt(worst)};
    if (worst > 1e-5) {
      r.status = CheckStatus::Warn;
      r.detail += " (degraded accuracy: dt too coarse for the time-dependent rate)";
    }
    emit(std::move(r));
  }

  // Closed-form oracles.
  {
    ExperimentParams params;
    params.dt = options.dt;
    params.T = options.dt * std::ceil(5.0 / options.dt - 1e-9);
    const double T = params.T;
    double worst = 0.0;
    for (auto kind : {SchemeKind::UE, SchemeKind::NLA}) {
      params.noise = NoiseKind::None;
      const double f = evaluate(resolve_scheme(params, kind)).fq;
      worst = std::max(worst, std::abs(f - T * T) / (T * T));
    }
    emit(make("oracle-noiseless", worst <= 1e-6, "F_Q = T^2 at T=" + fmt(T) + ", rel err " + fmt(worst)));

    params.noise = NoiseKind::GeneralizedPauliDephasing;
    params.axis_theta = 0.0;
    params.gamma1 = 0.05;
    const double f = evaluate(resolve_scheme(params, SchemeKind::UE)).fq;
    const double expect = T * T * std::exp(-2.0 * 0.05 * T);
    const double rel = std::abs(f - expect) / expect;
    emit(make("oracle-dephasing", rel <= 1e-5, "F_Q = T^2 exp(-2 gamma T), rel err " + fmt(rel)));

    ExperimentParams se;
    se.dt = options.dt;
    se.T = T;
    se.noise = NoiseKind::SpontaneousEmission;
    se.gamma1 = 0.1;
    SchemeConfig decay = resolve_scheme(se, SchemeKind::UE);
    decay.initial_state = Operator::Zero(2, 2);
    decay.initial_state(1, 1) = 1.0;
    const double p1 = propagate(decay, zero_pulse(decay)).rho(1, 1).real();
    const double err = std::abs(p1 - std::exp(-0.1 * T));
    emit(make("oracle-emission", err <= 1e-6, "rho_11 = exp(-gamma T), abs err " + fmt(err)));
  }

  // Classical Fisher information never exceeds the quantum one.
  {
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    double worst = -1e300;
    std::string where;
    for (const auto& scheme : experiments) {
      if (scheme.kind != SchemeKind::UE && scheme.kind != SchemeKind::NA) continue;
      const StatePair sp = propagate(scheme, zero_pulse(scheme));
      const double fq = qfi::qfi(sp);
      const auto d = sp.rho.rows();
      for (int trial = 0; trial < 5; ++trial) {
        // Random rank-one POVM: columns of a random isometry d -> 2d.
        Operator g(2 * d, d);
        for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = Complex(normal(rng), normal(rng));
        const Operator q = Eigen::HouseholderQR<Operator>(g).householderQ() *
                           Operator::Identity(2 * d, d);
        qfi::Povm povm;
        for (Eigen::Index x = 0; x < 2 * d; ++x) {
          const CVector v = q.row(x).adjoint();
          povm.elements.push_back(v * v.adjoint());
        }
        const double gap = qfi::cfi(sp, povm) - fq;
        if (gap > worst) {
          worst = gap;
          where = label(scheme);
        }
      }
    }
    emit(make("cfi-bound", worst <= 1e-8, "max F_C - F_Q = " + fmt(worst) + " at " + where));
  }

  out << report.count(CheckStatus::Pass) << " passed, " << report.count(CheckStatus::Warn)
      << " warnings, " << report.count(CheckStatus::Fail) << " failed\n";
  return report;
}

}  // namespace lgrape
