#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "lgrape/controls.hpp"
#include "lgrape/experiment.hpp"
#include "lgrape/grape.hpp"
#include "lgrape/qfi.hpp"
#include "lgrape/verify.hpp"
#include "support/oracles.hpp"

using namespace lgrape;
using Catch::Approx;

namespace {

ControlPulse random_pulse(const SchemeConfig& s, std::mt19937_64& rng, double amp) {
  std::uniform_real_distribution<double> u(-amp, amp);
  ControlPulse p = ControlPulse::zeros(s.segments(), control_count(s.kind), s.dt);
  for (Eigen::Index i = 0; i < p.amplitudes.size(); ++i) p.amplitudes.data()[i] = u(rng);
  return p;
}

double fd_component(const SchemeConfig& s, const ControlPulse& pulse, int k, int c, double eps) {
  ControlPulse up = pulse, down = pulse;
  up.amplitudes(k, c) += eps;
  down.amplitudes(k, c) -= eps;
  return (qfi::qfi(propagate(s, up)) - qfi::qfi(propagate(s, down))) / (2 * eps);
}

SchemeConfig scheme_for(NoiseKind noise, SchemeKind kind, double T, OptimizerSettings opt = {}) {
  ExperimentParams p;
  p.noise = noise;
  p.T = T;
  p.optimizer = opt;
  return resolve_scheme(p, kind);
}

}  // namespace

TEST_CASE("control generators", "[grape]") {
  const auto single = control_generators(SchemeKind::CUE);
  REQUIRE(single.size() == 3);
  CHECK((single[0] - oracle::sx()).norm() == 0.0);
  CHECK((single[1] - oracle::sy()).norm() == 0.0);
  CHECK((single[2] - oracle::sz()).norm() == 0.0);
  CHECK(control_count(SchemeKind::UE) == 3);

  const auto pair = control_generators(SchemeKind::CNLA);
  REQUIRE(pair.size() == 15);
  CHECK((pair[0] - oracle::kron(oracle::id2(), oracle::sx())).norm() == 0.0);
  CHECK((pair[1] - oracle::kron(oracle::id2(), oracle::sy())).norm() == 0.0);
  CHECK((pair[2] - oracle::kron(oracle::id2(), oracle::sz())).norm() == 0.0);
  CHECK((pair[3] - oracle::kron(oracle::sx(), oracle::id2())).norm() == 0.0);
  CHECK((pair[14] - oracle::kron(oracle::sz(), oracle::sz())).norm() == 0.0);
  for (const auto& g : pair) {
    CHECK((g - g.adjoint()).norm() == 0.0);
    CHECK(std::abs(g.trace()) == 0.0);
  }
  CHECK(control_count(SchemeKind::NA) == 15);
}

TEST_CASE("noiseless gradient structure at the zero pulse", "[grape]") {
  const auto s = make_scheme(SchemeKind::UE, {}, 3.0, 1.0, 0.01);
  const ControlPulse zero = zero_pulse(s);
  const Eigen::MatrixXd g = grape::gradient(s, zero);
  REQUIRE(g.rows() == 100);
  REQUIRE(g.cols() == 3);
  // sigma_z commutes with the encoding.
  CHECK(g.col(2).cwiseAbs().maxCoeff() < 1e-8);
  for (int k : {0, 50, 99}) CHECK(std::abs(fd_component(s, zero, k, 2, 1e-6)) < 1e-7);
  // F_Q is stationary at the unitary optimum.
  CHECK(std::abs(g(99, 0)) < 1e-8);
  CHECK(std::abs(g(99, 1)) < 1e-8);
}

TEST_CASE("gradient is blind to the global phase of the initial state", "[grape]") {
  std::mt19937_64 rng(67);
  auto s = make_scheme(SchemeKind::CUE, {}, 2.0, 0.5, 0.01);
  const ControlPulse pulse = random_pulse(s, rng, 1.0);
  const Eigen::MatrixXd base = grape::gradient(s, pulse);
  CVector psi(2);
  psi << std::exp(Complex(0, 0.9)) / std::sqrt(2.0), std::exp(Complex(0, 0.9)) / std::sqrt(2.0);
  s.initial_state = psi * psi.adjoint();
  CHECK((grape::gradient(s, pulse) - base).norm() < 1e-12 * base.norm());
}

TEST_CASE("analytic gradient matches central differences", "[grape][property]") {
  std::mt19937_64 rng(71);
  for (auto noise : {NoiseKind::None, NoiseKind::SpontaneousEmission, NoiseKind::GeneralizedPauliDephasing,
                     NoiseKind::PauliXY, NoiseKind::SpinBosonPC}) {
    for (auto kind : {SchemeKind::UE, SchemeKind::CUE, SchemeKind::CNLA, SchemeKind::CNA}) {
      const auto s = scheme_for(noise, kind, 1.0);
      for (int trial = 0; trial < 3; ++trial) {
        const ControlPulse pulse = random_pulse(s, rng, 1.0);
        INFO(to_string(kind) << " / " << to_string(noise) << " trial " << trial);
        CHECK(gradient_error_ratio(s, pulse, 1e-6) <= 1.0);
      }
    }
  }
  // Full matrix for one single-qubit case at a looser step.
  const auto s = scheme_for(NoiseKind::SpontaneousEmission, SchemeKind::CUE, 0.3);
  const ControlPulse pulse = random_pulse(s, rng, 2.0);
  const Eigen::MatrixXd g = grape::gradient(s, pulse);
  for (int k = 0; k < pulse.segments(); ++k)
    for (int c = 0; c < 3; ++c) CHECK(g(k, c) == Approx(fd_component(s, pulse, k, c, 1e-4)).margin(1e-7).epsilon(1e-5));
}

TEST_CASE("initial pulses", "[grape]") {
  const auto s = scheme_for(NoiseKind::SpontaneousEmission, SchemeKind::CNLA, 1.0);
  CHECK(grape::initial_pulse(s, 0).is_zero());
  const ControlPulse a = grape::initial_pulse(s, 1);
  const ControlPulse b = grape::initial_pulse(s, 2);
  CHECK(a.amplitudes.cwiseAbs().maxCoeff() <= 0.1);
  CHECK(a.amplitudes.cwiseAbs().maxCoeff() > 0.05);
  CHECK((a.amplitudes - grape::initial_pulse(s, 1).amplitudes).norm() == 0.0);
  CHECK((a.amplitudes - b.amplitudes).norm() > 0.0);
  auto reseeded = s;
  reseeded.optimizer.seed = 7;
  CHECK((grape::initial_pulse(reseeded, 1).amplitudes - a.amplitudes).norm() > 0.0);
}

TEST_CASE("optimizer result invariants", "[grape]") {
  OptimizerSettings opt;
  opt.max_iters = 40;
  opt.restarts = 3;
  const auto s = scheme_for(NoiseKind::SpontaneousEmission, SchemeKind::CUE, 3.0, opt);
  const auto r = grape::optimize(s);
  REQUIRE(!r.qfi_trace.empty());
  CHECK(r.best_qfi == *std::max_element(r.qfi_trace.begin(), r.qfi_trace.end()));
  CHECK(r.best_qfi >= r.qfi_trace.front());
  CHECK(r.best_qfi >= evaluate(s).fq);
  CHECK(r.iterations_run == static_cast<int>(r.qfi_trace.size()));
  CHECK(r.seed == 42);
  CHECK(evaluate(s, r.best_pulse).fq == Approx(r.best_qfi).epsilon(1e-12));
}

TEST_CASE("optimizer is deterministic and independent of the thread count", "[grape]") {
  OptimizerSettings opt;
  opt.max_iters = 30;
  opt.restarts = 4;
  auto s = scheme_for(NoiseKind::PauliXY, SchemeKind::CNLA, 1.0, opt);
  const auto a = grape::optimize(s);
  s.optimizer.jobs = 3;
  const auto b = grape::optimize(s);
  CHECK(a.best_qfi == b.best_qfi);
  CHECK(a.best_restart == b.best_restart);
  CHECK(a.qfi_trace == b.qfi_trace);
  CHECK((a.best_pulse.amplitudes - b.best_pulse.amplitudes).norm() == 0.0);
}

TEST_CASE("uncontrolled schemes are evaluated, not optimized", "[grape]") {
  const auto s = make_scheme(SchemeKind::UE, {}, 3.0, 5.0, 0.01);
  const auto r = grape::optimize(s);
  CHECK(r.iterations_run == 0);
  CHECK(r.best_pulse.is_zero());
  CHECK(r.best_qfi == Approx(25.0).epsilon(1e-9));
}

TEST_CASE("noiseless controlled optimum is kept", "[grape]") {
  OptimizerSettings opt;
  opt.max_iters = 200;
  const auto s = make_scheme(SchemeKind::CUE, {}, 3.0, 5.0, 0.01, opt);
  const auto r = grape::optimize(s);
  CHECK(r.best_qfi >= 25.0 - 1e-3);
}

TEST_CASE("clamp and adaptive-moment rule", "[grape]") {
  OptimizerSettings opt;
  opt.max_iters = 60;
  opt.restarts = 2;
  opt.u_max = 0.05;
  opt.rule = AscentRule::Adam;
  opt.learning_rate = 0.01;
  const auto s = scheme_for(NoiseKind::SpontaneousEmission, SchemeKind::CUE, 2.0, opt);
  const auto r = grape::optimize(s);
  CHECK(r.best_pulse.amplitudes.cwiseAbs().maxCoeff() <= 0.05);
  CHECK(r.best_qfi > evaluate(s).fq);
}

TEST_CASE("controlled single qubit beats the uncontrolled one under emission at T=20", "[grape][slow]") {
  const auto s = scheme_for(NoiseKind::SpontaneousEmission, SchemeKind::CUE, 20.0);
  const double zero = evaluate(s).fq;
  const auto r = grape::optimize(s);
  CHECK(r.best_qfi > zero);
}

TEST_CASE("control does not help a single qubit under Pauli-XY noise at T=20", "[grape][slow]") {
  const auto s = scheme_for(NoiseKind::PauliXY, SchemeKind::CUE, 20.0);
  const double zero = evaluate(s).fq;
  const auto r = grape::optimize(s);
  CHECK(r.best_qfi / 20.0 == Approx(zero / 20.0).epsilon(0.10));
  CHECK(r.best_qfi >= zero);
}
