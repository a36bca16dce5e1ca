#include "lgrape/propagate.hpp"

#include <array>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "lgrape/controls.hpp"
#include "lgrape/errors.hpp"
#include "lgrape/pauli_basis.hpp"

namespace lgrape {

namespace {

constexpr double kStepNormTarget = 0.5;
constexpr double kSeriesTol = 1e-17;
constexpr int kMaxTerms = 30;

// Smallest N such that nu^(N+1) / (N+1)! <= kSeriesTol.
int taylor_terms(double nu) {
  double term = 1.0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    term *= nu / n;
    if (term <= kSeriesTol) return std::max(n - 1, 1);
  }
  return kMaxTerms;
}

// c[p][q] = p! q! / (p + q + 1)!, the weights of the Taylor form of the
// Frechet derivative of exp.
struct FrechetWeights {
  std::array<std::array<double, kMaxTerms + 1>, kMaxTerms + 1> c{};
  FrechetWeights() {
    for (int p = 0; p <= kMaxTerms; ++p) {
      for (int q = 0; p + q <= kMaxTerms; ++q) {
        double binom = 1.0;  // C(p+q, p)
        for (int i = 1; i <= p; ++i) binom = binom * (q + i) / i;
        c[p][q] = 1.0 / ((p + q + 1) * binom);
      }
    }
  }
};

const FrechetWeights& frechet_weights() {
  static const FrechetWeights w;
  return w;
}

struct SparseEntry {
  int row;
  int col;
  double value;
};

struct StepPlan {
  int substeps;
  double h;
  int terms;
};

template <int N>
class Kernel {
 public:
  using Mat = Eigen::Matrix<double, N, N>;
  using Vec = Eigen::Matrix<double, N, 1>;

  struct Aug {
    Vec r;
    Vec s;
  };

  Kernel(const std::vector<Eigen::MatrixXd>& static_gens, const Eigen::MatrixXd& deriv,
         std::vector<std::vector<SparseEntry>> controls, const Eigen::VectorXd& r0, double dt)
      : deriv_(deriv), controls_(std::move(controls)), r0_(r0), dt_(dt) {
    static_.reserve(static_gens.size());
    for (const auto& g : static_gens) static_.push_back(g);
    deriv_norm_ = deriv_.cwiseAbs().colwise().sum().maxCoeff();
  }

  Mat generator(const ControlPulse& pulse, int k) const {
    Mat r = static_[static_.size() == 1 ? 0 : static_cast<std::size_t>(k)];
    for (std::size_t c = 0; c < controls_.size(); ++c) {
      const double u = pulse.amplitudes(k, static_cast<Eigen::Index>(c));
      if (u == 0.0) continue;
      for (const auto& e : controls_[c]) r(e.row, e.col) += u * e.value;
    }
    return r;
  }

  StepPlan plan(const Mat& r) const {
    const double norm = r.cwiseAbs().colwise().sum().maxCoeff() + deriv_norm_;
    const int substeps = std::max(1, static_cast<int>(std::ceil(dt_ * norm / kStepNormTarget)));
    const double h = dt_ / substeps;
    return {substeps, h, taylor_terms(h * norm)};
  }

  // x <- exp(h A) x with A = [[R, 0], [D, R]].
  void step(const Mat& r, double h, int terms, Aug& x) const {
    Vec tr = x.r;
    Vec ts = x.s;
    for (int j = 1; j <= terms; ++j) {
      const double f = h / j;
      const Vec nr = f * (r * tr);
      ts = f * (deriv_ * tr + r * ts);
      tr = nr;
      x.r += tr;
      x.s += ts;
    }
  }

  // One sub-step of the adjoint sweep. On entry `lam` is dF/dx after the
  // step and `z` the state before it; on exit `lam` is dF/dz. Accumulates
  // sum_pq c_pq (w_p t_q^T) over both diagonal blocks into `m`.
  void adjoint_step(const Mat& r, double h, int terms, const Aug& z, Aug& lam, Mat& m) const {
    const auto& c = frechet_weights().c;
    std::array<Aug, kMaxTerms + 1> t;
    std::array<Aug, kMaxTerms + 1> w;
    t[0] = z;
    w[0] = lam;
    const Mat rt = r.transpose();
    const Mat dtp = deriv_.transpose();
    for (int j = 1; j <= terms; ++j) {
      const double f = h / j;
      t[j].r.noalias() = f * (r * t[j - 1].r);
      t[j].s.noalias() = f * (deriv_ * t[j - 1].r + r * t[j - 1].s);
      w[j].r.noalias() = f * (rt * w[j - 1].r + dtp * w[j - 1].s);
      w[j].s.noalias() = f * (rt * w[j - 1].s);
    }
    for (int p = 0; p < terms; ++p) {
      Vec vr = Vec::Zero();
      Vec vs = Vec::Zero();
      for (int q = 0; q + p < terms; ++q) {
        vr += c[p][q] * t[q].r;
        vs += c[p][q] * t[q].s;
      }
      m.noalias() += w[p].r * vr.transpose();
      m.noalias() += w[p].s * vs.transpose();
    }
    lam.r = w[0].r;
    lam.s = w[0].s;
    for (int p = 1; p <= terms; ++p) {
      lam.r += w[p].r;
      lam.s += w[p].s;
    }
  }

  Aug initial() const { return {r0_, Vec::Zero()}; }

  void advance(const ControlPulse& pulse, int k, Aug& x) const {
    const Mat r = generator(pulse, k);
    const StepPlan pl = plan(r);
    for (int i = 0; i < pl.substeps; ++i) step(r, pl.h, pl.terms, x);
  }

  // Returns the adjoint before segment k given the adjoint after it, and
  // writes dF/du_{k,c} into row k of `gradient`.
  void backward_segment(const ControlPulse& pulse, int k, const Aug& x_before, Aug& lam,
                        Eigen::MatrixXd& gradient) const {
    const Mat r = generator(pulse, k);
    const StepPlan pl = plan(r);
    std::vector<Aug> sub(static_cast<std::size_t>(pl.substeps));
    sub[0] = x_before;
    for (int i = 1; i < pl.substeps; ++i) {
      sub[static_cast<std::size_t>(i)] = sub[static_cast<std::size_t>(i - 1)];
      step(r, pl.h, pl.terms, sub[static_cast<std::size_t>(i)]);
    }
    Mat m = Mat::Zero();
    for (int i = pl.substeps - 1; i >= 0; --i) {
      adjoint_step(r, pl.h, pl.terms, sub[static_cast<std::size_t>(i)], lam, m);
    }
    for (std::size_t c = 0; c < controls_.size(); ++c) {
      double g = 0.0;
      for (const auto& e : controls_[c]) g += m(e.row, e.col) * e.value;
      gradient(k, static_cast<Eigen::Index>(c)) = pl.h * g;
    }
  }

 private:
  std::vector<Mat, Eigen::aligned_allocator<Mat>> static_;
  Mat deriv_;
  double deriv_norm_ = 0.0;
  std::vector<std::vector<SparseEntry>> controls_;
  Vec r0_;
  double dt_;
};

Eigen::VectorXd to_dynamic(const auto& v) { return Eigen::VectorXd(v); }

}  // namespace

double segment_midpoint(int k, double dt) { return (k + 0.5) * dt; }

struct Propagator::Impl {
  SchemeConfig scheme;
  PauliBasis basis;
  int segments;
  Operator h0;
  std::vector<Operator> generators;
  Operator omega_deriv;
  std::variant<Kernel<4>, Kernel<16>> kernel;

  static std::variant<Kernel<4>, Kernel<16>> build_kernel(const SchemeConfig& scheme,
                                                          const PauliBasis& basis, int segments,
                                                          const Operator& h0,
                                                          const std::vector<Operator>& generators,
                                                          const Operator& omega_deriv) {
    std::vector<Eigen::MatrixXd> statics;
    const int count = scheme.noise.time_dependent() ? segments : 1;
    statics.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
      const auto diss = dissipators(scheme.noise, segment_midpoint(k, scheme.dt), scheme.n_particles);
      statics.push_back(basis.to_real(liouvillian(h0, diss).matrix));
    }
    std::vector<std::vector<SparseEntry>> controls;
    for (const auto& g : generators) {
      const Eigen::MatrixXd k = basis.to_real(commutator_superop(g));
      std::vector<SparseEntry> entries;
      for (int i = 0; i < k.rows(); ++i) {
        for (int j = 0; j < k.cols(); ++j) {
          if (std::abs(k(i, j)) > 1e-14) entries.push_back({i, j, k(i, j)});
        }
      }
      controls.push_back(std::move(entries));
    }
    const Eigen::MatrixXd deriv = basis.to_real(omega_deriv);
    const Eigen::VectorXd r0 = basis.coefficients(scheme.initial_state);
    if (basis.size() == 4) {
      return Kernel<4>(statics, deriv, std::move(controls), r0, scheme.dt);
    }
    return Kernel<16>(statics, deriv, std::move(controls), r0, scheme.dt);
  }

  explicit Impl(const SchemeConfig& s)
      : scheme(s),
        basis(s.n_particles),
        segments(s.segments()),
        h0(encoding_hamiltonian(s.omega0, s.n_particles)),
        generators(control_generators(s.kind)),
        omega_deriv(commutator_superop(encoding_generator(s.n_particles))),
        kernel(build_kernel(s, basis, segments, h0, generators, omega_deriv)) {}

  template <typename Aug>
  StatePair to_state(const Aug& x) const {
    return {basis.from_coefficients(to_dynamic(x.r)), basis.from_coefficients(to_dynamic(x.s))};
  }
};

Propagator::Propagator(const SchemeConfig& scheme) : impl_(std::make_unique<Impl>(scheme)) {}
Propagator::~Propagator() = default;
Propagator::Propagator(Propagator&&) noexcept = default;
Propagator& Propagator::operator=(Propagator&&) noexcept = default;

int Propagator::segments() const { return impl_->segments; }
int Propagator::controls() const { return static_cast<int>(impl_->generators.size()); }
int Propagator::dim() const { return impl_->basis.dim(); }
double Propagator::dt() const { return impl_->scheme.dt; }
const Operator& Propagator::omega_derivative() const { return impl_->omega_deriv; }

void Propagator::check_pulse(const ControlPulse& pulse) const {
  if (pulse.segments() != segments() || pulse.controls() != controls()) {
    throw ArgumentError("pulse is " + std::to_string(pulse.segments()) + "x" +
                        std::to_string(pulse.controls()) + ", scheme expects " +
                        std::to_string(segments()) + "x" + std::to_string(controls()));
  }
  if (std::abs(pulse.dt - dt()) > 1e-12) {
    throw ArgumentError("pulse dt does not match the scheme dt");
  }
  if (!pulse.amplitudes.allFinite()) {
    throw ArgumentError("pulse amplitudes must be finite");
  }
}

StatePair Propagator::propagate(const ControlPulse& pulse, const SegmentObserver& observer) const {
  check_pulse(pulse);
  return std::visit(
      [&](const auto& kern) {
        auto x = kern.initial();
        if (observer) observer(0, impl_->to_state(x));
        for (int k = 0; k < segments(); ++k) {
          kern.advance(pulse, k, x);
          if (observer) observer(k + 1, impl_->to_state(x));
        }
        return impl_->to_state(x);
      },
      impl_->kernel);
}

double Propagator::value_and_gradient(const ControlPulse& pulse, const TerminalFunctional& terminal,
                                      Eigen::MatrixXd& gradient) const {
  check_pulse(pulse);
  gradient.setZero(segments(), controls());
  return std::visit(
      [&](const auto& kern) {
        using Aug = std::decay_t<decltype(kern.initial())>;
        std::vector<Aug> states(static_cast<std::size_t>(segments()) + 1);
        states[0] = kern.initial();
        for (int k = 0; k < segments(); ++k) {
          states[static_cast<std::size_t>(k) + 1] = states[static_cast<std::size_t>(k)];
          kern.advance(pulse, k, states[static_cast<std::size_t>(k) + 1]);
        }
        const TerminalSensitivity sens = terminal(impl_->to_state(states.back()));
        const double inv_d = 1.0 / impl_->basis.dim();
        Aug lam;
        lam.r = impl_->basis.coefficients(sens.d_rho) * inv_d;
        lam.s = impl_->basis.coefficients(sens.d_drho) * inv_d;
        for (int k = segments() - 1; k >= 0; --k) {
          kern.backward_segment(pulse, k, states[static_cast<std::size_t>(k)], lam, gradient);
        }
        return sens.value;
      },
      impl_->kernel);
}

Liouvillian Propagator::segment_liouvillian(const ControlPulse& pulse, int k) const {
  check_pulse(pulse);
  if (k < 0 || k >= segments()) {
    throw ArgumentError("segment index out of range");
  }
  Operator h = impl_->h0;
  for (int c = 0; c < controls(); ++c) {
    h += pulse.amplitudes(k, c) * impl_->generators[static_cast<std::size_t>(c)];
  }
  const auto diss =
      dissipators(impl_->scheme.noise, segment_midpoint(k, dt()), impl_->scheme.n_particles);
  return liouvillian(h, diss);
}

StatePair propagate(const SchemeConfig& scheme, const ControlPulse& pulse) {
  return Propagator(scheme).propagate(pulse);
}

}  // namespace lgrape
