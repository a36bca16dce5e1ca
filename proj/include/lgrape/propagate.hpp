#pragma once

#include <functional>
#include <memory>

#include "lgrape/liouvillian.hpp"
#include "lgrape/pulse.hpp"
#include "lgrape/scheme.hpp"
#include "lgrape/state.hpp"

namespace lgrape {

/// Called after each segment with the 1-based boundary index (0 is the
/// initial state).
using SegmentObserver = std::function<void(int boundary, const StatePair&)>;

/// Value of a terminal functional F(rho, drho) and its sensitivities, in the
/// sense dF = Re Tr(d_rho * delta_rho) + Re Tr(d_drho * delta_drho). Both
/// sensitivities must be Hermitian.
struct TerminalSensitivity {
  double value = 0.0;
  Operator d_rho;
  Operator d_drho;
};

using TerminalFunctional = std::function<TerminalSensitivity(const StatePair&)>;

/// Time of the midpoint of segment k, where time-dependent rates are sampled.
double segment_midpoint(int k, double dt);

/// Piecewise-constant propagation of (rho, d rho / d omega0) for one scheme.
///
/// Segment k evolves the augmented vector (vec rho, vec drho) with
/// exp(dt * [[L_k, 0], [dL/domega, L_k]]), where L_k holds the encoding
/// Hamiltonian, the control amplitudes of row k, and the dissipators at the
/// segment midpoint. Internally the state is kept in real Pauli coordinates
/// and the exponential is applied as a truncated Taylor series, sub-stepped
/// so that each step has dt * ||A||_1 <= 0.5.
///
/// Immutable after construction; const members may be called concurrently.
class Propagator {
 public:
  explicit Propagator(const SchemeConfig& scheme);
  ~Propagator();
  Propagator(Propagator&&) noexcept;
  Propagator& operator=(Propagator&&) noexcept;

  int segments() const;
  int controls() const;
  int dim() const;
  double dt() const;

  /// Throws ArgumentError when the pulse shape or dt does not match.
  void check_pulse(const ControlPulse& pulse) const;

  StatePair propagate(const ControlPulse& pulse, const SegmentObserver& observer = {}) const;

  /// Returns F at the final state and fills `gradient` (segments x controls)
  /// with dF/du_{k,c} of the discrete model.
  double value_and_gradient(const ControlPulse& pulse, const TerminalFunctional& terminal,
                            Eigen::MatrixXd& gradient) const;

  /// Complex column-stacking Liouvillian of segment k.
  Liouvillian segment_liouvillian(const ControlPulse& pulse, int k) const;

  /// Derivative of every segment Liouvillian with respect to omega0.
  const Operator& omega_derivative() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper: Propagator(scheme).propagate(pulse).
StatePair propagate(const SchemeConfig& scheme, const ControlPulse& pulse);

}  // namespace lgrape
