#pragma once

#include <Eigen/Dense>

namespace lgrape {

/// Piecewise-constant control amplitudes: row k holds the K amplitudes
/// applied during segment k, each segment `dt` long.
struct ControlPulse {
  double dt = 0.01;
  Eigen::MatrixXd amplitudes;

  int segments() const { return static_cast<int>(amplitudes.rows()); }
  int controls() const { return static_cast<int>(amplitudes.cols()); }
  double duration() const { return dt * segments(); }
  bool is_zero() const { return amplitudes.size() == 0 || amplitudes.cwiseAbs().maxCoeff() == 0.0; }

  static ControlPulse zeros(int segments, int controls, double dt);
};

}  // namespace lgrape
