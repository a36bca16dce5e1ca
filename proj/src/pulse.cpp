#include "lgrape/pulse.hpp"

#include "lgrape/errors.hpp"

namespace lgrape {

ControlPulse ControlPulse::zeros(int segments, int controls, double dt) {
  if (segments < 1 || controls < 1 || !(dt > 0.0)) {
    throw ArgumentError("ControlPulse::zeros: segments, controls and dt must be positive");
  }
  return ControlPulse{dt, Eigen::MatrixXd::Zero(segments, controls)};
}

}  // namespace lgrape
