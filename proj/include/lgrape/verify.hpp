#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lgrape/scheme.hpp"

namespace lgrape {

/// Deliberate defects for mutation-testing the suite itself.
enum class Fault {
  None,
  DissipatorSign,  // flips the sign of every jump term L rho L^dag
};

struct VerifyOptions {
  double dt = 0.01;
  double T = 20.0;         // duration of the default experiments
  double gradient_T = 1.0;  // duration of the gradient checks (rounded up to a multiple of dt)
  std::uint64_t seed = 42;
  Fault fault = Fault::None;
};

enum class CheckStatus { Pass, Warn, Fail };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::Fail) == 0; }
};

/// Every scheme under every noise model with its experiment defaults, plus the
/// spin-boson dephasing limit and the theta grid.
std::vector<SchemeConfig> default_experiments(double T, double dt);

/// Central finite-difference check of the analytic gradient. Returns the worst
/// ratio |fd - an| / max(1e-4 |fd|, 1e-7) over the probed components; <= 1
/// passes. Probes all controls of the first, middle and last segments.
double gradient_error_ratio(const SchemeConfig& scheme, const ControlPulse& pulse,
                            double eps = 1e-6);

/// Runs trace-preservation, complete-positivity, state-validity, gradient,
/// analytic-oracle and Fisher-bound checks, printing one line per check.
VerifyReport run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace lgrape
