#pragma once

#include "lgrape/qcore.hpp"

namespace lgrape {

/// Density matrix together with its derivative with respect to omega0.
struct StatePair {
  Operator rho;
  Operator drho;
};

/// Deviations of a StatePair from its physical invariants.
struct StateDefects {
  double trace = 0.0;         // |Tr rho - 1|
  double hermiticity = 0.0;   // ||rho - rho^dag||_F
  double min_eigenvalue = 0.0;
  double drho_trace = 0.0;    // |Tr drho|
  double drho_hermiticity = 0.0;

  /// Tolerances: trace and Hermiticity 1e-10, min eigenvalue >= -1e-9.
  bool ok() const;
};

StateDefects state_defects(const StatePair& sp);

}  // namespace lgrape
