#pragma once

#include <vector>

#include "lgrape/propagate.hpp"
#include "lgrape/qcore.hpp"
#include "lgrape/state.hpp"

namespace lgrape::qfi {

inline constexpr double kDefaultCutoff = 1e-10;

/// Symmetric logarithmic derivative, built on the eigenbasis of rho over the
/// pairs with lambda_i + lambda_j > cutoff. Throws ArgumentError for a
/// negative cutoff.
Operator sld(const StatePair& sp, double cutoff = kDefaultCutoff);

/// Quantum Fisher information from the eigen-sum
/// sum 2 |<i|drho|j>|^2 / (lambda_i + lambda_j).
double qfi(const StatePair& sp, double cutoff = kDefaultCutoff);

/// Tr[rho L^2] with L from sld(); agrees with qfi().
double qfi_from_sld(const StatePair& sp, double cutoff = kDefaultCutoff);

/// QFI together with dF = 2 Tr(L d drho) - Tr(L^2 d rho).
TerminalSensitivity qfi_sensitivity(const StatePair& sp, double cutoff = kDefaultCutoff);

struct Povm {
  std::vector<Operator> elements;

  /// Throws ArgumentError unless every element is PSD (min eigenvalue
  /// >= -1e-10) and the elements sum to the identity (1e-10).
  void validate() const;
};

/// Projective measurement onto the eigenbasis of a Hermitian observable.
Povm projective_povm(const Operator& observable);

/// Classical Fisher information of the outcome distribution p_x = Tr[rho M_x].
/// Outcomes with p_x <= 1e-12 are dropped when |dp_x| <= 1e-9 and raise
/// SingularStatistics otherwise.
double cfi(const StatePair& sp, const Povm& povm);

/// Quantum Cramer-Rao bound 1 / sqrt(repetitions * fisher). Throws
/// UndefinedBound when fisher <= 0.
double qcrb(double fisher, int repetitions = 1);

}  // namespace lgrape::qfi
