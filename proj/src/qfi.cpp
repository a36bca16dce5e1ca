#include "lgrape/qfi.hpp"

#include <cmath>
#include <string>

#include "lgrape/errors.hpp"

namespace lgrape::qfi {

namespace {

void check_cutoff(double cutoff) {
  if (!(cutoff >= 0.0)) {
    throw ArgumentError("SLD cutoff must be non-negative");
  }
}

// SLD expressed in the eigenbasis of rho: L_ij = 2 D_ij / (lambda_i + lambda_j).
struct EigenSld {
  qcore::Spectrum spectrum;
  Operator l_eig;
};

EigenSld eigen_sld(const StatePair& sp, double cutoff) {
  check_cutoff(cutoff);
  EigenSld out{qcore::herm_eig(sp.rho), {}};
  const auto& v = out.spectrum.eigenvectors;
  const auto& lam = out.spectrum.eigenvalues;
  const Operator d = v.adjoint() * sp.drho * v;
  const auto n = d.rows();
  out.l_eig = Operator::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double denom = lam(i) + lam(j);
      if (denom > cutoff) out.l_eig(i, j) = 2.0 * d(i, j) / denom;
    }
  }
  return out;
}

}  // namespace

Operator sld(const StatePair& sp, double cutoff) {
  const EigenSld e = eigen_sld(sp, cutoff);
  const auto& v = e.spectrum.eigenvectors;
  return v * e.l_eig * v.adjoint();
}

double qfi(const StatePair& sp, double cutoff) {
  check_cutoff(cutoff);
  const qcore::Spectrum spec = qcore::herm_eig(sp.rho);
  const Operator d = spec.eigenvectors.adjoint() * sp.drho * spec.eigenvectors;
  const auto& lam = spec.eigenvalues;
  double f = 0.0;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      const double denom = lam(i) + lam(j);
      if (denom > cutoff) f += 2.0 * std::norm(d(i, j)) / denom;
    }
  }
  return f;
}

double qfi_from_sld(const StatePair& sp, double cutoff) {
  const Operator l = sld(sp, cutoff);
  return (sp.rho * l * l).trace().real();
}

TerminalSensitivity qfi_sensitivity(const StatePair& sp, double cutoff) {
  const EigenSld e = eigen_sld(sp, cutoff);
  const auto& v = e.spectrum.eigenvectors;
  const Operator l = v * e.l_eig * v.adjoint();
  const Operator l2 = l * l;
  TerminalSensitivity out;
  out.value = qfi(sp, cutoff);
  out.d_rho = -0.5 * (l2 + l2.adjoint());
  out.d_drho = l + l.adjoint();
  return out;
}

void Povm::validate() const {
  if (elements.empty()) {
    throw ArgumentError("POVM has no elements");
  }
  const auto d = elements.front().rows();
  Operator total = Operator::Zero(d, d);
  for (const auto& m : elements) {
    if (m.rows() != d || m.cols() != d) {
      throw ArgumentError("POVM elements have mismatched dimensions");
    }
    if (qcore::herm_eig(m).eigenvalues.minCoeff() < -1e-10) {
      throw ArgumentError("POVM element is not positive semidefinite");
    }
    total += m;
  }
  if ((total - qcore::identity(static_cast<int>(d))).norm() > 1e-10) {
    throw ArgumentError("POVM elements do not sum to the identity");
  }
}

Povm projective_povm(const Operator& observable) {
  const qcore::Spectrum spec = qcore::herm_eig(observable);
  Povm out;
  for (Eigen::Index k = 0; k < spec.eigenvectors.cols(); ++k) {
    const CVector v = spec.eigenvectors.col(k);
    out.elements.push_back(v * v.adjoint());
  }
  return out;
}

double cfi(const StatePair& sp, const Povm& povm) {
  povm.validate();
  double f = 0.0;
  for (const auto& m : povm.elements) {
    const double p = (sp.rho * m).trace().real();
    const double dp = (sp.drho * m).trace().real();
    if (p <= 1e-12) {
      if (std::abs(dp) <= 1e-9) continue;
      throw SingularStatistics("outcome with probability " + std::to_string(p) +
                               " has derivative " + std::to_string(dp));
    }
    f += dp * dp / p;
  }
  return f;
}

double qcrb(double fisher, int repetitions) {
  if (repetitions < 1) {
    throw ArgumentError("repetitions must be at least 1");
  }
  if (!(fisher > 0.0)) {
    throw UndefinedBound("Cramer-Rao bound is undefined for non-positive Fisher information");
  }
  return 1.0 / std::sqrt(repetitions * fisher);
}

}  // namespace lgrape::qfi
