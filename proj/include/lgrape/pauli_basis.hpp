#pragma once

#include <vector>

#include "lgrape/qcore.hpp"

namespace lgrape {

/// Real coordinates for Hermitian operators on n qubits:
/// rho = (1/d) sum_a r_a P_a with r_a = Tr(P_a rho), where P_a runs over the
/// Pauli strings sigma_i (x) sigma_j in lexicographic order. Hermiticity
/// preserving superoperators become real d^2 x d^2 matrices.
class PauliBasis {
 public:
  explicit PauliBasis(int n_qubits);

  int qubits() const { return qubits_; }
  int dim() const { return dim_; }
  int size() const { return dim_ * dim_; }
  const Operator& string(int alpha) const { return strings_[static_cast<std::size_t>(alpha)]; }

  /// Real matrix of a Hermiticity-preserving column-stacking superoperator.
  /// Throws ContractViolation if the superoperator does not map Hermitian
  /// operators to Hermitian operators (imaginary residue > 1e-10).
  Eigen::MatrixXd to_real(const Operator& superop) const;

  Eigen::VectorXd coefficients(const Operator& hermitian) const;
  Operator from_coefficients(const Eigen::VectorXd& r) const;

 private:
  int qubits_;
  int dim_;
  std::vector<Operator> strings_;
  Operator transfer_;  // column a = vec(P_a)
};

}  // namespace lgrape
