#pragma once

#include <complex>

#include <Eigen/Dense>

namespace lgrape {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

namespace qcore {

/// Eigen-decomposition of a Hermitian operator, eigenvalues ascending.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Operator eigenvectors;  // column k pairs with eigenvalues[k]

  Operator reconstruct() const;
};

Operator identity(int dim);

/// Pauli matrix sigma_index (0 = identity, 1..3 = x, y, z) acting on the
/// 1-based `particle` of an `n`-qubit register (n <= 2). Particle 1 is the
/// leftmost Kronecker factor.
Operator pauli(int index, int particle, int n);

/// Lowering operator |0><1| and raising operator |1><0|.
Operator lowering();
Operator raising();

Operator kron(const Operator& a, const Operator& b);

/// Embed a single-qubit operator at `particle` of an n-qubit register.
Operator embed(const Operator& op, int particle, int n);

double hermiticity_defect(const Operator& h);

/// Throws ContractViolation when ||h - h^dag||_F > 1e-10.
Spectrum herm_eig(const Operator& h);

/// Matrix exponential by scaling and squaring with diagonal Pade approximants.
Operator expm(const Operator& m);

/// Column-stacking vectorization.
CVector vec(const Operator& a);
Operator unvec(const CVector& v);

}  // namespace qcore
}  // namespace lgrape
