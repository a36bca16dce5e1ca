#include "lgrape/liouvillian.hpp"

#include <cmath>
#include <string>

#include "lgrape/errors.hpp"

namespace lgrape {

namespace {

constexpr double kHermitianTol = 1e-10;

int dim_of_superop(const Operator& superop) {
  const auto d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(superop.rows()))));
  if (superop.rows() != superop.cols() || d * d != superop.rows()) {
    throw ArgumentError("superoperator must be square with a perfect-square dimension");
  }
  return d;
}

}  // namespace

Operator encoding_hamiltonian(double omega0, int n_particles) {
  return omega0 * encoding_generator(n_particles);
}

Operator encoding_generator(int n_particles) {
  return 0.5 * qcore::pauli(3, 1, n_particles);
}

Operator commutator_superop(const Operator& h) {
  const auto d = static_cast<int>(h.rows());
  const Operator id = qcore::identity(d);
  return -kI * (qcore::kron(id, h) - qcore::kron(h.transpose(), id));
}

Operator dissipator_superop(const Dissipator& diss) {
  const Operator& l = diss.op;
  const auto d = static_cast<int>(l.rows());
  const Operator id = qcore::identity(d);
  const Operator jump = qcore::kron(l.conjugate(), l);
  switch (diss.form) {
    case DissipatorForm::Standard: {
      const Operator ldl = l.adjoint() * l;
      return diss.rate * (jump - 0.5 * qcore::kron(id, ldl) - 0.5 * qcore::kron(ldl.transpose(), id));
    }
    case DissipatorForm::HalfDifference:
      // L rho L^dag - rho; equals the standard form when L^dag L = I.
      return diss.rate * (jump - qcore::identity(d * d));
  }
  throw ArgumentError("unknown dissipator form");
}

Liouvillian liouvillian(const Operator& h_total, std::span<const Dissipator> diss) {
  const double defect = qcore::hermiticity_defect(h_total);
  if (defect > kHermitianTol) {
    throw ContractViolation("liouvillian: Hamiltonian is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }
  Liouvillian out{commutator_superop(h_total), static_cast<int>(h_total.rows())};
  for (const auto& d : diss) {
    if (d.op.rows() != h_total.rows()) {
      throw ArgumentError("liouvillian: dissipator dimension does not match the Hamiltonian");
    }
    out.matrix += dissipator_superop(d);
  }
  return out;
}

double trace_defect(const Operator& superop) {
  const int d = dim_of_superop(superop);
  const CVector vid = qcore::vec(qcore::identity(d));
  return (vid.adjoint() * superop).norm();
}

Operator choi_matrix(const Operator& superop) {
  const int d = dim_of_superop(superop);
  Operator choi = Operator::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      // vec(|i><j|) is the unit vector at column-major index j*d + i.
      const CVector image = superop.col(j * d + i);
      choi.block(i * d, j * d, d, d) = qcore::unvec(image);
    }
  }
  return choi;
}

double choi_min_eigenvalue(const Operator& superop) {
  const Operator c = choi_matrix(superop);
  const Operator herm = 0.5 * (c + c.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace lgrape
