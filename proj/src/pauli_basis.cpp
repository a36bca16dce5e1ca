#include "lgrape/pauli_basis.hpp"

#include "lgrape/errors.hpp"

namespace lgrape {

PauliBasis::PauliBasis(int n_qubits) : qubits_(n_qubits), dim_(1 << n_qubits) {
  if (n_qubits < 1 || n_qubits > 2) {
    throw ArgumentError("PauliBasis: 1 or 2 qubits supported");
  }
  const int count = dim_ * dim_;
  strings_.reserve(static_cast<std::size_t>(count));
  for (int alpha = 0; alpha < count; ++alpha) {
    Operator p = Operator::Identity(1, 1);
    int rest = alpha;
    for (int slot = 1; slot <= n_qubits; ++slot) {
      const int shift = 2 * (n_qubits - slot);
      const int index = (rest >> shift) & 3;
      p = qcore::kron(p, qcore::pauli(index, 1, 1));
    }
    strings_.push_back(std::move(p));
  }
  transfer_.resize(count, count);
  for (int alpha = 0; alpha < count; ++alpha) {
    transfer_.col(alpha) = qcore::vec(strings_[static_cast<std::size_t>(alpha)]);
  }
}

Eigen::MatrixXd PauliBasis::to_real(const Operator& superop) const {
  if (superop.rows() != size() || superop.cols() != size()) {
    throw ArgumentError("PauliBasis::to_real: superoperator dimension mismatch");
  }
  const Operator r = (transfer_.adjoint() * superop * transfer_) / static_cast<double>(dim_);
  if (r.imag().cwiseAbs().maxCoeff() > 1e-10) {
    throw ContractViolation("PauliBasis::to_real: superoperator is not Hermiticity preserving");
  }
  return r.real();
}

Eigen::VectorXd PauliBasis::coefficients(const Operator& hermitian) const {
  Eigen::VectorXd r(size());
  for (int alpha = 0; alpha < size(); ++alpha) {
    r(alpha) = (string(alpha) * hermitian).trace().real();
  }
  return r;
}

Operator PauliBasis::from_coefficients(const Eigen::VectorXd& r) const {
  Operator out = Operator::Zero(dim_, dim_);
  for (int alpha = 0; alpha < size(); ++alpha) {
    out += r(alpha) * string(alpha);
  }
  return out / static_cast<double>(dim_);
}

}  // namespace lgrape
