#pragma once

#include <span>

#include "lgrape/noise.hpp"
#include "lgrape/qcore.hpp"

namespace lgrape {

/// Generator of d rho/dt = L[rho], acting on column-stacked vec(rho).
struct Liouvillian {
  Operator matrix;  // d^2 x d^2
  int dim = 0;      // d
};

/// omega0 * sigma_z / 2 on the sensing particle (slot 1).
Operator encoding_hamiltonian(double omega0, int n_particles);

/// d H / d omega0: sigma_z / 2 on slot 1.
Operator encoding_generator(int n_particles);

/// -i (I (x) H - H^T (x) I). No Hermiticity check; also used for derivative
/// generators.
Operator commutator_superop(const Operator& h);

/// Superoperator of rate * D[op] in the requested form.
Operator dissipator_superop(const Dissipator& d);

/// Throws ContractViolation if h_total is not Hermitian (1e-10).
Liouvillian liouvillian(const Operator& h_total, std::span<const Dissipator> diss);

/// || vec(I)^dag L ||_2; zero for a trace-preserving generator.
double trace_defect(const Operator& superop);

/// Choi matrix sum_ij |i><j| (x) Phi(|i><j|) of a column-stacking superoperator.
Operator choi_matrix(const Operator& superop);

/// Smallest eigenvalue of the (Hermitian part of the) Choi matrix.
double choi_min_eigenvalue(const Operator& superop);

}  // namespace lgrape
