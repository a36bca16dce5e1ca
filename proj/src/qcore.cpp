#include "lgrape/qcore.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lgrape/errors.hpp"

namespace lgrape::qcore {

namespace {

constexpr double kHermitianTol = 1e-10;

Operator single_pauli(int index) {
  Operator p = Operator::Zero(2, 2);
  switch (index) {
    case 0:
      p(0, 0) = 1.0;
      p(1, 1) = 1.0;
      break;
    case 1:
      p(0, 1) = 1.0;
      p(1, 0) = 1.0;
      break;
    case 2:
      p(0, 1) = -kI;
      p(1, 0) = kI;
      break;
    case 3:
      p(0, 0) = 1.0;
      p(1, 1) = -1.0;
      break;
    default:
      throw ArgumentError("pauli: index must be in 0..3, got " + std::to_string(index));
  }
  return p;
}

// Pade coefficients b_0..b_m for degree m (Higham 2005, table 10.4).
constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                           30270240.0,    2162160.0,    110880.0,     3960.0,
                                           90.0,          1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// 1-norm thresholds below which the degree-m approximant is accurate to unit
// roundoff without scaling.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <std::size_t N>
Operator pade_low(const Operator& a, const std::array<double, N>& b) {
  const auto n = a.rows();
  const Operator id = Operator::Identity(n, n);
  const Operator a2 = a * a;
  Operator u_even = b[1] * id;
  Operator v = b[0] * id;
  Operator power = id;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    u_even += b[k + 1] * power;
    v += b[k] * power;
  }
  const Operator u = a * u_even;
  return (v - u).partialPivLu().solve(v + u);
}

Operator pade13(const Operator& a) {
  const auto& b = kPade13;
  const auto n = a.rows();
  const Operator id = Operator::Identity(n, n);
  const Operator a2 = a * a;
  const Operator a4 = a2 * a2;
  const Operator a6 = a4 * a2;
  const Operator u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  const Operator u = a * (u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const Operator v_inner = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  const Operator v = v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

Operator Spectrum::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

Operator identity(int dim) { return Operator::Identity(dim, dim); }

Operator pauli(int index, int particle, int n) {
  if (n < 1 || n > 2) {
    throw ArgumentError("pauli: particle count must be 1 or 2, got " + std::to_string(n));
  }
  if (particle < 1 || particle > n) {
    throw ArgumentError("pauli: particle " + std::to_string(particle) + " outside 1.." +
                        std::to_string(n));
  }
  return embed(single_pauli(index), particle, n);
}

Operator lowering() {
  Operator l = Operator::Zero(2, 2);
  l(0, 1) = 1.0;
  return l;
}

Operator raising() { return lowering().adjoint(); }

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator embed(const Operator& op, int particle, int n) {
  Operator out = Operator::Identity(1, 1);
  for (int slot = 1; slot <= n; ++slot) {
    out = kron(out, slot == particle ? op : identity(2));
  }
  return out;
}

double hermiticity_defect(const Operator& h) { return (h - h.adjoint()).norm(); }

Spectrum herm_eig(const Operator& h) {
  if (h.rows() != h.cols()) {
    throw ArgumentError("herm_eig: matrix is not square");
  }
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTol) {
    throw ContractViolation("herm_eig: input is not Hermitian (||h - h^dag||_F = " +
                            std::to_string(defect) + ")");
  }
  const Operator sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym);
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

Operator expm(const Operator& m) {
  if (m.rows() != m.cols()) {
    throw ArgumentError("expm: matrix is not square");
  }
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 <= kTheta3) return pade_low(m, kPade3);
  if (norm1 <= kTheta5) return pade_low(m, kPade5);
  if (norm1 <= kTheta7) return pade_low(m, kPade7);
  if (norm1 <= kTheta9) return pade_low(m, kPade9);

  const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / kTheta13))));
  Operator x = pade13(m * std::ldexp(1.0, -squarings));
  for (int k = 0; k < squarings; ++k) {
    x = x * x;
  }
  return x;
}

CVector vec(const Operator& a) {
  return Eigen::Map<const CVector>(a.data(), a.size());
}

Operator unvec(const CVector& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size()) {
    throw ArgumentError("unvec: length " + std::to_string(v.size()) + " is not a perfect square");
  }
  return Eigen::Map<const Operator>(v.data(), n, n);
}

}  // namespace lgrape::qcore
