#pragma once
// Independent reference implementations used only by the tests. None of them
// call into the library's linear-algebra or superoperator code.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using C = std::complex<double>;

inline Mat expm(const Mat& m) { return m.exp(); }

inline Mat sx() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat sy() { Mat m(2, 2); m << 0, C(0, -1), C(0, 1), 0; return m; }
inline Mat sz() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }
inline Mat id2() { return Mat::Identity(2, 2); }
// |0><1|: takes |1> to |0>.
inline Mat down() { Mat m = Mat::Zero(2, 2); m(0, 1) = 1; return m; }

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline Vec vec(const Mat& a) {
  Vec v(a.size());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) v(j * a.rows() + i) = a(i, j);
  return v;
}

inline Mat unvec(const Vec& v, Eigen::Index d) {
  Mat a(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) a(i, j) = v(j * d + i);
  return a;
}

struct Jump {
  double rate;
  Mat op;
  bool half_difference;  // rate (L rho L - rho) instead of the Lindblad form
};

// Superoperator assembled column by column from its action on matrix units.
inline Mat liouvillian(const Mat& h, const std::vector<Jump>& jumps) {
  const Eigen::Index d = h.rows();
  Mat out(d * d, d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      Mat e = Mat::Zero(d, d);
      e(i, j) = 1;
      Mat r = C(0, -1) * (h * e - e * h);
      for (const auto& jp : jumps) {
        if (jp.half_difference) {
          r += jp.rate * (jp.op * e * jp.op - e);
        } else {
          const Mat ld = jp.op.adjoint();
          r += jp.rate * (jp.op * e * ld - 0.5 * (ld * jp.op * e + e * ld * jp.op));
        }
      }
      out.col(j * d + i) = vec(r);
    }
  }
  return out;
}

// Augmented exp([[L, 0], [dL, L]]) propagation of (rho, drho).
struct Pair {
  Mat rho;
  Mat drho;
};

inline Pair block_step(const Pair& in, const Mat& l, const Mat& dl, double dt) {
  const Eigen::Index n = l.rows();
  Mat a = Mat::Zero(2 * n, 2 * n);
  a.topLeftCorner(n, n) = l;
  a.bottomRightCorner(n, n) = l;
  a.bottomLeftCorner(n, n) = dl;
  Vec x(2 * n);
  x << vec(in.rho), vec(in.drho);
  const Vec y = expm(dt * a) * x;
  const Eigen::Index d = in.rho.rows();
  return {unvec(y.head(n), d), unvec(y.tail(n), d)};
}

// QFI from the SLD solved as a linear system (rho L + L rho)/2 = drho.
// Requires full-rank rho.
inline double qfi_lyapunov(const Mat& rho, const Mat& drho) {
  const Eigen::Index d = rho.rows();
  const Mat i = Mat::Identity(d, d);
  const Mat a = 0.5 * (kron(i, rho) + kron(rho.transpose(), i));
  const Vec l = a.fullPivLu().solve(vec(drho));
  const Mat sld = unvec(l, d);
  return (rho * sld * sld).trace().real();
}

// Qubit QFI from the Bloch vector: |dr|^2 + (r.dr)^2 / (1 - |r|^2).
inline double qfi_bloch(const Mat& rho, const Mat& drho) {
  const auto bloch = [](const Mat& m) {
    return Eigen::Vector3d((sx() * m).trace().real(), (sy() * m).trace().real(), (sz() * m).trace().real());
  };
  const Eigen::Vector3d r = bloch(rho);
  const Eigen::Vector3d dr = bloch(drho);
  const double purity_gap = 1.0 - r.squaredNorm();
  if (purity_gap < 1e-12) return dr.squaredNorm();
  return dr.squaredNorm() + std::pow(r.dot(dr), 2) / purity_gap;
}

inline Mat random_matrix(std::mt19937_64& rng, Eigen::Index d, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Mat m(d, d);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = C(u(rng), u(rng));
  return m;
}

inline Mat random_hermitian(std::mt19937_64& rng, Eigen::Index d) {
  const Mat m = random_matrix(rng, d);
  return 0.5 * (m + m.adjoint());
}

// Random full-rank density matrix.
inline Mat random_state(std::mt19937_64& rng, Eigen::Index d) {
  const Mat g = random_matrix(rng, d);
  Mat rho = g * g.adjoint() + 1e-3 * Mat::Identity(d, d);
  return rho / rho.trace();
}

inline Mat random_traceless_hermitian(std::mt19937_64& rng, Eigen::Index d) {
  Mat h = random_hermitian(rng, d);
  return h - (h.trace() / static_cast<double>(d)) * Mat::Identity(d, d);
}

// Random rank-one POVM with 2d outcomes from a random isometry.
inline std::vector<Mat> random_povm(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> n;
  Mat g(2 * d, d);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = C(n(rng), n(rng));
  const Mat q = Eigen::HouseholderQR<Mat>(g).householderQ() * Mat::Identity(2 * d, d);
  std::vector<Mat> out;
  for (Eigen::Index x = 0; x < 2 * d; ++x) {
    const Vec v = q.row(x).adjoint();
    out.push_back(v * v.adjoint());
  }
  return out;
}

}  // namespace oracle
