#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "lgrape/errors.hpp"
#include "lgrape/qcore.hpp"
#include "support/oracles.hpp"

using namespace lgrape;
using Catch::Approx;

namespace {

Operator diag(std::initializer_list<Complex> d) {
  Operator m = Operator::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (auto v : d) m(i, i) = v, ++i;
  return m;
}

double dist(const Operator& a, const Operator& b) { return (a - b).norm(); }

}  // namespace

TEST_CASE("pauli constructors and embedding", "[qcore]") {
  CHECK(dist(qcore::pauli(3, 1, 1), diag({1, -1})) == 0.0);
  CHECK(dist(qcore::pauli(1, 2, 2), oracle::kron(oracle::id2(), oracle::sx())) == 0.0);
  CHECK(dist(qcore::pauli(0, 1, 2), Operator::Identity(4, 4)) == 0.0);
  CHECK(dist(qcore::pauli(2, 1, 2), oracle::kron(oracle::sy(), oracle::id2())) == 0.0);

  CHECK_THROWS_AS(qcore::pauli(4, 1, 1), ArgumentError);
  CHECK_THROWS_AS(qcore::pauli(-1, 1, 1), ArgumentError);
  CHECK_THROWS_AS(qcore::pauli(1, 2, 1), ArgumentError);
  CHECK_THROWS_AS(qcore::pauli(1, 1, 3), ArgumentError);
  CHECK_THROWS_AS(qcore::pauli(1, 0, 2), ArgumentError);
}

TEST_CASE("ladder operators", "[qcore]") {
  const Operator down = qcore::lowering();
  CHECK(dist(down, oracle::down()) == 0.0);
  CHECK(dist(qcore::raising(), down.adjoint()) == 0.0);
  // |1> -> |0>
  Eigen::Vector2cd one(0, 1);
  CHECK((down * one - Eigen::Vector2cd(1, 0)).norm() == 0.0);
}

TEST_CASE("kron examples", "[qcore]") {
  CHECK(dist(qcore::kron(qcore::identity(2), qcore::identity(2)), Operator::Identity(4, 4)) == 0.0);
  CHECK(dist(qcore::kron(qcore::pauli(3, 1, 1), qcore::pauli(3, 1, 1)), diag({1, -1, -1, 1})) == 0.0);
  CHECK(dist(qcore::kron(diag({2, 0}), qcore::identity(2)), diag({2, 2, 0, 0})) == 0.0);
}

TEST_CASE("kron is associative and bilinear", "[qcore][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator a = oracle::random_matrix(rng, 2);
    const Operator b = oracle::random_matrix(rng, 2);
    const Operator c = oracle::random_matrix(rng, 4);
    const Operator b2 = oracle::random_matrix(rng, 2);
    const Complex s(0.3, -1.7);
    CHECK(dist(qcore::kron(qcore::kron(a, b), c), qcore::kron(a, qcore::kron(b, c))) < 1e-14);
    CHECK(dist(qcore::kron(a, b + s * b2), qcore::kron(a, b) + s * qcore::kron(a, b2)) < 1e-14);
    CHECK(dist(qcore::kron(s * a, b), s * qcore::kron(a, b)) < 1e-14);
    CHECK(dist(qcore::kron(a, c), oracle::kron(a, c)) < 1e-15);
  }
}

TEST_CASE("herm_eig examples", "[qcore]") {
  auto s = qcore::herm_eig(qcore::pauli(1, 1, 1));
  CHECK(s.eigenvalues(0) == Approx(-1.0).margin(1e-14));
  CHECK(s.eigenvalues(1) == Approx(1.0).margin(1e-14));

  s = qcore::herm_eig(0.5 * qcore::identity(2));
  CHECK(s.eigenvalues(0) == Approx(0.5).margin(1e-15));
  CHECK(s.eigenvalues(1) == Approx(0.5).margin(1e-15));

  s = qcore::herm_eig(diag({0.6, 0.4}));
  CHECK(s.eigenvalues(0) == Approx(0.4).margin(1e-15));
  CHECK(s.eigenvalues(1) == Approx(0.6).margin(1e-15));
}

TEST_CASE("herm_eig rejects non-Hermitian input", "[qcore]") {
  Operator m = qcore::pauli(1, 1, 1);
  m(0, 1) += 1e-6;
  CHECK_THROWS_AS(qcore::herm_eig(m), ContractViolation);
  Operator tiny = qcore::pauli(1, 1, 1);
  tiny(0, 1) += Complex(1e-12, 0);
  CHECK_NOTHROW(qcore::herm_eig(tiny));
}

TEST_CASE("herm_eig reconstruction and orthonormality on random Hermitian inputs", "[qcore][property]") {
  std::mt19937_64 rng(11);
  for (int d : {2, 4, 16}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Operator h = oracle::random_hermitian(rng, d);
      const auto s = qcore::herm_eig(h);
      CHECK(dist(s.reconstruct(), h) < 1e-12);
      CHECK(dist(s.eigenvectors.adjoint() * s.eigenvectors, Operator::Identity(d, d)) < 1e-12);
      for (int k = 1; k < d; ++k) CHECK(s.eigenvalues(k) >= s.eigenvalues(k - 1));
    }
  }
}

TEST_CASE("expm examples", "[qcore]") {
  CHECK(dist(qcore::expm(Operator::Zero(2, 2)), Operator::Identity(2, 2)) == 0.0);
  const Operator sx = qcore::pauli(1, 1, 1);
  CHECK(dist(qcore::expm(-kI * (std::numbers::pi / 2) * sx), -kI * sx) < 1e-15);
  CHECK(dist(qcore::expm(diag({1, 2})), diag({std::exp(1.0), std::exp(2.0)})) < 1e-14);
}

TEST_CASE("expm matches an independent scaling-and-squaring reference", "[qcore][property]") {
  std::mt19937_64 rng(3);
  for (int d : {2, 4, 16, 32}) {
    for (double scale : {1e-4, 0.1, 1.0, 3.0, 10.0}) {
      for (int trial = 0; trial < 5; ++trial) {
        const Operator m = oracle::random_matrix(rng, d, scale);
        const Operator ref = oracle::expm(m);
        CHECK(dist(qcore::expm(m), ref) / ref.norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("expm inverse and Hermitian spectral route", "[qcore][property]") {
  std::mt19937_64 rng(5);
  for (int d : {2, 4, 16}) {
    for (int trial = 0; trial < 10; ++trial) {
      Operator m = oracle::random_matrix(rng, d);
      m *= 10.0 * std::uniform_real_distribution<double>(0, 1)(rng) / m.norm();
      CHECK(dist(qcore::expm(m) * qcore::expm(-m), Operator::Identity(d, d)) < 1e-10);

      const Operator h = oracle::random_hermitian(rng, d);
      const auto s = qcore::herm_eig(h);
      const Operator spectral =
          s.eigenvectors * s.eigenvalues.array().exp().matrix().cast<Complex>().asDiagonal() *
          s.eigenvectors.adjoint();
      CHECK(dist(qcore::expm(h), spectral) < 1e-10 * spectral.norm());
    }
  }
}

TEST_CASE("vec is column stacking", "[qcore]") {
  Operator m(2, 2);
  m << Complex(1), Complex(3), Complex(2), Complex(4);  // [[a,c],[b,d]] with a=1,b=2,c=3,d=4
  const CVector v = qcore::vec(m);
  REQUIRE(v.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(v(i) == Complex(i + 1));

  const Operator sy = qcore::pauli(2, 1, 1);
  CHECK(dist(qcore::unvec(qcore::vec(sy)), sy) == 0.0);
  CHECK_THROWS_AS(qcore::unvec(CVector::Zero(3)), ArgumentError);
}

TEST_CASE("vec(AXB) = (B^T kron A) vec(X)", "[qcore][property]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator a = oracle::random_matrix(rng, 2);
    const Operator x = oracle::random_matrix(rng, 2);
    const Operator b = oracle::random_matrix(rng, 2);
    const CVector lhs = qcore::vec(a * x * b);
    const CVector rhs = oracle::kron(b.transpose(), a) * oracle::vec(x);
    CHECK((lhs - rhs).norm() < 1e-14);
  }
}
