// Copyright 2026 The adiagate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace adiagate;
using namespace testing;

TEST_CASE("kron of identity and sigma_z is diag(1,-1,1,-1)") {
  const Matrix k = kron(pauli::identity(), pauli::z());
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1, -1, 1, -1;
  CHECK(max_abs(k - expected) == 0.0);
}

TEST_CASE("kron(X, X) flips both bits") {
  const Vector out = kron(pauli::x(), pauli::x()) * QuantumState::from_bits("00").amplitudes();
  CHECK(fidelity(out, QuantumState::from_bits("11").amplitudes()) == doctest::Approx(1.0));
}

TEST_CASE("kron of projectors is a projector") {
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix p = rank_one(random_vector(2));
    const Matrix q = rank_one(random_vector(4));
    const Matrix pq = kron(p, q);
    CHECK(max_abs(pq * pq - pq) < 1e-12);
  }
}

TEST_CASE("kron is associative") {
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(2), b = random_matrix(2), c = random_matrix(4);
    CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("eigh of sigma_z") {
  const Spectrum s = eigh(HermitianOperator(pauli::z()));
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(std::abs(s.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(s.ground_space().cols() == 1);
}

TEST_CASE("eigh reconstruction and orthonormality on random Hermitian matrices") {
  for (Eigen::Index dim : {2, 3, 8, 16, 33, 64}) {
    const Matrix h = random_hermitian(dim);
    const Spectrum s = eigh(HermitianOperator(h));
    const Matrix& v = s.eigenvectors;
    const Matrix rebuilt = v * s.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
    CHECK(max_abs(rebuilt - h) < 1e-10);
    CHECK(max_abs(v.adjoint() * v - Matrix::Identity(dim, dim)) < 1e-10);
    CHECK(max_abs(h * v - v * s.eigenvalues.cast<Complex>().asDiagonal()) < 1e-10);
    for (Eigen::Index i = 1; i < dim; ++i) CHECK(s.eigenvalues[i - 1] <= s.eigenvalues[i]);
  }
}

TEST_CASE("ground_space collects degenerate levels") {
  Matrix h = Matrix::Zero(4, 4);
  h.diagonal() << -1, 1, -1, 1;
  CHECK(eigh(HermitianOperator(h)).ground_space().cols() == 2);
}

TEST_CASE("step_unitary") {
  SUBCASE("zero Hamiltonian gives identity") {
    CHECK(max_abs(step_unitary(HermitianOperator(Matrix::Zero(4, 4)), 1.7) - Matrix::Identity(4, 4)) < 1e-15);
  }
  SUBCASE("sigma_z for a quarter period is -i sigma_z") {
    const Matrix u = step_unitary(HermitianOperator(pauli::z()), kPi / 2);
    CHECK(max_abs(u - Complex(0, -1) * pauli::z()) < 1e-12);
  }
  SUBCASE("random Hamiltonians give unitaries") {
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::Index dim = Eigen::Index{1} << (1 + trial % 4);
      const Matrix u = step_unitary(HermitianOperator(random_hermitian(dim)), uniform(-3, 3));
      CHECK(max_abs(u.adjoint() * u - Matrix::Identity(dim, dim)) < 1e-10);
    }
  }
  SUBCASE("matches a truncated Taylor series for a small step") {
    const Matrix h = random_hermitian(4);
    const double dt = 1e-3;
    Matrix series = Matrix::Identity(4, 4), term = Matrix::Identity(4, 4);
    for (int k = 1; k < 12; ++k) {
      term = term * (Complex(0, -dt) * h) / static_cast<double>(k);
      series += term;
    }
    CHECK(max_abs(step_unitary(HermitianOperator(h), dt) - series) < 1e-13);
  }
}

TEST_CASE("embed") {
  SUBCASE("single target uses the leftmost-is-qubit-0 convention") {
    const std::vector<int> t{1};
    CHECK(max_abs(embed(pauli::x(), t, 2) - kron(pauli::identity(), pauli::x())) == 0.0);
  }
  SUBCASE("full register is unchanged") {
    const std::vector<int> t{0, 1};
    CHECK(max_abs(embed(cnot(), t, 2) - cnot()) == 0.0);
  }
  SUBCASE("reversed targets swap the factors") {
    const std::vector<int> t{1, 0};
    CHECK(max_abs(embed(cnot(), t, 2) - brute_force_embed(cnot(), t, 2)) == 0.0);
  }
  SUBCASE("non-adjacent targets match the permutation construction") {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix op = random_matrix(4);
      for (const std::vector<int>& t : {std::vector<int>{0, 2}, std::vector<int>{2, 0}, std::vector<int>{1, 3}}) {
        const int n = t[0] == 1 || t[1] == 3 ? 4 : 3;
        CHECK(max_abs(embed(op, t, n) - brute_force_embed(op, t, n)) < 1e-15);
      }
    }
  }
  SUBCASE("disjoint embeddings commute") {
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<int> a{0, 3}, b{2};
      const Matrix x = embed(random_matrix(4), a, 4);
      const Matrix y = embed(random_matrix(2), b, 4);
      CHECK(max_abs(x * y - y * x) < 1e-12);
    }
  }
  SUBCASE("bad targets are rejected") {
    const std::vector<int> dup{0, 0}, out_of_range{3};
    CHECK_THROWS_AS(embed(cnot(), dup, 2), ValidationError);
    CHECK_THROWS_AS(embed(pauli::x(), out_of_range, 2), DimensionError);
    const std::vector<int> one{0};
    CHECK_THROWS_AS(embed(cnot(), one, 2), DimensionError);
  }
}

TEST_CASE("apply_local agrees with the embedded matrix") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 3;
    const std::vector<int> t{n - 1, 0, 1};
    const Matrix op = random_matrix(8);
    const Vector psi = random_vector(Eigen::Index{1} << n);
    CHECK((apply_local(op, t, psi) - embed(op, t, n) * psi).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("fidelity") {
  const auto zero = QuantumState::from_bits("0");
  const auto one = QuantumState::from_bits("1");
  const auto plus = QuantumState::normalized(Vector::Ones(2));
  const auto psi = random_state(3);
  CHECK(fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(zero, one) == 0.0);
  CHECK(fidelity(zero, plus) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(fidelity(zero, psi), DimensionError);
}

TEST_CASE("phase_aligned_distance ignores one global phase") {
  const Vector a = random_vector(8);
  CHECK(phase_aligned_distance(a, std::polar(1.0, 1.234) * a) < 1e-14);
  CHECK(phase_aligned_distance(a, -a) < 1e-14);
}

TEST_CASE("QuantumState validation") {
  CHECK_THROWS_AS(QuantumState(Vector::Ones(3).normalized()), DimensionError);
  CHECK_THROWS_AS(QuantumState(Vector::Ones(2)), ValidationError);
  CHECK_THROWS_AS(QuantumState::from_bits("01x"), ValidationError);
  const auto s = QuantumState::from_bits("0110");
  CHECK(s.n_qubits() == 4);
  CHECK(s[6] == Complex(1.0, 0.0));
  CHECK_THROWS_AS(qubits_for_dim(std::size_t{1} << 15), DimensionError);
}

TEST_CASE("HermitianOperator rejects non-Hermitian input with a location") {
  Matrix m = pauli::x();
  m(0, 1) = Complex(1.0, 0.1);
  try {
    HermitianOperator h(m);
    FAIL("expected SymmetryError");
  } catch (const SymmetryError& e) {
    CHECK(e.violation() == doctest::Approx(0.1));
  }
  CHECK_THROWS_AS(HermitianOperator(Matrix::Zero(2, 3)), DimensionError);
}
