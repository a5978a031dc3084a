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

#pragma once

// Dense complex linear algebra shared by every other module.
//
// Qubit ordering: qubit 0 is the leftmost (most significant) tensor factor.
// For an n-qubit register, qubit q lives at bit (n - 1 - q) of the basis
// index, so |q0 q1 ... q_{n-1}> has index q0*2^{n-1} + ... + q_{n-1}. Gate
// registers are laid out as (control, target, ancilla) with the ancilla last.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace adiagate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr int kMaxQubits = 14;

/// Numerical tolerances used across the library.
struct Tolerances {
  double algebraic = 1e-12;   // exact algebraic identities
  double eigen = 1e-10;       // eigensolver residuals
  double normalization = 1e-12;
  double degeneracy = 1e-8;   // eigenvalues closer than this share a level
};

const Tolerances& tolerances();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or register sizes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be Hermitian is not.
class SymmetryError : public ValidationError {
 public:
  SymmetryError(double violation, Eigen::Index row, Eigen::Index col);

  double violation() const { return violation_; }
  Eigen::Index row() const { return row_; }
  Eigen::Index col() const { return col_; }

 private:
  double violation_;
  Eigen::Index row_;
  Eigen::Index col_;
};

/// Normalized amplitude vector over an n-qubit register.
class QuantumState {
 public:
  /// Takes ownership of `amplitudes`; throws unless the length is a power of
  /// two and the squared norm is 1 within `tolerance`.
  explicit QuantumState(Vector amplitudes, double tolerance = tolerances().normalization);

  /// Rescales `amplitudes` to unit norm first.
  static QuantumState normalized(Vector amplitudes);
  static QuantumState basis(int n_qubits, std::size_t index);
  /// Computational basis state from a bit string such as "0110".
  static QuantumState from_bits(const std::string& bits);
  static QuantumState zeros(int n_qubits) { return basis(n_qubits, 0); }

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }
  std::span<const Complex> span() const { return {amplitudes_.data(), dim()}; }

 private:
  Vector amplitudes_;
  int n_qubits_ = 0;
};

/// Square complex matrix equal to its conjugate transpose.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries, double tolerance = tolerances().algebraic);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

 private:
  Matrix entries_;
};

/// Eigen-decomposition of a Hermitian operator, eigenvalues ascending.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;  // column k pairs with eigenvalues[k]

  /// Columns whose eigenvalue lies within `tolerance` of the minimum.
  Matrix ground_space(double tolerance = tolerances().degeneracy) const;
};

namespace pauli {
Matrix identity(Eigen::Index dim = 2);
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

/// Largest entry magnitude of `a`.
double max_abs(const Matrix& a);

/// Kronecker product a ⊗ b of two square operators.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

Spectrum eigh(const HermitianOperator& h);

/// exp(-i h dt) from the spectral decomposition of h.
Matrix step_unitary(const HermitianOperator& h, double dt);

/// Lifts a 2^k x 2^k operator on `targets` (in operator factor order) into an
/// n-qubit register, acting as identity on the remaining qubits.
Matrix embed(const Matrix& op, std::span<const int> targets, int n_qubits);

/// |<a|b>|^2
double fidelity(const QuantumState& a, const QuantumState& b);
double fidelity(const Vector& a, const Vector& b);

/// min over δ of ||a - e^{iδ} b||, the distance after removing one global
/// phase.
double phase_aligned_distance(const Vector& a, const Vector& b);

/// Index layout for applying k-qubit operators to fixed targets of an
/// n-qubit register; build once, reuse for every time slice.
class LocalPlan {
 public:
  LocalPlan(std::span<const int> targets, int n_qubits);

  /// In-place state <- op ⊗ 1 (op acting on the planned targets).
  void apply(const Matrix& op, Vector& state) const;

  const std::vector<int>& targets() const { return targets_; }
  int n_qubits() const { return n_qubits_; }
  std::size_t local_dim() const { return offsets_.size(); }

 private:
  std::vector<int> targets_;
  int n_qubits_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> bases_;
};

/// Applies `op` to `targets` of `state` without forming the embedded matrix.
Vector apply_local(const Matrix& op, std::span<const int> targets, const Vector& state);

/// Validates that `targets` are distinct, in range, and match `op_dim`.
void check_targets(std::span<const int> targets, int n_qubits, Eigen::Index op_dim);

/// Qubit count for a power-of-two dimension; throws otherwise.
int qubits_for_dim(std::size_t dim);

}  // namespace adiagate
