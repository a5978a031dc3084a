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

#include "adiagate/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "adiagate/kernels.hpp"

namespace adiagate {

const Tolerances& tolerances() {
  static const Tolerances t{};
  return t;
}

namespace {

std::string symmetry_message(double violation, Eigen::Index row, Eigen::Index col) {
  std::ostringstream os;
  os << "operator is not Hermitian: |h(" << row << "," << col << ") - conj(h(" << col << "," << row
     << "))| = " << violation;
  return os.str();
}

}  // namespace

SymmetryError::SymmetryError(double violation, Eigen::Index row, Eigen::Index col)
    : ValidationError(symmetry_message(violation, row, col)), violation_(violation), row_(row), col_(col) {}

int qubits_for_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if (n > kMaxQubits) throw DimensionError("register exceeds supported size");
  return n;
}

QuantumState::QuantumState(Vector amplitudes, double tolerance) : amplitudes_(std::move(amplitudes)) {
  n_qubits_ = qubits_for_dim(static_cast<std::size_t>(amplitudes_.size()));
  if (!amplitudes_.allFinite()) throw ValidationError("state has non-finite amplitudes");
  const double n2 = kernels::table(kernels::active()).norm2(amplitudes_.data(), dim());
  if (std::abs(n2 - 1.0) > tolerance) {
    std::ostringstream os;
    os << "state is not normalized: squared norm " << n2;
    throw ValidationError(os.str());
  }
}

QuantumState QuantumState::normalized(Vector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw ValidationError("cannot normalize a zero or non-finite vector");
  amplitudes /= n;
  return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::basis(int n_qubits, std::size_t index) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) throw DimensionError("bad register size");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw DimensionError("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return QuantumState(std::move(v));
}

QuantumState QuantumState::from_bits(const std::string& bits) {
  if (bits.empty()) throw ValidationError("empty bit string");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("bit string may only contain 0 and 1: " + bits);
    index = (index << 1) | static_cast<std::size_t>(c == '1');
  }
  return basis(static_cast<int>(bits.size()), index);
}

HermitianOperator::HermitianOperator(Matrix entries, double tolerance) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("operator is not square");
  double worst = 0.0;
  Eigen::Index wr = 0;
  Eigen::Index wc = 0;
  for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
    for (Eigen::Index r = 0; r <= c; ++r) {
      const double d = std::abs(entries_(r, c) - std::conj(entries_(c, r)));
      if (!(d <= worst)) {
        worst = d;
        wr = r;
        wc = c;
      }
    }
  }
  if (!(worst <= tolerance)) throw SymmetryError(worst, wr, wc);
}

Matrix Spectrum::ground_space(double tolerance) const {
  if (eigenvalues.size() == 0) return {};
  const double e0 = eigenvalues[0];
  Eigen::Index k = 1;
  while (k < eigenvalues.size() && eigenvalues[k] - e0 <= tolerance) ++k;
  return eigenvectors.leftCols(k);
}

namespace pauli {

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix y() {
  Matrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) throw DimensionError("kron operands must be square");
  const Eigen::Index dim = a.rows() * b.rows();
  if (dim > (Eigen::Index{1} << kMaxQubits)) throw DimensionError("kron result exceeds 2^14");
  Matrix out(dim, dim);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

Spectrum eigh(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
  // Eigen returns eigenvalues in ascending order.
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix step_unitary(const HermitianOperator& h, double dt) {
  if (!std::isfinite(dt)) throw ValidationError("time step must be finite");
  const Spectrum s = eigh(h);
  Vector phases(s.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases[k] = std::polar(1.0, -s.eigenvalues[k] * dt);
  return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

void check_targets(std::span<const int> targets, int n_qubits, Eigen::Index op_dim) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw DimensionError("bad register size");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits) {
      throw DimensionError("target qubit " + std::to_string(targets[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) throw ValidationError("duplicate target qubit " + std::to_string(targets[i]));
    }
  }
  if (op_dim != (Eigen::Index{1} << targets.size())) {
    throw DimensionError("operator dimension does not match the number of targets");
  }
}

Matrix embed(const Matrix& op, std::span<const int> targets, int n_qubits) {
  if (op.rows() != op.cols()) throw DimensionError("operator is not square");
  check_targets(targets, n_qubits, op.rows());
  if (n_qubits > kMaxQubits) throw DimensionError("embedded operator exceeds 2^14");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    Vector col = Vector::Zero(dim);
    col[c] = 1.0;
    out.col(c) = apply_local(op, targets, col);
  }
  return out;
}

double fidelity(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("fidelity of states with different dimensions");
  const Complex ov = kernels::table(kernels::active()).inner(a.data(), b.data(), static_cast<std::size_t>(a.size()));
  return std::clamp(std::norm(ov), 0.0, 1.0);
}

double fidelity(const QuantumState& a, const QuantumState& b) { return fidelity(a.amplitudes(), b.amplitudes()); }

double phase_aligned_distance(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("distance between vectors of different dimensions");
  const Complex ov = b.dot(a);  // <b|a>
  const Complex align = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex{1.0, 0.0};
  return (a - align * b).norm();
}

LocalPlan::LocalPlan(std::span<const int> targets, int n_qubits)
    : targets_(targets.begin(), targets.end()), n_qubits_(n_qubits) {
  check_targets(targets, n_qubits, Eigen::Index{1} << targets.size());
  const std::size_t k = targets.size();
  const std::size_t dim = std::size_t{1} << k;
  offsets_.assign(dim, 0);
  std::size_t mask = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t bit = std::size_t{1} << (n_qubits - 1 - targets[i]);
    mask |= bit;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j & (std::size_t{1} << (k - 1 - i))) offsets_[j] |= bit;
    }
  }
  const std::size_t full = std::size_t{1} << n_qubits;
  bases_.reserve(full >> k);
  for (std::size_t i = 0; i < full; ++i) {
    if ((i & mask) == 0) bases_.push_back(i);
  }
}

void LocalPlan::apply(const Matrix& op, Vector& state) const {
  if (op.rows() != static_cast<Eigen::Index>(local_dim()) || op.cols() != op.rows()) {
    throw DimensionError("operator dimension does not match the planned targets");
  }
  if (state.size() != (Eigen::Index{1} << n_qubits_)) throw DimensionError("state does not match the planned register");
  kernels::table(kernels::active())
      .apply_gathered(state.data(), bases_.data(), bases_.size(), offsets_.data(), local_dim(), op.data());
}

Vector apply_local(const Matrix& op, std::span<const int> targets, const Vector& state) {
  const int n = qubits_for_dim(static_cast<std::size_t>(state.size()));
  check_targets(targets, n, op.rows());
  Vector out = state;
  LocalPlan(targets, n).apply(op, out);
  return out;
}

}  // namespace adiagate
