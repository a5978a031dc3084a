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

// Random instances and textbook matrices shared by the test binaries.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "adiagate/circuits.hpp"
#include "adiagate/core.hpp"
#include "adiagate/hamiltonians.hpp"

namespace testing {

using adiagate::Complex;
using adiagate::Matrix;
using adiagate::Vector;

inline constexpr double kPi = std::numbers::pi;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20260417);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Matrix random_matrix(Eigen::Index dim) {
  std::normal_distribution<double> normal;
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = Complex(normal(rng()), normal(rng()));
  }
  return m;
}

inline Matrix random_hermitian(Eigen::Index dim) {
  const Matrix m = random_matrix(dim);
  return (m + m.adjoint()) / 2.0;
}

inline Vector random_vector(Eigen::Index dim) {
  std::normal_distribution<double> normal;
  Vector v(dim);
  for (auto& a : v) a = Complex(normal(rng()), normal(rng()));
  return v.normalized();
}

inline adiagate::QuantumState random_state(int n_qubits) {
  return adiagate::QuantumState::normalized(random_vector(Eigen::Index{1} << n_qubits));
}

inline adiagate::BlochAxis random_axis() {
  std::normal_distribution<double> normal;
  return adiagate::BlochAxis::normalized(normal(rng()), normal(rng()), normal(rng()));
}

inline Matrix rank_one(const Vector& v) { return v * v.adjoint(); }

inline Matrix hadamard() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

inline Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1;
  m(2, 3) = m(3, 2) = 1;
  return m;
}

// Linear polar sweep of a two-level branch, solved exactly in the frame that
// follows the instantaneous eigenbasis. Returns the (ground, excited)
// amplitudes at t = T, starting from the ground state.
inline std::pair<Complex, double> sweep_amplitudes(double theta_f, double T) {
  const double rate = theta_f / T;
  const double omega = std::sqrt(1.0 + rate * rate / 4.0);
  const double tilt_sin = rate / 2.0 / omega;
  const double tilt_cos = 1.0 / omega;
  const Complex ground(std::cos(omega * T), tilt_cos * std::sin(omega * T));
  return {ground, tilt_sin * std::sin(omega * T)};
}

// Exact P(ancilla = 1) after a linear sweep to theta_f.
inline double swept_excited_probability(double theta_f, double T) {
  const auto [a, b] = sweep_amplitudes(theta_f, T);
  return std::norm(a * std::sin(theta_f / 2) - b * std::cos(theta_f / 2));
}

// max |a - e^{iδ} b| with δ fitted from the largest entry of b.
inline double phase_fitted_distance(const Matrix& a, const Matrix& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const Complex phase = a(r, c) / b(r, c);
  return (a - (phase / std::abs(phase)) * b).cwiseAbs().maxCoeff();
}

// Reference embedding: explicit sum over basis states, no index tricks.
inline Matrix brute_force_embed(const Matrix& op, const std::vector<int>& targets, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const int k = static_cast<int>(targets.size());
  Matrix out = Matrix::Zero(dim, dim);
  auto bit = [n](Eigen::Index idx, int q) { return static_cast<int>((idx >> (n - 1 - q)) & 1); };
  for (Eigen::Index row = 0; row < dim; ++row) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      bool rest_equal = true;
      for (int q = 0; q < n; ++q) {
        if (std::find(targets.begin(), targets.end(), q) == targets.end() && bit(row, q) != bit(col, q)) {
          rest_equal = false;
        }
      }
      if (!rest_equal) continue;
      Eigen::Index lr = 0, lc = 0;
      for (int j = 0; j < k; ++j) {
        lr = (lr << 1) | bit(row, targets[j]);
        lc = (lc << 1) | bit(col, targets[j]);
      }
      out(row, col) = op(lr, lc);
    }
  }
  return out;
}

}  // namespace testing
