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

// Time-dependent Hamiltonians for controlled adiabatic evolution: the
// meridian branch Hamiltonians, the two- and three-qubit gate Hamiltonians,
// and the generic projector-controlled interpolation.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "adiagate/core.hpp"

namespace adiagate {

/// Unit vector on the Bloch sphere.
class BlochAxis {
 public:
  /// Throws ValidationError unless |n| = 1 within 1e-12.
  BlochAxis(double nx, double ny, double nz);

  /// Rescales (nx, ny, nz) to unit length; throws on the zero vector.
  static BlochAxis normalized(double nx, double ny, double nz);
  static BlochAxis x() { return {1.0, 0.0, 0.0}; }
  static BlochAxis y() { return {0.0, 1.0, 0.0}; }
  static BlochAxis z() { return {0.0, 0.0, 1.0}; }

  double nx() const { return nx_; }
  double ny() const { return ny_; }
  double nz() const { return nz_; }
  double polar() const;
  double azimuth() const;

  /// n·σ
  Matrix dot_sigma() const;

 private:
  double nx_;
  double ny_;
  double nz_;
};

/// θ(t) = θ_f t / T on [0, T].
class LinearSchedule {
 public:
  /// theta_f in [0, π], runtime >= 0, steps >= 1. A zero runtime is the
  /// sudden limit: the only valid time is t = 0 and it maps to θ_f.
  LinearSchedule(double theta_f, double runtime, long steps);
  /// Uses the default resolution of 200 slices per unit time.
  LinearSchedule(double theta_f, double runtime);

  double theta_f() const { return theta_f_; }
  double runtime() const { return runtime_; }
  long steps() const { return steps_; }

  double theta_at(double t) const;

 private:
  double theta_f_;
  double runtime_;
  long steps_;
};

/// Slices used when the caller does not choose: 200 per unit time.
long default_steps(double runtime);

double theta_at(double t, const LinearSchedule& schedule);

/// Evaluation contract t -> H(t) on [0, runtime].
class TimeDependentHamiltonian {
 public:
  using Evaluator = std::function<Matrix(double)>;

  TimeDependentHamiltonian(Eigen::Index dim, double runtime, Evaluator evaluate,
                           std::optional<Matrix> branch_difference = std::nullopt);

  Eigen::Index dim() const { return dim_; }
  double runtime() const { return runtime_; }

  /// Throws ValidationError for t outside [0, runtime] and SymmetryError if
  /// the evaluation is not Hermitian within 1e-12.
  HermitianOperator operator()(double t) const;

  /// P_1 - P_2 (tensored with the target identity) for two-branch builders.
  const std::optional<Matrix>& branch_difference() const { return branch_difference_; }

 private:
  Eigen::Index dim_;
  double runtime_;
  Evaluator evaluate_;
  std::optional<Matrix> branch_difference_;
};

/// -cosθ σz - sinθ (cosφ σx + sinφ σy)
Matrix branch_hamiltonian(double theta, double phi);

/// The branch Hamiltonian swept along a schedule, as a 2x2 evolution.
TimeDependentHamiltonian branch_evolution(double phi, const LinearSchedule& schedule);

/// (|n>, |n⊥>) with |n> = cos(ϑ/2)|0> + e^{iϕ} sin(ϑ/2)|1> and
/// |n⊥> = sin(ϑ/2)|0> - e^{iϕ} cos(ϑ/2)|1> for polar ϑ and azimuth ϕ of n.
std::pair<QuantumState, QuantumState> axis_states(const BlochAxis& axis);

/// |n><n| ⊗ H_0(t) + |n⊥><n⊥| ⊗ H_φ(t), ordered (input qubit, ancilla).
TimeDependentHamiltonian single_qubit_gate_hamiltonian(const BlochAxis& axis, double phi,
                                                       const LinearSchedule& schedule);

/// |1,n⊥><1,n⊥| ⊗ H_φ(t) + (1 - |1,n⊥><1,n⊥|) ⊗ H_0(t), ordered
/// (control, target, ancilla).
TimeDependentHamiltonian controlled_gate_hamiltonian(const BlochAxis& axis, double phi,
                                                     const LinearSchedule& schedule);

/// Inputs of the projector-controlled interpolation
///   H(t) = Σ_j P_j ⊗ [f1(t) H_b + f2(t) H_f,j].
struct ControlledEvolutionSpec {
  std::vector<Matrix> projectors;  // on the control subsystem
  Matrix driver;                   // H_b on the target subsystem
  std::vector<Matrix> finals;      // H_f,j, one per projector
  double runtime = 1.0;
  // Default to f1 = 1 - t/T and f2 = t/T when left empty.
  std::function<double(double)> f1;
  std::function<double(double)> f2;
};

/// Checks the projector algebra and schedule endpoints; throws ValidationError
/// naming the violated condition.
void validate(const ControlledEvolutionSpec& spec);

TimeDependentHamiltonian generic_controlled_evolution(ControlledEvolutionSpec spec);

}  // namespace adiagate
