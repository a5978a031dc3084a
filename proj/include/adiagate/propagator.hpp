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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adiagate/core.hpp"
#include "adiagate/hamiltonians.hpp"

namespace adiagate {

struct Trajectory {
  std::vector<double> sample_times;  // ascending, first 0, last T
  std::vector<QuantumState> states;  // one per sample time
  QuantumState final_state;
};

/// Piecewise-constant midpoint propagation: slice k applies
/// exp(-i H(t_k + dt/2) dt). Requires steps >= 1 and samples >= 2; samples
/// land on slice boundaries, so interior sample times are rounded to the
/// nearest boundary. T may be shorter than h.runtime().
Trajectory evolve(const TimeDependentHamiltonian& h, const QuantumState& psi0, double T, long steps, int samples = 2);

/// As above, with h acting on `targets` of a larger register.
Trajectory evolve(const TimeDependentHamiltonian& h, std::span<const int> targets, const QuantumState& psi0,
                  double T, long steps, int samples = 2);

struct GapProfile {
  std::vector<double> times;
  std::vector<RealVector> eigenvalue_lists;  // ascending per time
  std::vector<double> within_branch_gap;
};

/// Spectra at  evenly spaced times in [0, T]. The within-branch gap
/// is (lowest positive eigenvalue) - (highest negative eigenvalue); for
/// spectra without a sign change it falls back to the distance from the
/// ground level to the next level.
GapProfile gap_profile(const TimeDependentHamiltonian& h, double T, int samples);

struct PhaseRecord {
  double dynamic_phase = 0.0;    // ∫_0^T E_0(t) dt
  double geometric_phase = 0.0;  // in (-π, π]
  std::string branch_label;
};

/// Dynamic and open-path geometric phase of the instantaneous ground state,
/// sampled at steps + 1 evenly spaced times. The eigenvector gauge is fixed
/// sample to sample by making each overlap with the previous sample real and
/// positive; the geometric phase is
///   arg<g_0|g_N> - Σ_k arg<g_k|g_{k+1}>.
/// When <g_0|g_N> vanishes (orthogonal endpoints) only the connection sum is
/// reported. Throws ValidationError at the first sample whose ground level is
/// degenerate.
PhaseRecord phases(const TimeDependentHamiltonian& h_branch, double T, long steps, std::string branch_label = {});

/// Weight of `state` outside the ground space of `h_final` on `targets`.
double ground_space_leakage(const HermitianOperator& h_final, std::span<const int> targets, const Vector& state);

/// 1 - |projection of the evolved state onto the ground space of h(T)|^2.
double diabatic_error(const TimeDependentHamiltonian& h, const QuantumState& psi0, double T, long steps);
double diabatic_error(const TimeDependentHamiltonian& h, std::span<const int> targets, const QuantumState& psi0,
                      double T, long steps);

using BlochVector = std::array<double, 3>;

/// (<σx>, <σy>, <σz>) for every sample of a single-qubit trajectory.
std::vector<BlochVector> bloch_trajectory(const Trajectory& trajectory);
BlochVector bloch_vector(const QuantumState& qubit);

/// Bloch vectors of the instantaneous ground state of the branch Hamiltonian
/// at `samples` evenly spaced times: the path an infinitely slow evolution
/// follows. Finite-T runs stay within about θ_f/T of it.
std::vector<BlochVector> adiabatic_bloch_path(double phi, const LinearSchedule& schedule, int samples);

struct DephasingOptions {
  double kick_strength = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
};

/// Trial-averaged density matrix of an evolution interleaved with random
/// phase kicks exp(-i ξ D) after every slice, ξ ~ N(0, kick_strength·√dt),
/// where D = h.branch_difference(). This is an illustrative noise model, not
/// a physical decoherence model.
Matrix dephasing_demo(const TimeDependentHamiltonian& h, const QuantumState& psi0, double T, long steps,
                      const DephasingOptions& options);

/// max |(P_+ ρ P_-)_{ij}| with P_± = (1 ± D)/2 for a branch difference D.
double inter_branch_coherence(const Matrix& rho, const Matrix& branch_difference);

struct BranchOutcome {
  double weight = 0.0;                // ||(P_j ⊗ 1) Ψ||^2
  double ground_state_fidelity = 0.0; // <g_j| ρ_target,j |g_j>
};

/// Splits a final state of a projector-controlled evolution into its branches
/// and scores each branch's target subsystem against the ground state of the
/// matching final Hamiltonian. Branches with zero weight report fidelity 0.
std::vector<BranchOutcome> analyze_branches(const ControlledEvolutionSpec& spec, const QuantumState& final_state);

}  // namespace adiagate
