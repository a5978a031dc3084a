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

// Adiabatic gates and circuits: compiling gates to controlled adiabatic
// evolutions, running them with a single reusable ancilla, and checking the
// result against an exact gate-model reference.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adiagate/core.hpp"
#include "adiagate/hamiltonians.hpp"

namespace adiagate {

enum class GateKind { rotation, controlled_rotation };

std::string_view to_string(GateKind kind);

/// Rotation by phi about `axis` on `target`, optionally controlled.
struct GateSpec {
  GateKind kind = GateKind::rotation;
  BlochAxis axis = BlochAxis::z();
  double phi = 0.0;
  double theta_f = 3.14159265358979323846;
  int target = 0;
  std::optional<int> control;
  int ancilla = 1;
};

/// Throws ValidationError for overlapping qubits, a missing control on a
/// controlled rotation, a control on a plain rotation, or theta_f outside
/// [0, π].
void validate(const GateSpec& gate);

struct CircuitIR {
  int n_qubits = 0;  // register size, ancilla excluded
  std::vector<GateSpec> gates;

  std::size_t size() const { return gates.size(); }
};

/// Indices in range and every gate using ancilla index n_qubits.
void validate(const CircuitIR& circuit);

/// |n><n| + e^{iφ}|n⊥><n⊥| for rotations (2x2); for controlled rotations the
/// identity on the control-|0> block and the rotation on the control-|1>
/// block, ordered (control, target).
Matrix ideal_gate_unitary(const GateSpec& gate);

/// Named gate request. Recognized names: NOT, X, H, CNOT, CPHASE, RZ, RN.
struct NamedGate {
  std::string name;
  int target = 0;
  std::optional<int> control;
  std::optional<double> phi;       // CPHASE, RZ, RN
  std::optional<BlochAxis> axis;   // RN
};

/// Expands a named gate to a rotation spec whose ideal unitary matches the
/// textbook gate up to a global phase. The Hadamard uses the axis
/// (x + z)/√2 with φ = π, which equals H exactly.
GateSpec compile_named(const NamedGate& gate, int ancilla);

struct AncillaStatistics {
  double p0 = 0.0;
  double p1 = 0.0;
};

struct GateRun {
  QuantumState state;  // full register including the ancilla
  AncillaStatistics ancilla;
};

/// Probability that qubit `ancilla` reads 1.
double excited_probability(const Vector& state, int ancilla);

/// Amplitudes with qubit `ancilla` fixed to `value` and removed (not
/// renormalized).
Vector ancilla_slice(const Vector& state, int ancilla, int value);

/// Runs a single-qubit rotation gate on (target, ancilla) of `reg`. The
/// ancilla must be |0> within 1e-9.
GateRun run_adiabatic_gate(const GateSpec& gate, const QuantumState& reg, double T, long steps);

/// Runs a controlled rotation on (control, target, ancilla) of `reg`.
GateRun run_controlled_gate(const GateSpec& gate, const QuantumState& reg, double T, long steps);

/// Dispatches on gate.kind.
GateRun run_gate(const GateSpec& gate, const QuantumState& reg, double T, long steps);

/// Adiabatic-limit final state for `reg` (ancilla in |0>):
///   cos(θ_f/2) reg + sin(θ_f/2) (U reg with the ancilla flipped to |1>)
/// where U is the ideal gate on its qubits.
QuantumState adiabatic_target_state(const GateSpec& gate, const QuantumState& reg);

/// Raised when the ancilla still carries a |0> component.
class AncillaResetError : public ValidationError {
 public:
  AncillaResetError(double residual, double linear_entropy);
  double residual() const { return residual_; }
  double linear_entropy() const { return linear_entropy_; }

 private:
  double residual_;
  double linear_entropy_;
};

inline constexpr double kDefaultResetTolerance = 1e-4;

struct ResetResult {
  QuantumState state;
  double residual = 0.0;  // discarded |0>-population of the ancilla
};

/// Relabels ancilla |1> as |0>, dropping the residual |0> component. Throws
/// AncillaResetError when that residual exceeds `tolerance`.
ResetResult reset_ancilla(const QuantumState& state, int ancilla, double tolerance = kDefaultResetTolerance);

/// Exact sequential application of the ideal unitaries.
QuantumState gate_model_oracle(const CircuitIR& circuit, const QuantumState& input);

struct ExecutionReport {
  QuantumState final_state;  // register only, ancilla removed
  std::vector<double> per_gate_fidelity;
  std::vector<double> ancilla_outcome_probabilities;  // P(ancilla = 1) per gate
  std::vector<double> reset_residuals;
  double oracle_fidelity = 1.0;
  double total_evolution_time = 0.0;
  int ancilla_count = 0;  // distinct ancilla qubits used
};

/// Raised with the index of the gate that failed.
class CircuitError : public Error {
 public:
  CircuitError(std::size_t gate_index, const std::string& what);
  std::size_t gate_index() const { return gate_index_; }

 private:
  std::size_t gate_index_;
};

/// Runs the circuit from |0...0> as back-to-back adiabatic gates sharing one
/// ancilla, resetting it after every gate.
ExecutionReport execute_circuit(const CircuitIR& circuit, double T_per_gate, long steps_per_gate);

}  // namespace adiagate
