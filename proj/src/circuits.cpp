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

#include "adiagate/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "adiagate/kernels.hpp"
#include "adiagate/propagator.hpp"

namespace adiagate {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAncillaPrepTolerance = 1e-9;

std::size_t bit_of(int qubit, int n_qubits) { return std::size_t{1} << (n_qubits - 1 - qubit); }

void check_register(const GateSpec& gate, const QuantumState& reg) {
  validate(gate);
  const int n = reg.n_qubits();
  auto in_range = [n](int q) { return q >= 0 && q < n; };
  if (!in_range(gate.target) || !in_range(gate.ancilla) || (gate.control && !in_range(*gate.control))) {
    throw DimensionError("gate references a qubit outside the register");
  }
  const double p1 = excited_probability(reg.amplitudes(), gate.ancilla);
  if (p1 > kAncillaPrepTolerance) {
    std::ostringstream os;
    os << "ancilla qubit " << gate.ancilla << " is not prepared in |0> (P(1) = " << p1 << ")";
    throw ValidationError(os.str());
  }
}

GateRun finish(const QuantumState& out, int ancilla) {
  const double p1 = excited_probability(out.amplitudes(), ancilla);
  return GateRun{out, AncillaStatistics{std::clamp(1.0 - p1, 0.0, 1.0), p1}};
}

Vector apply_ideal(const GateSpec& gate, const Vector& reg) {
  const Matrix u = ideal_gate_unitary(gate);
  if (gate.kind == GateKind::controlled_rotation) {
    const int qubits[] = {*gate.control, gate.target};
    return apply_local(u, qubits, reg);
  }
  const int qubits[] = {gate.target};
  return apply_local(u, qubits, reg);
}

}  // namespace

std::string_view to_string(GateKind kind) {
  return kind == GateKind::rotation ? "rotation" : "controlled-rotation";
}

void validate(const GateSpec& gate) {
  if (!(gate.theta_f >= 0.0 && gate.theta_f <= kPi)) throw ValidationError("theta_f must lie in [0, pi]");
  if (!std::isfinite(gate.phi)) throw ValidationError("phi must be finite");
  if (gate.target == gate.ancilla) throw ValidationError("target and ancilla must differ");
  if (gate.kind == GateKind::controlled_rotation) {
    if (!gate.control) throw ValidationError("controlled rotation needs a control qubit");
    if (*gate.control == gate.target || *gate.control == gate.ancilla) {
      throw ValidationError("control must differ from target and ancilla");
    }
  } else if (gate.control) {
    throw ValidationError("plain rotation must not have a control qubit");
  }
}

void validate(const CircuitIR& circuit) {
  if (circuit.n_qubits < 1 || circuit.n_qubits >= kMaxQubits) {
    throw ValidationError("register size must lie in [1, " + std::to_string(kMaxQubits - 1) + "]");
  }
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const GateSpec& g = circuit.gates[i];
    try {
      validate(g);
      auto in_range = [&](int q) { return q >= 0 && q < circuit.n_qubits; };
      if (!in_range(g.target)) throw ValidationError("target index out of range");
      if (g.control && !in_range(*g.control)) throw ValidationError("control index out of range");
      if (g.ancilla != circuit.n_qubits) throw ValidationError("ancilla must be qubit n_qubits");
    } catch (const ValidationError& e) {
      throw CircuitError(i, e.what());
    }
  }
}

Matrix ideal_gate_unitary(const GateSpec& gate) {
  validate(gate);
  const auto [up, down] = axis_states(gate.axis);
  const Matrix rot = up.amplitudes() * up.amplitudes().adjoint() +
                     std::polar(1.0, gate.phi) * down.amplitudes() * down.amplitudes().adjoint();
  if (gate.kind == GateKind::rotation) return rot;
  Matrix u = Matrix::Identity(4, 4);
  u.bottomRightCorner(2, 2) = rot;
  return u;
}

GateSpec compile_named(const NamedGate& gate, int ancilla) {
  GateSpec g;
  g.target = gate.target;
  g.ancilla = ancilla;
  const std::string& name = gate.name;
  auto want_phi = [&] {
    if (!gate.phi) throw ValidationError(name + " needs an angle phi");
    return *gate.phi;
  };
  if (name == "NOT" || name == "X") {
    g.axis = BlochAxis::x();
    g.phi = kPi;
  } else if (name == "H") {
    g.axis = BlochAxis::normalized(1.0, 0.0, 1.0);
    g.phi = kPi;
  } else if (name == "RZ") {
    g.axis = BlochAxis::z();
    g.phi = want_phi();
  } else if (name == "RN") {
    if (!gate.axis) throw ValidationError("RN needs an axis");
    g.axis = *gate.axis;
    g.phi = want_phi();
  } else if (name == "CNOT") {
    g.kind = GateKind::controlled_rotation;
    g.axis = BlochAxis::x();
    g.phi = kPi;
  } else if (name == "CPHASE") {
    g.kind = GateKind::controlled_rotation;
    g.axis = BlochAxis::z();
    g.phi = want_phi();
  } else {
    throw ValidationError("unknown gate name '" + name + "'");
  }
  if (g.kind == GateKind::controlled_rotation) {
    if (!gate.control) throw ValidationError(name + " needs a control qubit");
    g.control = gate.control;
  } else if (gate.control) {
    throw ValidationError(name + " does not take a control qubit");
  }
  validate(g);
  return g;
}

double excited_probability(const Vector& state, int ancilla) {
  const int n = qubits_for_dim(static_cast<std::size_t>(state.size()));
  if (ancilla < 0 || ancilla >= n) throw DimensionError("ancilla index out of range");
  const std::size_t bit = bit_of(ancilla, n);
  double p = 0.0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(state.size()); ++i) {
    if (i & bit) p += std::norm(state[static_cast<Eigen::Index>(i)]);
  }
  return p;
}

Vector ancilla_slice(const Vector& state, int ancilla, int value) {
  const int n = qubits_for_dim(static_cast<std::size_t>(state.size()));
  if (ancilla < 0 || ancilla >= n) throw DimensionError("ancilla index out of range");
  if (n < 2) throw DimensionError("register has no qubits besides the ancilla");
  const std::size_t bit = bit_of(ancilla, n);
  const std::size_t low = bit - 1;
  Vector out(state.size() / 2);
  for (std::size_t r = 0; r < static_cast<std::size_t>(out.size()); ++r) {
    const std::size_t full = ((r & ~low) << 1) | (r & low) | (value ? bit : 0);
    out[static_cast<Eigen::Index>(r)] = state[static_cast<Eigen::Index>(full)];
  }
  return out;
}

GateRun run_adiabatic_gate(const GateSpec& gate, const QuantumState& reg, double T, long steps) {
  if (gate.kind != GateKind::rotation) throw ValidationError("run_adiabatic_gate expects a plain rotation");
  check_register(gate, reg);
  const LinearSchedule schedule(gate.theta_f, T, steps);
  const auto h = single_qubit_gate_hamiltonian(gate.axis, gate.phi, schedule);
  const int targets[] = {gate.target, gate.ancilla};
  return finish(evolve(h, targets, reg, T, steps).final_state, gate.ancilla);
}

GateRun run_controlled_gate(const GateSpec& gate, const QuantumState& reg, double T, long steps) {
  if (gate.kind != GateKind::controlled_rotation) {
    throw ValidationError("run_controlled_gate expects a controlled rotation");
  }
  check_register(gate, reg);
  const LinearSchedule schedule(gate.theta_f, T, steps);
  const auto h = controlled_gate_hamiltonian(gate.axis, gate.phi, schedule);
  const int targets[] = {*gate.control, gate.target, gate.ancilla};
  return finish(evolve(h, targets, reg, T, steps).final_state, gate.ancilla);
}

GateRun run_gate(const GateSpec& gate, const QuantumState& reg, double T, long steps) {
  return gate.kind == GateKind::rotation ? run_adiabatic_gate(gate, reg, T, steps)
                                         : run_controlled_gate(gate, reg, T, steps);
}

QuantumState adiabatic_target_state(const GateSpec& gate, const QuantumState& reg) {
  check_register(gate, reg);
  const Vector rotated = apply_ideal(gate, reg.amplitudes());
  const int flip[] = {gate.ancilla};
  const Vector excited = apply_local(pauli::x(), flip, rotated);
  const double half = gate.theta_f / 2.0;
  return QuantumState(std::cos(half) * reg.amplitudes() + std::sin(half) * excited, 1e-9);
}

namespace {

std::string reset_message(double residual, double entropy) {
  std::ostringstream os;
  os << "ancilla is not separable in |1>: residual |0> population " << residual << ", linear entropy " << entropy;
  return os.str();
}

}  // namespace

AncillaResetError::AncillaResetError(double residual, double linear_entropy)
    : ValidationError(reset_message(residual, linear_entropy)), residual_(residual), linear_entropy_(linear_entropy) {}

ResetResult reset_ancilla(const QuantumState& state, int ancilla, double tolerance) {
  const Vector zero = ancilla_slice(state.amplitudes(), ancilla, 0);
  const Vector one = ancilla_slice(state.amplitudes(), ancilla, 1);
  const double residual = zero.squaredNorm();
  if (residual > tolerance) {
    const double p1 = one.squaredNorm();
    const double coherence = std::norm(one.dot(zero));
    const double entropy = std::max(0.0, 1.0 - (residual * residual + p1 * p1 + 2.0 * coherence));
    throw AncillaResetError(residual, entropy);
  }
  const int n = state.n_qubits();
  const std::size_t bit = bit_of(ancilla, n);
  const std::size_t low = bit - 1;
  Vector out = Vector::Zero(static_cast<Eigen::Index>(state.dim()));
  for (std::size_t r = 0; r < static_cast<std::size_t>(one.size()); ++r) {
    out[static_cast<Eigen::Index>(((r & ~low) << 1) | (r & low))] = one[static_cast<Eigen::Index>(r)];
  }
  if (residual > 0.0) out /= std::sqrt(1.0 - residual);
  return ResetResult{QuantumState(std::move(out), 1e-9), residual};
}

QuantumState gate_model_oracle(const CircuitIR& circuit, const QuantumState& input) {
  validate(circuit);
  if (input.n_qubits() != circuit.n_qubits) throw DimensionError("input register size does not match the circuit");
  Vector v = input.amplitudes();
  for (const auto& g : circuit.gates) v = apply_ideal(g, v);
  return QuantumState(std::move(v), 1e-9);
}

CircuitError::CircuitError(std::size_t gate_index, const std::string& what)
    : Error("gate " + std::to_string(gate_index) + ": " + what), gate_index_(gate_index) {}

ExecutionReport execute_circuit(const CircuitIR& circuit, double T_per_gate, long steps_per_gate) {
  validate(circuit);
  const int n = circuit.n_qubits;
  const int ancilla = n;
  QuantumState full = QuantumState::zeros(n + 1);
  ExecutionReport report{QuantumState::zeros(n), {}, {}, {}, 1.0, 0.0, 0};
  std::set<int> ancillas;

  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const GateSpec& g = circuit.gates[i];
    try {
      const Vector before = ancilla_slice(full.amplitudes(), ancilla, 0);
      const GateRun run = run_gate(g, full, T_per_gate, steps_per_gate);
      ancillas.insert(g.ancilla);
      ResetResult reset = reset_ancilla(run.state, ancilla);
      full = std::move(reset.state);
      const Vector after = ancilla_slice(full.amplitudes(), ancilla, 0);
      report.per_gate_fidelity.push_back(fidelity(apply_ideal(g, before), after));
      report.ancilla_outcome_probabilities.push_back(run.ancilla.p1);
      report.reset_residuals.push_back(reset.residual);
    } catch (const CircuitError&) {
      throw;
    } catch (const Error& e) {
      throw CircuitError(i, e.what());
    }
  }
  report.final_state = QuantumState(ancilla_slice(full.amplitudes(), ancilla, 0), 1e-9);
  report.oracle_fidelity = fidelity(report.final_state, gate_model_oracle(circuit, QuantumState::zeros(n)));
  report.total_evolution_time = static_cast<double>(circuit.size()) * T_per_gate;
  report.ancilla_count = static_cast<int>(ancillas.size());
  return report;
}

}  // namespace adiagate
