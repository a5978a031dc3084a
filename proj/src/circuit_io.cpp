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

#include "adiagate/circuit_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace adiagate {

using nlohmann::json;

namespace {

std::string at(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at(path, key), "missing required field");
  return *it;
}

int require_index(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_integer()) throw SchemaError(at(path, key), "expected an integer");
  const auto i = v.get<long long>();
  if (i < 0 || i > kMaxQubits) throw SchemaError(at(path, key), "qubit index out of range");
  return static_cast<int>(i);
}

double require_number(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number()) throw SchemaError(at(path, key), "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(at(path, key), "expected a finite number");
  return d;
}

void allow_only(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  for (const auto& [k, _] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) throw SchemaError(at(path, k), "unknown field");
  }
}

GateSpec gate_from_json(const json& g, const std::string& path, int n_qubits, std::vector<std::string>* warnings) {
  if (!g.is_object()) throw SchemaError(path, "gate must be an object");
  const json& type = require(g, "type", path);
  if (!type.is_string()) throw SchemaError(at(path, "type"), "expected a string");
  const std::string kind = type.get<std::string>();

  GateSpec spec;
  if (kind == "named") {
    allow_only(g, {"type", "name", "target", "control", "phi", "axis"}, path);
    const json& name = require(g, "name", path);
    if (!name.is_string()) throw SchemaError(at(path, "name"), "expected a string");
    NamedGate req;
    req.name = name.get<std::string>();
    req.target = require_index(g, "target", path);
    if (g.contains("control")) req.control = require_index(g, "control", path);
    if (g.contains("phi")) req.phi = require_number(g, "phi", path);
    if (g.contains("axis")) req.axis = axis_from_json(g["axis"], at(path, "axis"), warnings);
    if (req.target >= n_qubits) throw SchemaError(at(path, "target"), "index must be < n_qubits");
    if (req.control && *req.control >= n_qubits) throw SchemaError(at(path, "control"), "index must be < n_qubits");
    try {
      spec = compile_named(req, n_qubits);
    } catch (const ValidationError& e) {
      throw SchemaError(at(path, "name"), e.what());
    }
  } else if (kind == "rot" || kind == "crot") {
    if (kind == "rot") {
      allow_only(g, {"type", "axis", "phi", "target"}, path);
    } else {
      allow_only(g, {"type", "axis", "phi", "control", "target"}, path);
      spec.kind = GateKind::controlled_rotation;
      spec.control = require_index(g, "control", path);
    }
    spec.axis = axis_from_json(require(g, "axis", path), at(path, "axis"), warnings);
    spec.phi = require_number(g, "phi", path);
    spec.target = require_index(g, "target", path);
    spec.ancilla = n_qubits;
  } else {
    throw SchemaError(at(path, "type"), "unknown gate type '" + kind + "'");
  }

  if (spec.target >= n_qubits) throw SchemaError(at(path, "target"), "index must be < n_qubits");
  if (spec.control) {
    if (*spec.control >= n_qubits) throw SchemaError(at(path, "control"), "index must be < n_qubits");
    if (*spec.control == spec.target) throw SchemaError(at(path, "control"), "control must differ from target");
  }
  return spec;
}

}  // namespace

SchemaError::SchemaError(std::string path, const std::string& what)
    : ValidationError(path + ": " + what), path_(std::move(path)) {}

BlochAxis axis_from_json(const json& value, const std::string& path, std::vector<std::string>* warnings) {
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s == "x") return BlochAxis::x();
    if (s == "y") return BlochAxis::y();
    if (s == "z") return BlochAxis::z();
    throw SchemaError(path, "named axis must be \"x\", \"y\" or \"z\"");
  }
  if (!value.is_array() || value.size() != 3) throw SchemaError(path, "axis must be a 3-vector or \"x\"|\"y\"|\"z\"");
  double c[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!value[i].is_number()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a number");
    c[i] = value[i].get<double>();
  }
  const double n2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
  if (!std::isfinite(n2) || n2 == 0.0) throw SchemaError(path, "axis must be a nonzero finite vector");
  // Exactly-unit input is kept bit for bit so written circuits read back unchanged.
  if (std::abs(n2 - 1.0) <= tolerances().algebraic) return BlochAxis(c[0], c[1], c[2]);
  if (warnings && std::abs(std::sqrt(n2) - 1.0) > 1e-6) {
    std::ostringstream os;
    os << path << ": axis has length " << std::sqrt(n2) << ", normalized";
    warnings->push_back(os.str());
  }
  return BlochAxis::normalized(c[0], c[1], c[2]);
}

CircuitIR circuit_from_json(const json& doc, std::vector<std::string>* warnings) {
  if (!doc.is_object()) throw SchemaError("", "top level must be an object");
  allow_only(doc, {"schema_version", "n_qubits", "gates"}, "");
  if (doc.contains("schema_version")) {
    const json& v = doc["schema_version"];
    if (!v.is_string() || v.get<std::string>() != "1") throw SchemaError("schema_version", "expected \"1\"");
  }
  const json& n = require(doc, "n_qubits", "");
  if (!n.is_number_integer()) throw SchemaError("n_qubits", "expected an integer");
  const auto n_qubits = n.get<long long>();
  if (n_qubits < 1 || n_qubits >= kMaxQubits) {
    throw SchemaError("n_qubits", "must lie in [1, " + std::to_string(kMaxQubits - 1) + "]");
  }
  const json& gates = require(doc, "gates", "");
  if (!gates.is_array()) throw SchemaError("gates", "expected an array");

  CircuitIR circuit;
  circuit.n_qubits = static_cast<int>(n_qubits);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    circuit.gates.push_back(gate_from_json(gates[i], "gates[" + std::to_string(i) + "]", circuit.n_qubits, warnings));
  }
  validate(circuit);
  return circuit;
}

CircuitIR parse_circuit_text(const std::string& text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return circuit_from_json(doc, warnings);
}

CircuitIR parse_circuit(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit_text(buf.str(), warnings);
}

json to_json(const BlochAxis& axis) { return json::array({axis.nx(), axis.ny(), axis.nz()}); }

json to_json(const GateSpec& gate) {
  json g;
  if (gate.kind == GateKind::rotation) {
    g["type"] = "rot";
  } else {
    g["type"] = "crot";
    g["control"] = *gate.control;
  }
  g["axis"] = to_json(gate.axis);
  g["phi"] = gate.phi;
  g["target"] = gate.target;
  return g;
}

json to_json(const CircuitIR& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates) gates.push_back(to_json(g));
  return json{{"schema_version", "1"}, {"n_qubits", circuit.n_qubits}, {"gates", std::move(gates)}};
}

json to_json(const QuantumState& state) {
  json amps = json::array();
  for (std::size_t i = 0; i < state.dim(); ++i) amps.push_back(json::array({state[i].real(), state[i].imag()}));
  return amps;
}

json to_json(const ExecutionReport& report) {
  return json{{"final_state", to_json(report.final_state)},
              {"per_gate_fidelity", report.per_gate_fidelity},
              {"ancilla_outcome_probabilities", report.ancilla_outcome_probabilities},
              {"reset_residuals", report.reset_residuals},
              {"oracle_fidelity", report.oracle_fidelity},
              {"total_evolution_time", report.total_evolution_time},
              {"ancilla_count", report.ancilla_count},
              {"gate_count", report.per_gate_fidelity.size()}};
}

}  // namespace adiagate
