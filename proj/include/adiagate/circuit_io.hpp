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

// JSON circuit files (schema version "1"):
//
//   {"schema_version":"1","n_qubits":N,"gates":[gate, ...]}
//
//   gate := {"type":"named","name":S,"target":I[,"control":I][,"phi":F][,"axis":A]}
//         | {"type":"rot","axis":A,"phi":F,"target":I}
//         | {"type":"crot","axis":A,"phi":F,"control":I,"target":I}
//   A    := [fx,fy,fz] | "x" | "y" | "z"
//
// "schema_version" may be omitted. The ancilla is implicit: qubit N.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "adiagate/circuits.hpp"

namespace adiagate {

/// The document is not valid JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The JSON is well formed but violates the schema; `path()` names the field,
/// e.g. "gates[0].target".
class SchemaError : public ValidationError {
 public:
  SchemaError(std::string path, const std::string& what);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

CircuitIR parse_circuit(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
CircuitIR parse_circuit_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
CircuitIR circuit_from_json(const nlohmann::json& doc, std::vector<std::string>* warnings = nullptr);

/// Parses an axis value: a 3-vector (renormalized, with a warning when its
/// length is off by more than 1e-6) or one of "x", "y", "z".
BlochAxis axis_from_json(const nlohmann::json& value, const std::string& path,
                         std::vector<std::string>* warnings = nullptr);

nlohmann::json to_json(const BlochAxis& axis);
/// Gate record in "rot"/"crot" form.
nlohmann::json to_json(const GateSpec& gate);
nlohmann::json to_json(const CircuitIR& circuit);
nlohmann::json to_json(const QuantumState& state);  // [[re, im], ...]
nlohmann::json to_json(const ExecutionReport& report);

}  // namespace adiagate
