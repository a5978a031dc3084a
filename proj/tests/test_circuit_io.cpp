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


#include <filesystem>
#include <fstream>

#include "adiagate/circuit_io.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace adiagate;
using namespace testing;

namespace {

std::string schema_path_of(const std::string& text) {
  try {
    parse_circuit_text(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("named gates are expanded") {
  const auto c = parse_circuit_text(
      R"({"n_qubits":2,"gates":[{"type":"named","name":"H","target":0},{"type":"named","name":"CNOT","control":0,"target":1}]})");
  CHECK(c.n_qubits == 2);
  CHECK(c.size() == 2);
  CHECK(c.gates[1].kind == GateKind::controlled_rotation);
  CHECK(c.gates[0].ancilla == 2);
  CHECK(max_abs(ideal_gate_unitary(c.gates[0]) - hadamard()) < 1e-12);
}

TEST_CASE("empty gate list") {
  const auto c = parse_circuit_text(R"({"schema_version":"1","n_qubits":3,"gates":[]})");
  CHECK(c.size() == 0);
}

TEST_CASE("rotation records") {
  const auto c = parse_circuit_text(
      R"({"schema_version":"1","n_qubits":2,"gates":[{"type":"rot","axis":"y","phi":0.5,"target":1},)"
      R"({"type":"crot","axis":[0,0,1],"phi":-1.25,"control":1,"target":0}]})");
  CHECK(c.gates[0].axis.ny() == 1.0);
  CHECK(c.gates[0].phi == 0.5);
  CHECK(c.gates[1].control == 1);
  CHECK(c.gates[1].phi == -1.25);
}

TEST_CASE("schema violations carry a field path") {
  CHECK(schema_path_of(R"({"n_qubits":2,"gates":[{"type":"named","name":"NOT","target":2}]})") == "gates[0].target");
  CHECK(schema_path_of(R"({"n_qubits":2,"gates":[{"type":"named","name":"NOT","target":0},)"
                       R"({"type":"crot","axis":"x","phi":1,"control":5,"target":0}]})") == "gates[1].control");
  CHECK(schema_path_of(R"({"n_qubits":2,"gates":[{"type":"rot","axis":"w","phi":1,"target":0}]})") == "gates[0].axis");
  CHECK(schema_path_of(R"({"n_qubits":2,"gates":[{"type":"rot","axis":"x","target":0}]})") == "gates[0].phi");
  CHECK(schema_path_of(R"({"n_qubits":2,"gates":[{"type":"swap","target":0}]})") == "gates[0].type");
  CHECK(schema_path_of(R"({"n_qubits":2,"gates":[],"extra":1})") == "extra");
  CHECK(schema_path_of(R"({"schema_version":"2","n_qubits":2,"gates":[]})") == "schema_version");
  CHECK(schema_path_of(R"({"gates":[]})") == "n_qubits");
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(parse_circuit_text("{\"n_qubits\": 2,"), ParseError);
  CHECK_THROWS_AS(parse_circuit("/nonexistent/circuit.json"), ParseError);
}

TEST_CASE("non-unit axis vectors are normalized with a warning") {
  std::vector<std::string> warnings;
  const auto c =
      parse_circuit_text(R"({"n_qubits":1,"gates":[{"type":"rot","axis":[2,0,0],"phi":1,"target":0}]})", &warnings);
  CHECK(c.gates[0].axis.nx() == 1.0);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("gates[0].axis") != std::string::npos);

  warnings.clear();
  parse_circuit_text(R"({"n_qubits":1,"gates":[{"type":"rot","axis":[0.6,0.8,0],"phi":1,"target":0}]})", &warnings);
  CHECK(warnings.empty());
}

TEST_CASE("emitted circuits round-trip without loss") {
  CircuitIR c;
  c.n_qubits = 3;
  for (int i = 0; i < 6; ++i) {
    GateSpec g;
    g.axis = random_axis();
    g.phi = uniform(-kPi, kPi);
    g.target = i % 3;
    g.ancilla = 3;
    if (i % 2) {
      g.kind = GateKind::controlled_rotation;
      g.control = (i + 1) % 3;
    }
    c.gates.push_back(g);
  }
  const std::string text = to_json(c).dump();
  const CircuitIR back = parse_circuit_text(text);
  REQUIRE(back.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(back.gates[i].phi == c.gates[i].phi);
    CHECK(back.gates[i].axis.nx() == c.gates[i].axis.nx());
    CHECK(back.gates[i].axis.ny() == c.gates[i].axis.ny());
    CHECK(back.gates[i].axis.nz() == c.gates[i].axis.nz());
    CHECK(back.gates[i].control == c.gates[i].control);
  }
  CHECK(to_json(back).dump() == text);
}

TEST_CASE("state serialization keeps every bit") {
  const auto psi = random_state(3);
  const auto j = nlohmann::json::parse(to_json(psi).dump());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    CHECK(j[i][0].get<double>() == psi[i].real());
    CHECK(j[i][1].get<double>() == psi[i].imag());
  }
}

TEST_CASE("reading from a file") {
  const auto path = std::filesystem::temp_directory_path() / "adiagate_io_test.json";
  std::ofstream(path) << R"({"n_qubits":1,"gates":[{"type":"named","name":"X","target":0}]})";
  CHECK(parse_circuit(path).size() == 1);
  std::filesystem::remove(path);
}
