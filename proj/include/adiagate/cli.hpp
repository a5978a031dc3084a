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

// Command implementations behind the adiagate executable. Each command
// returns its artifact as text so it can be written to a file, printed, or
// compared in tests.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adiagate/circuits.hpp"

namespace adiagate::cli {

enum ExitCode : int { kOk = 0, kParseError = 2, kValidationError = 3, kRuntimeError = 4 };

struct RunConfig {
  double runtime_T = 500.0;
  long steps = 0;  // 0 selects 200 slices per unit time
  double theta_f = 3.14159265358979323846;
  std::uint64_t seed = 0;
  int samples = 101;
  std::string output_path;  // empty writes to stdout
  bool wall_clock = false;  // fill wall_ms in sweeps (breaks byte-identical output)
};

/// Throws ValidationError for runtime < 0, steps < 0, samples < 2, or theta_f
/// outside [0, π].
void validate(const RunConfig& config);
long resolved_steps(const RunConfig& config, double T);

/// Gate selected on the command line. Without a name, a rotation (or a
/// controlled rotation with `controlled`) about `axis` by `phi`.
struct GateDescription {
  std::optional<std::string> name;
  std::string axis = "x";  // "x" | "y" | "z" | "fx,fy,fz"
  double phi = 3.14159265358979323846;
  bool controlled = false;
  std::string input;  // bit string over the gate's qubits, or "random"; empty means all zeros
  double noise_strength = 0.0;
  int trials = 200;
};

/// Parses an --axis value, appending a warning when a vector is renormalized
/// by more than 1e-6.
BlochAxis parse_axis(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// "50,100,200,400" -> {50, 100, 200, 400}
std::vector<double> parse_sweep_list(const std::string& text);

/// The gate on its own register: rotations use (target 0, ancilla 1) and
/// controlled rotations use (control 0, target 1, ancilla 2).
GateSpec build_gate(const GateDescription& gate, double theta_f, std::vector<std::string>* warnings = nullptr);

/// Gate register (ancilla included, in |0>) built from the --input text.
QuantumState gate_input(const GateSpec& gate, const std::string& input, std::uint64_t seed);

std::string cmd_gate(const RunConfig& config, const GateDescription& gate);
std::string cmd_sweep(const RunConfig& config, const GateDescription& gate, const std::vector<double>& runtimes);
std::string cmd_trajectory(const RunConfig& config, const GateDescription& gate, bool adiabatic_limit = false);
std::string cmd_circuit(const RunConfig& config, const std::filesystem::path& circuit_path);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adiagate::cli
