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

#include "adiagate/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "adiagate/circuit_io.hpp"
#include "adiagate/propagator.hpp"
#include "../parallel.hpp"

namespace adiagate::cli {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json config_json(const RunConfig& config, long steps) {
  return json{{"runtime", config.runtime_T}, {"steps", steps},       {"theta_f", config.theta_f},
              {"seed", config.seed},         {"samples", config.samples}};
}

std::vector<int> gate_qubits(const GateSpec& gate) {
  if (gate.control) return {*gate.control, gate.target, gate.ancilla};
  return {gate.target, gate.ancilla};
}

TimeDependentHamiltonian gate_hamiltonian(const GateSpec& gate, const LinearSchedule& schedule) {
  return gate.kind == GateKind::rotation ? single_qubit_gate_hamiltonian(gate.axis, gate.phi, schedule)
                                         : controlled_gate_hamiltonian(gate.axis, gate.phi, schedule);
}

struct GateOutcome {
  QuantumState final_state;
  AncillaStatistics ancilla;
  double diabatic_error;
  double fidelity;
};

GateOutcome simulate(const GateSpec& gate, const QuantumState& input, double T, long steps) {
  const LinearSchedule schedule(gate.theta_f, T, steps);
  const GateRun run = run_gate(gate, input, T, steps);
  const auto h = gate_hamiltonian(gate, schedule);
  const auto qubits = gate_qubits(gate);
  const double leakage = ground_space_leakage(h(T), qubits, run.state.amplitudes());
  const double fid = fidelity(run.state, adiabatic_target_state(gate, input));
  return {run.state, run.ancilla, leakage, fid};
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.runtime_T >= 0.0) || !std::isfinite(config.runtime_T)) {
    throw ValidationError("--runtime must be finite and >= 0");
  }
  if (config.steps < 0) throw ValidationError("--steps must be >= 1 (or 0 for the default)");
  if (config.samples < 2) throw ValidationError("--samples must be >= 2");
  if (!(config.theta_f >= 0.0 && config.theta_f <= kPi)) throw ValidationError("--theta-f must lie in [0, pi]");
}

long resolved_steps(const RunConfig& config, double T) { return config.steps > 0 ? config.steps : default_steps(T); }

BlochAxis parse_axis(const std::string& text, std::vector<std::string>* warnings) {
  if (text == "x") return BlochAxis::x();
  if (text == "y") return BlochAxis::y();
  if (text == "z") return BlochAxis::z();
  json vec = json::array();
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      vec.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ValidationError("--axis must be x, y, z or three comma-separated numbers");
    }
  }
  try {
    return axis_from_json(vec, "--axis", warnings);
  } catch (const SchemaError& e) {
    throw ValidationError(e.what());
  }
}

std::vector<double> parse_sweep_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ValidationError("--sweep must be a comma-separated list of runtimes, got '" + text + "'");
    }
    if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError("sweep runtimes must be finite and >= 0");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("--sweep needs at least one runtime");
  return out;
}

GateSpec build_gate(const GateDescription& gate, double theta_f, std::vector<std::string>* warnings) {
  GateSpec spec;
  const bool controlled = gate.name ? (*gate.name == "CNOT" || *gate.name == "CPHASE") : gate.controlled;
  if (gate.name) {
    NamedGate req;
    req.name = *gate.name;
    req.phi = gate.phi;
    req.axis = parse_axis(gate.axis, warnings);
    req.target = controlled ? 1 : 0;
    if (controlled) req.control = 0;
    spec = compile_named(req, controlled ? 2 : 1);
  } else {
    spec.kind = controlled ? GateKind::controlled_rotation : GateKind::rotation;
    spec.axis = parse_axis(gate.axis, warnings);
    spec.phi = gate.phi;
    spec.target = controlled ? 1 : 0;
    if (controlled) spec.control = 0;
    spec.ancilla = controlled ? 2 : 1;
  }
  spec.theta_f = theta_f;
  validate(spec);
  return spec;
}

QuantumState gate_input(const GateSpec& gate, const std::string& input, std::uint64_t seed) {
  const int width = gate.control ? 2 : 1;
  Vector reg;
  if (input.empty()) {
    reg = QuantumState::zeros(width).amplitudes();
  } else if (input == "random") {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Vector v(1 << width);
    for (auto& a : v) a = Complex(normal(rng), normal(rng));
    reg = QuantumState::normalized(v).amplitudes();
  } else {
    if (static_cast<int>(input.size()) != width) {
      throw ValidationError("--input needs " + std::to_string(width) + " bit(s) for this gate");
    }
    reg = QuantumState::from_bits(input).amplitudes();
  }
  Vector ancilla(2);
  ancilla << 1.0, 0.0;
  return QuantumState(kron(reg, ancilla));
}

std::string cmd_gate(const RunConfig& config, const GateDescription& description) {
  validate(config);
  const GateSpec gate = build_gate(description, config.theta_f);
  const QuantumState input = gate_input(gate, description.input, config.seed);
  const double T = config.runtime_T;
  const long steps = resolved_steps(config, T);
  const GateOutcome outcome = simulate(gate, input, T, steps);

  json report;
  report["command"] = "gate";
  report["config"] = config_json(config, steps);
  report["gate"] = to_json(gate);
  if (description.name) report["gate"]["name"] = *description.name;
  report["input_state"] = to_json(input);
  report["final_state"] = to_json(outcome.final_state);
  report["ancilla"] = {{"p0", outcome.ancilla.p0}, {"p1", outcome.ancilla.p1}};
  report["expected_p1"] = std::pow(std::sin(gate.theta_f / 2.0), 2);
  report["fidelity"] = outcome.fidelity;
  report["diabatic_error"] = outcome.diabatic_error;

  // Register conditioned on the ancilla having flipped, against the ideal gate.
  const Vector flipped = ancilla_slice(outcome.final_state.amplitudes(), gate.ancilla, 1);
  if (flipped.squaredNorm() > 0.0) {
    const Vector reg_in = ancilla_slice(input.amplitudes(), gate.ancilla, 0);
    const Matrix u = ideal_gate_unitary(gate);
    const Vector ideal = u * reg_in;
    report["final_register"] = to_json(QuantumState::normalized(flipped));
    report["register_fidelity"] = fidelity(QuantumState::normalized(flipped).amplitudes(), ideal);
  } else {
    report["final_register"] = nullptr;
    report["register_fidelity"] = 0.0;
  }

  const LinearSchedule schedule(gate.theta_f, T, steps);
  json phase_list = json::array();
  for (const auto& [label, phi] : {std::pair{"H0", 0.0}, std::pair{"Hphi", gate.phi}}) {
    const PhaseRecord p = phases(branch_evolution(phi, schedule), T, steps, label);
    phase_list.push_back({{"branch", p.branch_label},
                          {"dynamic_phase", p.dynamic_phase},
                          {"geometric_phase", p.geometric_phase}});
  }
  report["phases"] = std::move(phase_list);

  if (description.noise_strength > 0.0) {
    const auto h = gate_hamiltonian(gate, schedule);
    const Matrix clean = dephasing_demo(h, input, T, steps, {0.0, 1, config.seed});
    const Matrix noisy = dephasing_demo(h, input, T, steps, {description.noise_strength, description.trials, config.seed});
    report["dephasing"] = {{"model", "illustrative Gaussian phase kicks between the two control branches"},
                           {"kick_strength", description.noise_strength},
                           {"trials", description.trials},
                           {"coherence_noiseless", inter_branch_coherence(clean, *h.branch_difference())},
                           {"coherence_noisy", inter_branch_coherence(noisy, *h.branch_difference())}};
  }
  return report.dump(2) + "\n";
}

std::string cmd_sweep(const RunConfig& config, const GateDescription& description, const std::vector<double>& runtimes) {
  validate(config);
  if (runtimes.empty()) throw ValidationError("sweep needs at least one runtime");
  const GateSpec gate = build_gate(description, config.theta_f);
  const QuantumState input = gate_input(gate, description.input.empty() ? "random" : description.input, config.seed);

  std::vector<double> sorted = runtimes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> rows(sorted.size());
  detail::parallel_for(sorted.size(), [&](std::size_t i) {
    const double T = sorted[i];
    const long steps = resolved_steps(config, T);
    const auto start = std::chrono::steady_clock::now();
    const GateOutcome outcome = simulate(gate, input, T, steps);
    const double ms =
        config.wall_clock ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()
                          : 0.0;
    rows[i] = num(T) + "," + std::to_string(steps) + "," + num(outcome.diabatic_error) + "," +
              num(outcome.fidelity) + "," + num(ms) + "\n";
  });
  std::string csv = "T,steps,diabatic_error,oracle_fidelity,wall_ms\n";
  for (const auto& r : rows) csv += r;
  return csv;
}

std::string cmd_trajectory(const RunConfig& config, const GateDescription& description, bool adiabatic_limit) {
  validate(config);
  const GateSpec gate = build_gate(description, config.theta_f);
  if (gate.kind != GateKind::rotation) throw ValidationError("trajectory export needs a single-qubit gate");
  const double T = config.runtime_T;
  const long steps = resolved_steps(config, T);
  const LinearSchedule schedule(gate.theta_f, T, steps);

  std::string csv = "t,branch,x,y,z\n";
  const double branch_phi[] = {0.0, gate.phi};
  for (int branch = 0; branch < 2; ++branch) {
    const double phi = branch_phi[branch];
    std::vector<double> times;
    std::vector<BlochVector> points;
    if (adiabatic_limit) {
      points = adiabatic_bloch_path(phi, schedule, config.samples);
      for (int i = 0; i < config.samples; ++i) {
        times.push_back(i == config.samples - 1 ? T : T * i / (config.samples - 1));
      }
    } else {
      const Trajectory traj = evolve(branch_evolution(phi, schedule), QuantumState::zeros(1), T, steps, config.samples);
      points = bloch_trajectory(traj);
      times = traj.sample_times;
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      csv += num(times[i]) + "," + std::to_string(branch) + "," + num(points[i][0]) + "," + num(points[i][1]) + "," +
             num(points[i][2]) + "\n";
    }
  }
  return csv;
}

std::string cmd_circuit(const RunConfig& config, const std::filesystem::path& circuit_path) {
  validate(config);
  const CircuitIR circuit = parse_circuit(circuit_path);
  const double T = config.runtime_T;
  const long steps = resolved_steps(config, T);
  const ExecutionReport report = execute_circuit(circuit, T, steps);
  json doc = to_json(report);
  doc["command"] = "circuit";
  doc["config"] = config_json(config, steps);
  doc["circuit"] = to_json(circuit);
  doc["oracle_state"] = to_json(gate_model_oracle(circuit, QuantumState::zeros(circuit.n_qubits)));
  return doc.dump(2) + "\n";
}

namespace {

struct Options {
  RunConfig config;
  GateDescription gate;
  std::string name;
  std::string sweep;
  std::string circuit;
  bool adiabatic_limit = false;
};

void add_run_options(CLI::App* sub, Options& o) {
  sub->add_option("--runtime", o.config.runtime_T, "Evolution time T per gate (hbar = 1)");
  sub->add_option("--steps", o.config.steps, "Time slices per gate (default 200*T)");
  sub->add_option("--theta-f", o.config.theta_f, "Final polar angle of the ancilla sweep");
  sub->add_option("--seed", o.config.seed, "Seed for random inputs and noise");
  sub->add_option("--samples", o.config.samples, "Trajectory samples");
  sub->add_option("--out", o.config.output_path, "Output file (default stdout)");
}

void add_gate_options(CLI::App* sub, Options& o) {
  sub->add_option("--gate", o.name, "Named gate: NOT, X, H, CNOT, CPHASE, RZ, RN");
  sub->add_option("--axis", o.gate.axis, "Rotation axis: x, y, z or fx,fy,fz");
  sub->add_option("--phi", o.gate.phi, "Rotation angle");
  sub->add_flag("--controlled", o.gate.controlled, "Controlled rotation (control qubit 0)");
  sub->add_option("--input", o.gate.input, "Input bits for the gate qubits, or 'random'");
  sub->add_option("--noise-strength", o.gate.noise_strength, "Dephasing kick strength (illustrative noise demo)");
  sub->add_option("--trials", o.gate.trials, "Monte-Carlo trials for the noise demo");
}

void emit(const RunConfig& config, const std::string& artifact, std::ostream& out) {
  if (config.output_path.empty()) {
    out << artifact;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw Error("cannot open output file " + config.output_path);
  file << artifact;
  if (!file) throw Error("failed writing " + config.output_path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adiabatic quantum gates: simulate controlled adiabatic evolutions and adiabatic circuits"};
  app.require_subcommand(1);
  Options o;

  auto* gate = app.add_subcommand("gate", "Run one adiabatic gate and report fidelities, ancilla statistics and phases");
  add_run_options(gate, o);
  add_gate_options(gate, o);

  auto* sweep = app.add_subcommand("sweep", "Diabatic error and fidelity over a list of runtimes (CSV)");
  add_run_options(sweep, o);
  add_gate_options(sweep, o);
  sweep->add_option("--sweep", o.sweep, "Comma-separated runtimes, e.g. 50,100,200,400")->required();
  sweep->add_flag("--wall-clock", o.config.wall_clock, "Record wall_ms (output is then not reproducible)");

  auto* trajectory = app.add_subcommand("trajectory", "Ancilla Bloch trajectories of both branches (CSV)");
  add_run_options(trajectory, o);
  add_gate_options(trajectory, o);
  trajectory->add_flag("--adiabatic-limit", o.adiabatic_limit, "Export the instantaneous ground-state path");

  auto* circuit = app.add_subcommand("circuit", "Execute a JSON circuit as concatenated adiabatic gates");
  add_run_options(circuit, o);
  circuit->add_option("circuit", o.circuit, "Circuit file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (!o.name.empty()) o.gate.name = o.name;

  // Inputs first: malformed files map to 2, invalid values to 3.
  std::vector<double> runtimes;
  try {
    validate(o.config);
    if (circuit->parsed()) {
      std::vector<std::string> warnings;
      parse_circuit(o.circuit, &warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
    } else {
      std::vector<std::string> warnings;
      const GateSpec spec = build_gate(o.gate, o.config.theta_f, &warnings);
      if (trajectory->parsed() && spec.control) throw ValidationError("trajectory export needs a single-qubit gate");
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      gate_input(spec, o.gate.input, o.config.seed);
      if (o.gate.noise_strength < 0.0 || o.gate.trials < 1) throw ValidationError("--noise-strength must be >= 0 and --trials >= 1");
      if (sweep->parsed()) runtimes = parse_sweep_list(o.sweep);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }

  try {
    std::string artifact;
    if (gate->parsed()) {
      artifact = cmd_gate(o.config, o.gate);
    } else if (sweep->parsed()) {
      artifact = cmd_sweep(o.config, o.gate, runtimes);
    } else if (trajectory->parsed()) {
      artifact = cmd_trajectory(o.config, o.gate, o.adiabatic_limit);
    } else {
      artifact = cmd_circuit(o.config, o.circuit);
    }
    emit(o.config, artifact, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace adiagate::cli
