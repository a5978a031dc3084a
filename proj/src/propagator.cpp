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

#include "adiagate/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "adiagate/kernels.hpp"
#include "parallel.hpp"

namespace adiagate {

namespace {

constexpr double kNormTolerance = 1e-9;

std::vector<int> all_qubits(int n) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = i;
  return t;
}

void check_run(const TimeDependentHamiltonian& h, double T, long steps) {
  if (steps < 1) throw ValidationError("steps must be >= 1");
  if (!(T >= 0.0) || !std::isfinite(T)) throw ValidationError("runtime must be finite and >= 0");
  if (T > h.runtime() * (1.0 + 1e-12) + 1e-12) {
    std::ostringstream os;
    os << "runtime " << T << " exceeds the Hamiltonian's domain [0, " << h.runtime() << "]";
    throw ValidationError(os.str());
  }
}

QuantumState checked_state(const Vector& v) {
  if (!v.allFinite()) throw ValidationError("evolution produced non-finite amplitudes");
  return QuantumState(v, kNormTolerance);
}

double wrap_phase(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::remainder(a, two_pi);  // [-π, π]
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

}  // namespace

Trajectory evolve(const TimeDependentHamiltonian& h, std::span<const int> targets, const QuantumState& psi0,
                  double T, long steps, int samples) {
  check_run(h, T, steps);
  if (samples < 2) throw ValidationError("samples must be >= 2");
  const LocalPlan plan(targets, psi0.n_qubits());
  if (static_cast<Eigen::Index>(plan.local_dim()) != h.dim()) {
    throw DimensionError("Hamiltonian dimension does not match the targeted qubits");
  }
  const double dt = T / static_cast<double>(steps);

  // Slice indices at which to record a sample.
  std::vector<long> marks(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    marks[static_cast<std::size_t>(i)] =
        std::lround(static_cast<double>(i) * static_cast<double>(steps) / static_cast<double>(samples - 1));
  }

  Trajectory out{{}, {}, psi0};
  out.sample_times.reserve(marks.size());
  out.states.reserve(marks.size());
  Vector psi = psi0.amplitudes();
  std::size_t next_mark = 0;
  auto record = [&](long k) {
    while (next_mark < marks.size() && marks[next_mark] == k) {
      out.sample_times.push_back(k == steps ? T : static_cast<double>(k) * dt);
      out.states.push_back(checked_state(psi));
      ++next_mark;
    }
  };
  record(0);
  for (long k = 0; k < steps; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * dt;
    plan.apply(step_unitary(h(t_mid), dt), psi);
    record(k + 1);
  }
  out.final_state = out.states.back();
  return out;
}

Trajectory evolve(const TimeDependentHamiltonian& h, const QuantumState& psi0, double T, long steps, int samples) {
  if (static_cast<Eigen::Index>(psi0.dim()) != h.dim()) {
    throw DimensionError("initial state dimension does not match the Hamiltonian");
  }
  const auto targets = all_qubits(psi0.n_qubits());
  return evolve(h, targets, psi0, T, steps, samples);
}

GapProfile gap_profile(const TimeDependentHamiltonian& h, double T, int samples) {
  if (samples < 2) throw ValidationError("samples must be >= 2");
  check_run(h, T, 1);
  GapProfile out;
  for (int i = 0; i < samples; ++i) {
    const double t = (i == samples - 1) ? T : T * static_cast<double>(i) / static_cast<double>(samples - 1);
    const Spectrum s = eigh(h(t));
    const RealVector& ev = s.eigenvalues;
    double gap = 0.0;
    const double* first_pos = std::find_if(ev.data(), ev.data() + ev.size(), [](double e) { return e > 0.0; });
    if (first_pos != ev.data() && first_pos != ev.data() + ev.size()) {
      gap = *first_pos - *(first_pos - 1);
    } else {
      Eigen::Index k = 1;
      while (k < ev.size() && ev[k] - ev[0] <= tolerances().degeneracy) ++k;
      gap = k < ev.size() ? ev[k] - ev[0] : 0.0;
    }
    out.times.push_back(t);
    out.eigenvalue_lists.push_back(ev);
    out.within_branch_gap.push_back(gap);
  }
  return out;
}

PhaseRecord phases(const TimeDependentHamiltonian& h_branch, double T, long steps, std::string branch_label) {
  check_run(h_branch, T, steps);
  PhaseRecord out;
  out.branch_label = std::move(branch_label);
  if (T == 0.0) return out;

  const double dt = T / static_cast<double>(steps);
  Vector first;
  Vector prev;
  double prev_energy = 0.0;
  double connection = 0.0;
  for (long k = 0; k <= steps; ++k) {
    const double t = (k == steps) ? T : static_cast<double>(k) * dt;
    const Spectrum s = eigh(h_branch(t));
    if (s.eigenvalues.size() > 1 && s.eigenvalues[1] - s.eigenvalues[0] <= tolerances().degeneracy) {
      std::ostringstream os;
      os << "ground level is degenerate at t = " << t << " (sample " << k << ")";
      throw ValidationError(os.str());
    }
    Vector g = s.eigenvectors.col(0);
    if (k == 0) {
      Eigen::Index big = 0;
      g.cwiseAbs().maxCoeff(&big);
      g *= std::polar(1.0, -std::arg(g[big]));
      first = g;
    } else {
      const Complex ov = prev.dot(g);  // <prev|g>
      g *= std::polar(1.0, -std::arg(ov));
      connection += std::arg(prev.dot(g));
      out.dynamic_phase += 0.5 * (prev_energy + s.eigenvalues[0]) * dt;
    }
    prev = std::move(g);
    prev_energy = s.eigenvalues[0];
  }
  const Complex closing = first.dot(prev);
  const double endpoint = std::abs(closing) > 1e-8 ? std::arg(closing) : 0.0;
  out.geometric_phase = wrap_phase(endpoint - connection);
  return out;
}

double ground_space_leakage(const HermitianOperator& h_final, std::span<const int> targets, const Vector& state) {
  const Matrix ground = eigh(h_final).ground_space();
  const Matrix projector = ground * ground.adjoint();
  const LocalPlan plan(targets, qubits_for_dim(static_cast<std::size_t>(state.size())));
  Vector projected = state;
  plan.apply(projector, projected);
  const double weight = kernels::table(kernels::active())
                            .inner(state.data(), projected.data(), static_cast<std::size_t>(state.size()))
                            .real();
  return std::clamp(1.0 - weight, 0.0, 1.0);
}

double diabatic_error(const TimeDependentHamiltonian& h, std::span<const int> targets, const QuantumState& psi0,
                      double T, long steps) {
  const Trajectory run = evolve(h, targets, psi0, T, steps, 2);
  return ground_space_leakage(h(T), targets, run.final_state.amplitudes());
}

double diabatic_error(const TimeDependentHamiltonian& h, const QuantumState& psi0, double T, long steps) {
  if (static_cast<Eigen::Index>(psi0.dim()) != h.dim()) {
    throw DimensionError("initial state dimension does not match the Hamiltonian");
  }
  const auto targets = all_qubits(psi0.n_qubits());
  return diabatic_error(h, targets, psi0, T, steps);
}

BlochVector bloch_vector(const QuantumState& qubit) {
  if (qubit.dim() != 2) throw DimensionError("Bloch vector needs a single-qubit state");
  const Complex a = qubit[0];
  const Complex b = qubit[1];
  const Complex cross = std::conj(a) * b;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(a) - std::norm(b)};
}

std::vector<BlochVector> bloch_trajectory(const Trajectory& trajectory) {
  std::vector<BlochVector> out;
  out.reserve(trajectory.states.size());
  for (const auto& s : trajectory.states) out.push_back(bloch_vector(s));
  return out;
}

std::vector<BlochVector> adiabatic_bloch_path(double phi, const LinearSchedule& schedule, int samples) {
  if (samples < 2) throw ValidationError("samples must be >= 2");
  std::vector<BlochVector> out;
  out.reserve(static_cast<std::size_t>(samples));
  const double T = schedule.runtime();
  for (int i = 0; i < samples; ++i) {
    const double t = (i == samples - 1) ? T : T * static_cast<double>(i) / static_cast<double>(samples - 1);
    const Spectrum s = eigh(HermitianOperator(branch_hamiltonian(schedule.theta_at(t), phi)));
    out.push_back(bloch_vector(QuantumState(s.eigenvectors.col(0), 1e-9)));
  }
  return out;
}

Matrix dephasing_demo(const TimeDependentHamiltonian& h, const QuantumState& psi0, double T, long steps,
                      const DephasingOptions& options) {
  check_run(h, T, steps);
  if (!(options.kick_strength >= 0.0) || !std::isfinite(options.kick_strength)) {
    throw ValidationError("kick strength must be finite and >= 0");
  }
  if (options.trials < 1) throw ValidationError("trials must be >= 1");
  if (!h.branch_difference()) throw ValidationError("Hamiltonian does not define two control branches");
  if (static_cast<Eigen::Index>(psi0.dim()) != h.dim()) {
    throw DimensionError("initial state dimension does not match the Hamiltonian");
  }

  const double dt = T / static_cast<double>(steps);
  const Spectrum kick_basis = eigh(HermitianOperator(*h.branch_difference()));
  const double sigma = options.kick_strength * std::sqrt(dt);

  // The slice propagators do not depend on the trial; keep them when small.
  const Eigen::Index dim = h.dim();
  const bool cache = static_cast<double>(steps) * static_cast<double>(dim * dim) <= 4.0e6;
  std::vector<Matrix> slices;
  if (cache) {
    slices.reserve(static_cast<std::size_t>(steps));
    for (long k = 0; k < steps; ++k) slices.push_back(step_unitary(h((static_cast<double>(k) + 0.5) * dt), dt));
  }

  std::vector<Matrix> per_trial(static_cast<std::size_t>(options.trials));
  detail::parallel_for(per_trial.size(), [&](std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> noise(0.0, 1.0);
    Vector psi = psi0.amplitudes();
    Vector phases(dim);
    for (long k = 0; k < steps; ++k) {
      psi = cache ? Vector(slices[static_cast<std::size_t>(k)] * psi)
                  : Vector(step_unitary(h((static_cast<double>(k) + 0.5) * dt), dt) * psi);
      if (sigma > 0.0) {
        const double xi = sigma * noise(rng);
        for (Eigen::Index j = 0; j < dim; ++j) phases[j] = std::polar(1.0, -xi * kick_basis.eigenvalues[j]);
        psi = kick_basis.eigenvectors * (phases.asDiagonal() * (kick_basis.eigenvectors.adjoint() * psi));
      }
    }
    per_trial[trial] = psi * psi.adjoint();
  });

  Matrix rho = Matrix::Zero(dim, dim);
  for (const auto& r : per_trial) rho += r;
  return rho / static_cast<double>(options.trials);
}

double inter_branch_coherence(const Matrix& rho, const Matrix& branch_difference) {
  if (rho.rows() != branch_difference.rows() || rho.cols() != branch_difference.cols()) {
    throw DimensionError("density matrix and branch operator dimensions differ");
  }
  const Matrix id = Matrix::Identity(rho.rows(), rho.cols());
  const Matrix plus = 0.5 * (id + branch_difference);
  const Matrix minus = 0.5 * (id - branch_difference);
  return max_abs(plus * rho * minus);
}

std::vector<BranchOutcome> analyze_branches(const ControlledEvolutionSpec& spec, const QuantumState& final_state) {
  const Eigen::Index dc = spec.projectors.empty() ? 0 : spec.projectors.front().rows();
  const Eigen::Index dt = spec.driver.rows();
  if (dc * dt != static_cast<Eigen::Index>(final_state.dim())) {
    throw DimensionError("state dimension does not match control x target");
  }
  std::vector<BranchOutcome> out;
  for (std::size_t j = 0; j < spec.projectors.size(); ++j) {
    const Vector projected = kron(spec.projectors[j], pauli::identity(dt)) * final_state.amplitudes();
    BranchOutcome b;
    b.weight = projected.squaredNorm();
    if (b.weight > 0.0) {
      // Row c of `amps` holds the target amplitudes for control basis state c.
      const Matrix amps = projected.reshaped<Eigen::RowMajor>(dc, dt);
      const Matrix rho = amps.transpose() * amps.conjugate() / b.weight;
      const Vector g = eigh(HermitianOperator(spec.finals[j])).eigenvectors.col(0);
      b.ground_state_fidelity = std::clamp(g.dot(rho * g).real(), 0.0, 1.0);
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace adiagate
