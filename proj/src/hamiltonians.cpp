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

#include "adiagate/hamiltonians.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace adiagate {

namespace {

constexpr double kPi = std::numbers::pi;

// Time values may overshoot the endpoints by accumulated rounding.
double time_slack(double runtime) { return 1e-9 * std::max(1.0, runtime); }

Matrix projector(const Vector& v) { return v * v.adjoint(); }

}  // namespace

BlochAxis::BlochAxis(double nx, double ny, double nz) : nx_(nx), ny_(ny), nz_(nz) {
  const double n2 = nx * nx + ny * ny + nz * nz;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tolerances().algebraic) {
    std::ostringstream os;
    os << "axis is not a unit vector: |n|^2 = " << n2;
    throw ValidationError(os.str());
  }
}

BlochAxis BlochAxis::normalized(double nx, double ny, double nz) {
  const double n = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (!(n > 0.0) || !std::isfinite(n)) throw ValidationError("axis must be a nonzero finite vector");
  return {nx / n, ny / n, nz / n};
}

double BlochAxis::polar() const { return std::acos(std::clamp(nz_, -1.0, 1.0)); }

double BlochAxis::azimuth() const { return std::atan2(ny_, nx_); }

Matrix BlochAxis::dot_sigma() const { return nx_ * pauli::x() + ny_ * pauli::y() + nz_ * pauli::z(); }

long default_steps(double runtime) {
  return std::max(1L, static_cast<long>(std::ceil(200.0 * runtime)));
}

LinearSchedule::LinearSchedule(double theta_f, double runtime, long steps)
    : theta_f_(theta_f), runtime_(runtime), steps_(steps) {
  if (!(theta_f >= 0.0 && theta_f <= kPi)) throw ValidationError("theta_f must lie in [0, pi]");
  if (!(runtime >= 0.0) || !std::isfinite(runtime)) throw ValidationError("runtime must be finite and >= 0");
  if (steps < 1) throw ValidationError("steps must be >= 1");
}

LinearSchedule::LinearSchedule(double theta_f, double runtime)
    : LinearSchedule(theta_f, runtime, default_steps(runtime)) {}

double LinearSchedule::theta_at(double t) const {
  if (!(t >= -time_slack(runtime_) && t <= runtime_ + time_slack(runtime_))) {
    std::ostringstream os;
    os << "time " << t << " outside [0, " << runtime_ << "]";
    throw ValidationError(os.str());
  }
  if (t >= runtime_) return theta_f_;
  if (t <= 0.0) return 0.0;
  return theta_f_ * (t / runtime_);
}

double theta_at(double t, const LinearSchedule& schedule) { return schedule.theta_at(t); }

TimeDependentHamiltonian::TimeDependentHamiltonian(Eigen::Index dim, double runtime, Evaluator evaluate,
                                                   std::optional<Matrix> branch_difference)
    : dim_(dim), runtime_(runtime), evaluate_(std::move(evaluate)), branch_difference_(std::move(branch_difference)) {
  if (dim < 1) throw DimensionError("Hamiltonian dimension must be positive");
  if (!(runtime >= 0.0) || !std::isfinite(runtime)) throw ValidationError("runtime must be finite and >= 0");
  if (branch_difference_ && (branch_difference_->rows() != dim || branch_difference_->cols() != dim)) {
    throw DimensionError("branch difference operator has the wrong dimension");
  }
}

HermitianOperator TimeDependentHamiltonian::operator()(double t) const {
  if (!(t >= -time_slack(runtime_) && t <= runtime_ + time_slack(runtime_))) {
    std::ostringstream os;
    os << "time " << t << " outside [0, " << runtime_ << "]";
    throw ValidationError(os.str());
  }
  Matrix m = evaluate_(std::clamp(t, 0.0, runtime_));
  if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("evaluation returned the wrong dimension");
  return HermitianOperator(std::move(m));
}

Matrix branch_hamiltonian(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix h(2, 2);
  h << -c, -s * std::polar(1.0, -phi), -s * std::polar(1.0, phi), c;
  return h;
}

TimeDependentHamiltonian branch_evolution(double phi, const LinearSchedule& schedule) {
  return TimeDependentHamiltonian(2, schedule.runtime(),
                                  [phi, schedule](double t) { return branch_hamiltonian(schedule.theta_at(t), phi); });
}

std::pair<QuantumState, QuantumState> axis_states(const BlochAxis& axis) {
  const double half = axis.polar() / 2.0;
  const Complex phase = std::polar(1.0, axis.azimuth());
  Vector up(2);
  Vector down(2);
  up << std::cos(half), phase * std::sin(half);
  down << std::sin(half), -phase * std::cos(half);
  return {QuantumState(std::move(up)), QuantumState(std::move(down))};
}

TimeDependentHamiltonian single_qubit_gate_hamiltonian(const BlochAxis& axis, double phi,
                                                       const LinearSchedule& schedule) {
  const auto [up, down] = axis_states(axis);
  const Matrix p_up = projector(up.amplitudes());
  const Matrix p_down = projector(down.amplitudes());
  Matrix split = kron(Matrix(p_up - p_down), pauli::identity());
  return TimeDependentHamiltonian(
      4, schedule.runtime(),
      [p_up, p_down, phi, schedule](double t) {
        const double theta = schedule.theta_at(t);
        return Matrix(kron(p_up, branch_hamiltonian(theta, 0.0)) + kron(p_down, branch_hamiltonian(theta, phi)));
      },
      std::move(split));
}

TimeDependentHamiltonian controlled_gate_hamiltonian(const BlochAxis& axis, double phi,
                                                     const LinearSchedule& schedule) {
  const auto [up, down] = axis_states(axis);
  Vector one(2);
  one << 0.0, 1.0;
  const Matrix p_rotated = projector(kron(one, down.amplitudes()));
  const Matrix p_rest = pauli::identity(4) - p_rotated;
  Matrix split = kron(Matrix(p_rest - p_rotated), pauli::identity());
  return TimeDependentHamiltonian(
      8, schedule.runtime(),
      [p_rotated, p_rest, phi, schedule](double t) {
        const double theta = schedule.theta_at(t);
        return Matrix(kron(p_rotated, branch_hamiltonian(theta, phi)) + kron(p_rest, branch_hamiltonian(theta, 0.0)));
      },
      std::move(split));
}

void validate(const ControlledEvolutionSpec& spec) {
  const double tol = tolerances().eigen;
  if (spec.projectors.empty()) throw ValidationError("controlled evolution needs at least one projector");
  if (spec.projectors.size() != spec.finals.size()) {
    throw ValidationError("projector count does not match final Hamiltonian count");
  }
  const Eigen::Index dc = spec.projectors.front().rows();
  const Eigen::Index dt = spec.driver.rows();
  static_cast<void>(HermitianOperator{spec.driver});
  Matrix sum = Matrix::Zero(dc, dc);
  for (std::size_t i = 0; i < spec.projectors.size(); ++i) {
    const Matrix& p = spec.projectors[i];
    if (p.rows() != dc || p.cols() != dc) throw DimensionError("projectors must share one square dimension");
    static_cast<void>(HermitianOperator{p, tol});
    for (std::size_t j = 0; j <= i; ++j) {
      const Matrix prod = p * spec.projectors[j];
      const double err = (i == j) ? max_abs(prod - p) : max_abs(prod);
      if (err > tol) {
        std::ostringstream os;
        os << "projectors " << j << " and " << i << " violate P_i P_j = delta_ij P_i by " << err;
        throw ValidationError(os.str());
      }
    }
    sum += p;
    const Matrix& f = spec.finals[i];
    if (f.rows() != dt || f.cols() != dt) throw DimensionError("final Hamiltonians must match the driver dimension");
    static_cast<void>(HermitianOperator{f});
  }
  if (const double err = max_abs(sum - pauli::identity(dc)); err > tol) {
    std::ostringstream os;
    os << "projectors do not sum to the identity (deviation " << err << ")";
    throw ValidationError(os.str());
  }
  if (!(spec.runtime >= 0.0) || !std::isfinite(spec.runtime)) throw ValidationError("runtime must be finite and >= 0");
  if (spec.f1 && spec.f2) {
    const double T = spec.runtime;
    if (!(spec.f1(0.0) > 0.0)) throw ValidationError("f1(0) must be positive");
    if (std::abs(spec.f2(0.0)) > tolerances().algebraic) throw ValidationError("f2(0) must vanish");
    if (T > 0.0) {
      if (!(spec.f1(T) >= -tolerances().algebraic)) throw ValidationError("f1(T) must not be negative");
      if (!(spec.f2(T) > 0.0)) throw ValidationError("f2(T) must be positive");
    }
  } else if (spec.f1 || spec.f2) {
    throw ValidationError("f1 and f2 must be given together");
  }
}

TimeDependentHamiltonian generic_controlled_evolution(ControlledEvolutionSpec spec) {
  validate(spec);
  const double T = spec.runtime;
  if (!spec.f1) {
    spec.f1 = [T](double t) { return T > 0.0 ? 1.0 - t / T : 1.0; };
    spec.f2 = [T](double t) { return T > 0.0 ? t / T : 0.0; };
  }
  const Eigen::Index dt = spec.driver.rows();
  const Eigen::Index dim = spec.projectors.front().rows() * dt;
  std::optional<Matrix> split;
  if (spec.projectors.size() == 2) {
    split = kron(Matrix(spec.projectors[0] - spec.projectors[1]), pauli::identity(dt));
  }
  return TimeDependentHamiltonian(
      dim, T,
      [spec = std::move(spec), dim](double t) {
        const double a = spec.f1(t);
        const double b = spec.f2(t);
        Matrix h = Matrix::Zero(dim, dim);
        for (std::size_t j = 0; j < spec.projectors.size(); ++j) {
          h += kron(spec.projectors[j], Matrix(a * spec.driver + b * spec.finals[j]));
        }
        return h;
      },
      std::move(split));
}

}  // namespace adiagate
