// Copyright 2026 The gatemix Authors
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

#include "gatemix/injection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gatemix/ensemble.hpp"

namespace gatemix {

namespace {

constexpr double kQuarterPi = M_PI / 4.0;

// CNOT with the control on the slow factor and the target on the fast one.
Matrix cnot_control_first() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

void require_qubit_density(const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw std::invalid_argument("control state must be a qubit density matrix");
  }
  if (!is_hermitian(rho, 1e-10) || std::abs(rho.trace().real() - 1.0) > 1e-10) {
    throw std::invalid_argument("control state is not a density matrix within tolerance");
  }
  const HermitianEig eig = hermitian_eig(rho, 1e-9);
  if (eig.eigenvalues.minCoeff() < -1e-10) {
    throw std::invalid_argument("control state has a negative eigenvalue beyond tolerance");
  }
}

// rho -> sum over one injection's Kraus pair, lifted to the register.
Matrix apply_injection(const Matrix& rho, const AncillaState& a, std::span<const int> qubits,
                       int width) {
  const auto [a1, a2] = injection_kraus(a);
  const Matrix l1 = lift(a1, qubits, width);
  const Matrix l2 = lift(a2, qubits, width);
  return l1 * rho * l1.adjoint() + l2 * rho * l2.adjoint();
}

struct InjectedEvolution {
  Matrix ideal;
  int t_slots = 0;
};

InjectedEvolution evolve_ideal(const Circuit& c, const Matrix& rho0) {
  InjectedEvolution out;
  out.ideal = rho0;
  for (const GateSlot& slot : c.slots) {
    if (std::holds_alternative<MixedUnitaryEnsemble>(slot.content)) {
      throw std::invalid_argument(
          "injected circuits must not contain ensemble slots; flag T slots instead");
    }
    if (std::holds_alternative<TGateSlot>(slot.content)) ++out.t_slots;
    const Matrix l = lift(slot_ideal(slot), slot.qubits, c.width);
    out.ideal = l * out.ideal * l.adjoint();
  }
  if (out.t_slots == 0) {
    throw std::invalid_argument("injected circuits need at least one flagged T slot");
  }
  return out;
}

Matrix initial_state(const Circuit& c) {
  const Eigen::Index d = Eigen::Index{1} << c.width;
  Matrix rho = Matrix::Zero(d, d);
  rho(0, 0) = 1.0;
  return rho;
}

}  // namespace

AncillaState::AncillaState(double theta_in, double tau_in)
    : theta(normalize_angle(theta_in)), tau(normalize_angle(tau_in)) {}

Cx AncillaState::amp0() const { return std::polar(std::cos(tau), theta / 2.0); }

Cx AncillaState::amp1() const { return std::polar(std::sin(tau), -theta / 2.0); }

double AncillaState::theta_offset() const { return normalize_angle(theta - kQuarterPi); }

AncillaEnsemble::AncillaEnsemble(std::vector<AncillaState> ancillas_in)
    : ancillas(std::move(ancillas_in)) {
  if (ancillas.empty()) {
    throw std::invalid_argument("AncillaEnsemble: empty ancilla list");
  }
}

double AncillaEnsemble::mean_square_offset() const {
  double s = 0.0;
  for (const AncillaState& a : ancillas) {
    const double x = a.theta_offset();
    s += x * x;
  }
  return s / static_cast<double>(ancillas.size());
}

double AncillaEnsemble::mean_quartic_offset() const {
  double s = 0.0;
  for (const AncillaState& a : ancillas) {
    const double x = a.theta_offset();
    s += x * x * x * x;
  }
  return s / static_cast<double>(ancillas.size());
}

std::pair<Matrix, Matrix> injection_kraus(const AncillaState& a) {
  const Cx u = a.amp0();
  const Cx v = a.amp1();
  Matrix a1 = Matrix::Zero(2, 2);
  a1(0, 0) = u;
  a1(1, 1) = v;
  Matrix a2 = Matrix::Zero(2, 2);
  a2(0, 0) = v * std::polar(1.0, kQuarterPi);
  a2(1, 1) = u * std::polar(1.0, -kQuarterPi);
  return {a1, a2};
}

Channel injection_channel(const AncillaState& a) {
  const auto [a1, a2] = injection_kraus(a);
  return Channel::from_kraus({a1, a2});
}

std::array<InjectionBranch, 2> protocol_branches(const AncillaState& a,
                                                 const Matrix& control_rho) {
  require_qubit_density(control_rho);

  Matrix ancilla = Matrix::Zero(2, 2);
  const Cx u = a.amp0();
  const Cx v = a.amp1();
  ancilla(0, 0) = u * std::conj(u);
  ancilla(0, 1) = u * std::conj(v);
  ancilla(1, 0) = v * std::conj(u);
  ancilla(1, 1) = v * std::conj(v);

  const Matrix cnot = cnot_control_first();
  const Matrix joint = cnot * kron(control_rho, ancilla) * cnot.adjoint();

  std::array<InjectionBranch, 2> branches;
  for (int outcome = 0; outcome < 2; ++outcome) {
    Matrix proj = Matrix::Zero(2, 2);
    proj(outcome, outcome) = 1.0;
    const Matrix projected = kron(identity(2), proj) * joint * kron(identity(2), proj);
    const double p = projected.trace().real();
    Matrix post = partial_trace_second(projected, 2);
    if (p > 1e-15) {
      post /= p;
      if (outcome == 1) {
        // Conditional correction exp(i pi/4 sigma_z); matches the Kraus
        // pair's phase convention (the branch global phase is unobservable).
        const Matrix s = z_rotation(kQuarterPi);
        post = s * post * s.adjoint();
      }
    } else {
      post = Matrix::Zero(2, 2);
    }
    branches[static_cast<std::size_t>(outcome)] = InjectionBranch{p, std::move(post)};
  }
  return branches;
}

ProtocolOutcome protocol_simulate(const AncillaState& a, const Matrix& control_rho, Rng& rng) {
  const auto branches = protocol_branches(a, control_rho);
  const double u01 = uniform01(rng);
  const int outcome = u01 < branches[0].probability ? 0 : 1;
  return ProtocolOutcome{outcome, branches[static_cast<std::size_t>(outcome)].post_state};
}

double injection_bound(const AncillaState& a) {
  const Cx u = a.amp0();
  const Cx v = a.amp1();
  const Cx omega = std::polar(1.0, M_PI / 8.0);
  const double mean_term = std::abs(omega - (u + omega * omega * v) * M_SQRT1_2);
  const double spread_sq = std::norm(u - v * std::polar(1.0, kQuarterPi));
  return 2.0 * mean_term + 0.5 * spread_sq;
}

InjectedCircuitResult simulate_injected_circuit(const Circuit& c, const AncillaEnsemble& ens) {
  validate_circuit(c);
  if (c.width > kMaxAveragedWidth) {
    throw std::invalid_argument("injected simulation is capped at width " +
                                std::to_string(kMaxAveragedWidth));
  }
  const Matrix rho0 = initial_state(c);
  const InjectedEvolution ideal = evolve_ideal(c, rho0);

  const double weight = 1.0 / static_cast<double>(ens.ancillas.size());
  Matrix sigma = rho0;
  for (const GateSlot& slot : c.slots) {
    if (std::holds_alternative<TGateSlot>(slot.content)) {
      Matrix next = Matrix::Zero(sigma.rows(), sigma.cols());
      for (const AncillaState& a : ens.ancillas) {
        next += weight * apply_injection(sigma, a, slot.qubits, c.width);
      }
      sigma = next;
    } else {
      const Matrix l = lift(slot_ideal(slot), slot.qubits, c.width);
      sigma = l * sigma * l.adjoint();
    }
  }

  return InjectedCircuitResult{sigma, trace_norm(ideal.ideal - sigma), ideal.t_slots};
}

InjectedCircuitResult simulate_injected_circuit(const Circuit& c, const AncillaEnsemble& ens,
                                                long shots, Rng& rng) {
  validate_circuit(c);
  if (c.width > kMaxAveragedWidth) {
    throw std::invalid_argument("injected simulation is capped at width " +
                                std::to_string(kMaxAveragedWidth));
  }
  if (shots < 1) throw std::invalid_argument("simulate_injected_circuit: shots must be >= 1");
  const Matrix rho0 = initial_state(c);
  const InjectedEvolution ideal = evolve_ideal(c, rho0);

  Matrix sigma = Matrix::Zero(rho0.rows(), rho0.cols());
  for (long shot = 0; shot < shots; ++shot) {
    Matrix state = rho0;
    for (const GateSlot& slot : c.slots) {
      if (std::holds_alternative<TGateSlot>(slot.content)) {
        const std::size_t pick =
            static_cast<std::size_t>(uniform01(rng) * static_cast<double>(ens.ancillas.size()));
        const AncillaState& a = ens.ancillas[std::min(pick, ens.ancillas.size() - 1)];
        state = apply_injection(state, a, slot.qubits, c.width);
      } else {
        const Matrix l = lift(slot_ideal(slot), slot.qubits, c.width);
        state = l * state * l.adjoint();
      }
    }
    sigma += state;
  }
  sigma /= static_cast<double>(shots);

  return InjectedCircuitResult{sigma, trace_norm(ideal.ideal - sigma), ideal.t_slots};
}

}  // namespace gatemix
