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

#include "gatemix/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gatemix {

namespace {

constexpr double kDensityTol = 1e-10;
constexpr double kProductUnitaryTol = 1e-8;

Eigen::Index register_dim(int width) { return Eigen::Index{1} << width; }

int slot_arity(const GateSlot& slot) { return static_cast<int>(slot.qubits.size()); }

void require_density(const Matrix& rho, int width) {
  const Eigen::Index d = register_dim(width);
  if (rho.rows() != d || rho.cols() != d) {
    throw std::invalid_argument("state dimension does not match the register width");
  }
  if (!is_hermitian(rho, kDensityTol)) {
    throw std::invalid_argument("state is not Hermitian within tolerance");
  }
  if (std::abs(rho.trace().real() - 1.0) > kDensityTol || std::abs(rho.trace().imag()) > kDensityTol) {
    throw std::invalid_argument("state trace deviates from 1");
  }
  if (d <= kMaxDecompositionDim) {
    const HermitianEig eig = hermitian_eig(rho, 1e-9);
    if (eig.eigenvalues.minCoeff() < -kDensityTol) {
      throw std::invalid_argument("state has a negative eigenvalue beyond tolerance");
    }
  }
}

void require_observable(const Matrix& m, int width) {
  const Eigen::Index d = register_dim(width);
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument("observable dimension does not match the register width");
  }
  if (!is_hermitian(m, kDensityTol)) {
    throw std::invalid_argument("observable is not Hermitian within tolerance");
  }
}

// rho -> L rho L^dag for the lifted gate.
Matrix conjugate_by_lift(const Matrix& rho, const Matrix& gate, std::span<const int> qubits,
                         int width) {
  const Matrix l = lift(gate, qubits, width);
  return l * rho * l.adjoint();
}

Matrix apply_slot_averaged(const Matrix& rho, const GateSlot& slot, int width) {
  if (const auto* ensemble = std::get_if<MixedUnitaryEnsemble>(&slot.content)) {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (std::size_t a = 0; a < ensemble->options.size(); ++a) {
      if (ensemble->probs[a] == 0.0) continue;
      out += ensemble->probs[a] *
             conjugate_by_lift(rho, ensemble->options[a], slot.qubits, width);
    }
    return out;
  }
  return conjugate_by_lift(rho, slot_ideal(slot), slot.qubits, width);
}

Matrix evolve_exact(const Circuit& c, const Matrix& rho) {
  Matrix state = rho;
  for (const GateSlot& slot : c.slots) {
    state = conjugate_by_lift(state, slot_ideal(slot), slot.qubits, c.width);
  }
  return state;
}

double expectation_of(const Matrix& rho, const Matrix& m) {
  return (m * rho).trace().real();
}

// In-place k-qubit gate application on a state vector, O(2^width * 2^k).
void apply_gate_statevector(Vector& psi, const Matrix& gate, std::span<const int> qubits,
                            int width) {
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index gd = Eigen::Index{1} << k;
  Eigen::Index placement_mask = 0;
  for (int t = 0; t < k; ++t) {
    placement_mask |= Eigen::Index{1} << (width - 1 - qubits[t]);
  }
  const Eigen::Index full = psi.size();
  Vector gathered(gd), transformed(gd);
  for (Eigen::Index base = 0; base < full; ++base) {
    if ((base & placement_mask) != 0) continue;
    for (Eigen::Index g = 0; g < gd; ++g) {
      Eigen::Index idx = base;
      for (int t = 0; t < k; ++t) {
        idx |= ((g >> (k - 1 - t)) & 1) << (width - 1 - qubits[t]);
      }
      gathered(g) = psi(idx);
    }
    transformed = gate * gathered;
    for (Eigen::Index g = 0; g < gd; ++g) {
      Eigen::Index idx = base;
      for (int t = 0; t < k; ++t) {
        idx |= ((g >> (k - 1 - t)) & 1) << (width - 1 - qubits[t]);
      }
      psi(idx) = transformed(g);
    }
  }
}

// Extracts the pure state of a rank-one density matrix; rejects mixed input.
Vector pure_state_of(const Matrix& rho) {
  Eigen::Index pivot = 0;
  double best = 0.0;
  for (Eigen::Index j = 0; j < rho.cols(); ++j) {
    const double p = rho(j, j).real();
    if (p > best) {
      best = p;
      pivot = j;
    }
  }
  if (best <= 0.0) {
    throw std::invalid_argument("state-vector mode: degenerate density matrix");
  }
  Vector psi = rho.col(pivot) / std::sqrt(best);
  if (max_abs(psi * psi.adjoint() - rho) > 1e-8) {
    throw std::invalid_argument(
        "registers wider than the averaged cap run in state-vector mode and need a pure "
        "input state");
  }
  return psi;
}

// Exact expectation through a fully exact circuit; density-matrix evolution
// up to the averaged cap, state-vector evolution beyond it.
double exact_circuit_expectation(const Circuit& c, const Matrix& rho, const Matrix& m) {
  if (c.width <= kMaxAveragedWidth) {
    return expectation_of(evolve_exact(c, rho), m);
  }
  Vector psi = pure_state_of(rho);
  for (const GateSlot& slot : c.slots) {
    apply_gate_statevector(psi, slot_ideal(slot), slot.qubits, c.width);
  }
  return (psi.adjoint() * m * psi)(0, 0).real();
}

std::uint64_t shot_component(long shot) { return 0x100000000ULL + static_cast<std::uint64_t>(shot); }

// Terminal measurement with Bernoulli sampling of M's eigenvalue outcomes.
class ShotSampler {
 public:
  ShotSampler(const Matrix& m, int width) {
    if (register_dim(width) > kMaxDecompositionDim) {
      throw std::invalid_argument("measurement shot noise needs a register small enough to "
                                  "diagonalize the observable");
    }
    eig_ = hermitian_eig(m);
  }

  double draw(const Matrix& rho_final, Rng& rng) const {
    const Eigen::Index n = eig_.eigenvalues.size();
    std::vector<double> probs(static_cast<std::size_t>(n));
    double total = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const Vector v = eig_.eigenvectors.col(k);
      double p = (v.adjoint() * rho_final * v)(0, 0).real();
      p = std::max(p, 0.0);
      probs[static_cast<std::size_t>(k)] = p;
      total += p;
    }
    for (double& p : probs) p /= total;
    return eig_.eigenvalues(static_cast<Eigen::Index>(sample_index(probs, rng)));
  }

 private:
  HermitianEig eig_;
};

}  // namespace

const Matrix& slot_ideal(const GateSlot& slot) {
  if (const auto* exact = std::get_if<Matrix>(&slot.content)) {
    return *exact;
  }
  if (const auto* ensemble = std::get_if<MixedUnitaryEnsemble>(&slot.content)) {
    return ensemble->target;
  }
  static const Matrix t = t_gate();
  return t;
}

void validate_circuit(const Circuit& c) {
  if (c.width < 1 || c.width > kMaxSampledWidth) {
    throw std::invalid_argument("circuit width must be between 1 and " +
                                std::to_string(kMaxSampledWidth));
  }
  for (std::size_t s = 0; s < c.slots.size(); ++s) {
    const GateSlot& slot = c.slots[s];
    const std::string where = "slot " + std::to_string(s);
    if (slot.qubits.empty()) {
      throw std::invalid_argument(where + ": empty qubit placement");
    }
    std::vector<int> sorted = slot.qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument(where + ": repeated qubit in placement");
    }
    if (sorted.front() < 0 || sorted.back() >= c.width) {
      throw std::invalid_argument(where + ": qubit index outside the register");
    }
    const Eigen::Index gate_dim = Eigen::Index{1} << slot.qubits.size();
    if (std::holds_alternative<TGateSlot>(slot.content)) {
      if (slot.qubits.size() != 1) {
        throw std::invalid_argument(where + ": T slots act on a single qubit");
      }
      continue;
    }
    const Matrix& ideal = slot_ideal(slot);
    if (ideal.rows() != gate_dim || ideal.cols() != gate_dim) {
      throw std::invalid_argument(where + ": gate dimension does not match its placement");
    }
    if (const auto* exact = std::get_if<Matrix>(&slot.content)) {
      const double defect = unitarity_defect(*exact);
      if (defect > kUnitaryTol) {
        throw std::invalid_argument(where + ": exact gate deviates from unitary by " +
                                    std::to_string(defect));
      }
    }
  }
  if (c.width <= kMaxAveragedWidth) {
    const double defect = unitarity_defect(ideal_unitary(c));
    if (defect > kProductUnitaryTol) {
      throw std::invalid_argument("ideal slot product deviates from unitary by " +
                                  std::to_string(defect));
    }
  }
}

Matrix lift(const Matrix& gate, std::span<const int> qubits, int width) {
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index gd = Eigen::Index{1} << k;
  if (gate.rows() != gd || gate.cols() != gd) {
    throw std::invalid_argument("lift: gate dimension does not match its placement");
  }
  const Eigen::Index full = register_dim(width);
  Matrix out = Matrix::Zero(full, full);
  for (Eigen::Index col = 0; col < full; ++col) {
    // Split the register index into placement bits and untouched bits.
    Eigen::Index gcol = 0;
    Eigen::Index rest = col;
    for (int t = 0; t < k; ++t) {
      const int bit_pos = width - 1 - qubits[t];
      const Eigen::Index bit = (col >> bit_pos) & 1;
      gcol |= bit << (k - 1 - t);
      rest &= ~(Eigen::Index{1} << bit_pos);
    }
    for (Eigen::Index grow = 0; grow < gd; ++grow) {
      Eigen::Index row = rest;
      for (int t = 0; t < k; ++t) {
        const int bit_pos = width - 1 - qubits[t];
        const Eigen::Index bit = (grow >> (k - 1 - t)) & 1;
        row |= bit << bit_pos;
      }
      const Cx value = gate(grow, gcol);
      if (value != Cx(0.0, 0.0)) out(row, col) = value;
    }
  }
  return out;
}

Matrix ideal_unitary(const Circuit& c) {
  const Eigen::Index d = register_dim(c.width);
  Matrix u = Matrix::Identity(d, d);
  for (const GateSlot& slot : c.slots) {
    u = lift(slot_ideal(slot), slot.qubits, c.width) * u;
  }
  return u;
}

double ideal_expectation(const Circuit& c, const Matrix& rho, const Matrix& m) {
  validate_circuit(c);
  require_density(rho, c.width);
  require_observable(m, c.width);
  return exact_circuit_expectation(c, rho, m);
}

Matrix averaged_state(const Circuit& c, const Matrix& rho) {
  validate_circuit(c);
  if (c.width > kMaxAveragedWidth) {
    throw std::invalid_argument("averaged evolution is capped at width " +
                                std::to_string(kMaxAveragedWidth) +
                                "; use the sampling protocols for wider registers");
  }
  require_density(rho, c.width);
  Matrix state = rho;
  for (const GateSlot& slot : c.slots) {
    state = apply_slot_averaged(state, slot, c.width);
  }
  return state;
}

double averaged_expectation(const Circuit& c, const Matrix& rho, const Matrix& m) {
  require_observable(m, c.width);
  return expectation_of(averaged_state(c, rho), m);
}

Circuit sample_realization(const Circuit& c, Rng& rng) {
  Circuit out;
  out.width = c.width;
  out.slots.reserve(c.slots.size());
  for (const GateSlot& slot : c.slots) {
    if (const auto* ensemble = std::get_if<MixedUnitaryEnsemble>(&slot.content)) {
      out.slots.push_back(GateSlot{slot.qubits, sample(*ensemble, rng).unitary});
    } else {
      out.slots.push_back(slot);
    }
  }
  return out;
}

std::vector<MixedUnitaryEnsemble> ensemble_slots(const Circuit& c) {
  std::vector<MixedUnitaryEnsemble> out;
  for (const GateSlot& slot : c.slots) {
    if (const auto* ensemble = std::get_if<MixedUnitaryEnsemble>(&slot.content)) {
      out.push_back(*ensemble);
    }
  }
  return out;
}

ExperimentResult run_protocol(const Circuit& c, const Matrix& rho, const Matrix& m,
                              const Protocol& protocol, long shots, std::uint64_t seed,
                              const RunOptions& options) {
  validate_circuit(c);
  require_density(rho, c.width);
  require_observable(m, c.width);

  const double ideal = exact_circuit_expectation(c, rho, m);

  ExperimentResult result;
  result.seed = seed;

  if (const auto* systematic = std::get_if<Systematic>(&protocol)) {
    if (systematic->offsets.size() != c.slots.size()) {
      throw std::invalid_argument("run_protocol: need one offset per slot");
    }
    Circuit shifted;
    shifted.width = c.width;
    shifted.slots.reserve(c.slots.size());
    for (std::size_t s = 0; s < c.slots.size(); ++s) {
      const GateSlot& slot = c.slots[s];
      const double offset = systematic->offsets[s];
      Matrix gate = slot_ideal(slot);
      if (offset != 0.0) {
        if (slot.qubits.size() != 1) {
          throw std::invalid_argument("run_protocol: nonzero offsets require single-qubit slots");
        }
        gate = z_rotation(offset) * gate;
      }
      shifted.slots.push_back(GateSlot{slot.qubits, std::move(gate)});
    }
    result.protocol = ProtocolKind::Systematic;
    result.value = exact_circuit_expectation(shifted, rho, m);
    result.shots = 1;
  } else if (std::holds_alternative<FixedRealization>(protocol)) {
    if (shots < 1) throw std::invalid_argument("run_protocol: shots must be >= 1");
    Rng rng = seeded_stream(seed, {0});
    const Circuit realization = sample_realization(c, rng);
    result.protocol = ProtocolKind::FixedRealization;
    result.shots = shots;
    if (options.measurement_shot_noise) {
      const ShotSampler sampler(m, c.width);
      const Matrix final_state = evolve_exact(realization, rho);
      Rng meas_rng = seeded_stream(seed, {1});
      std::vector<double> outcomes(static_cast<std::size_t>(shots));
      for (long s = 0; s < shots; ++s) {
        outcomes[static_cast<std::size_t>(s)] = sampler.draw(final_state, meas_rng);
      }
      result.value = mean(outcomes);
      result.std_error = stderr_of_mean(outcomes);
    } else {
      result.value = exact_circuit_expectation(realization, rho, m);
    }
  } else {
    if (shots < 1) throw std::invalid_argument("run_protocol: shots must be >= 1");
    result.protocol = ProtocolKind::Resampled;
    result.shots = shots;
    std::vector<double> values(static_cast<std::size_t>(shots));
    for (long s = 0; s < shots; ++s) {
      Rng rng = seeded_stream(seed, {shot_component(s)});
      const Circuit realization = sample_realization(c, rng);
      if (options.measurement_shot_noise) {
        const ShotSampler sampler(m, c.width);
        const Matrix final_state = evolve_exact(realization, rho);
        values[static_cast<std::size_t>(s)] = sampler.draw(final_state, rng);
      } else {
        values[static_cast<std::size_t>(s)] = exact_circuit_expectation(realization, rho, m);
      }
    }
    result.value = mean(values);
    result.std_error = stderr_of_mean(values);
  }

  result.error_vs_ideal = std::abs(result.value - ideal);
  return result;
}

Circuit make_toy_circuit(int n_slots, const ToyParams& params) {
  if (n_slots < 0) throw std::invalid_argument("make_toy_circuit: negative slot count");
  Circuit c;
  c.width = 1;
  c.slots.reserve(static_cast<std::size_t>(n_slots));
  const ZRotationSpec spec(params.theta,
                           {params.theta + params.epsilon, params.theta - params.epsilon});
  const MixedUnitaryEnsemble ensemble = z_rotation_ensemble(spec);
  for (int s = 0; s < n_slots; ++s) {
    c.slots.push_back(GateSlot{{0}, ensemble});
  }
  return c;
}

SweepResult scaling_sweep(const ToyParams& params, std::span<const int> ns,
                          ProtocolKind protocol, int seeds, long shots,
                          std::uint64_t base_seed) {
  if (!std::is_sorted(ns.begin(), ns.end())) {
    throw std::invalid_argument("scaling_sweep: N list must be ascending");
  }
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const Matrix sigma_y = pauli_y();
  const Matrix sigma_x = pauli_x();

  SweepResult sweep;
  sweep.protocol = protocol;
  sweep.epsilon = params.epsilon;

  std::vector<double> xs, errors;
  for (int n : ns) {
    const Circuit circuit = make_toy_circuit(n, params);
    double error = 0.0;
    switch (protocol) {
      case ProtocolKind::Systematic: {
        const Systematic sys{std::vector<double>(static_cast<std::size_t>(n), params.epsilon)};
        error = run_protocol(circuit, plus, sigma_y, sys, 1,
                             seeded_stream(base_seed, {static_cast<std::uint64_t>(n)})())
                    .error_vs_ideal;
        break;
      }
      case ProtocolKind::FixedRealization: {
        if (seeds < 1) throw std::invalid_argument("scaling_sweep: need at least one seed");
        std::vector<double> per_seed(static_cast<std::size_t>(seeds));
        for (int s = 0; s < seeds; ++s) {
          const std::uint64_t seed = seeded_stream(
              base_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)})();
          per_seed[static_cast<std::size_t>(s)] =
              run_protocol(circuit, plus, sigma_y, FixedRealization{}, 1, seed).error_vs_ideal;
        }
        error = rms(per_seed);
        break;
      }
      case ProtocolKind::Resampled:
      case ProtocolKind::ExactAveraged: {
        // Exact infinite-shot limit of the resampling protocol, measured on
        // <sigma_x> where the averaging bias is nonzero.
        error = std::abs(averaged_expectation(circuit, plus, sigma_x) -
                         ideal_expectation(circuit, plus, sigma_x));
        break;
      }
    }
    sweep.points.push_back(SweepPoint{n, error});
    xs.push_back(static_cast<double>(n));
    errors.push_back(error);
  }
  (void)shots;
  sweep.fit = fit_loglog(xs, errors);
  return sweep;
}

}  // namespace gatemix
