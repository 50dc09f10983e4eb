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

#ifndef GATEMIX_CIRCUIT_HPP_
#define GATEMIX_CIRCUIT_HPP_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "gatemix/ensemble.hpp"
#include "gatemix/matrix.hpp"
#include "gatemix/random.hpp"
#include "gatemix/stats.hpp"

// Gate-sequence simulation: exact ideal evolution, exact averaged (mixture)
// evolution, sampled realizations, and the three error protocols of the
// single-qubit over-rotation experiment.

namespace gatemix {

// Marker for a T-gate slot that a state-injection experiment may replace;
// its ideal gate is exp(i pi/8 sigma_z).
struct TGateSlot {};

// One circuit slot: an ordered qubit placement plus either an exact unitary,
// a mixed-unitary ensemble, or a flagged T gate.
struct GateSlot {
  std::vector<int> qubits;
  std::variant<Matrix, MixedUnitaryEnsemble, TGateSlot> content;
};

inline constexpr int kMaxAveragedWidth = 5;
inline constexpr int kMaxSampledWidth = 10;

// Slot 0 is applied first, so the implemented unitary is the right-to-left
// product U_N ... U_1.
struct Circuit {
  int width = 1;
  std::vector<GateSlot> slots;
};

// Throws std::invalid_argument when placements are out of range or repeated,
// gate dimensions do not match placements, width exceeds the sampled-mode
// cap, or an exact slot is not unitary.
void validate_circuit(const Circuit& c);

// The slot's ideal gate (ensemble slots contribute their target).
const Matrix& slot_ideal(const GateSlot& slot);

// Embeds a k-qubit gate into the full register.  Qubit 0 is the slow
// (leftmost) tensor factor.
Matrix lift(const Matrix& gate, std::span<const int> qubits, int width);

// The exact product U_N ... U_1 of ideal slot gates.
Matrix ideal_unitary(const Circuit& c);

// tr(U rho U^dag M) with U the ideal product.  rho must be a density matrix
// and M Hermitian, both within 1e-10.
double ideal_expectation(const Circuit& c, const Matrix& rho, const Matrix& m);

// tr(M G_N ... G_1(rho)) with every ensemble slot replaced by its mixture
// channel lifted to the register.  Requires width <= kMaxAveragedWidth;
// wider circuits must use sampling.
double averaged_expectation(const Circuit& c, const Matrix& rho, const Matrix& m);

// Exact averaged evolution of a state through the circuit.
Matrix averaged_state(const Circuit& c, const Matrix& rho);

// Every ensemble slot replaced by one independently sampled option.
Circuit sample_realization(const Circuit& c, Rng& rng);

// The ensembles attached to a circuit's ensemble slots, in slot order.
std::vector<MixedUnitaryEnsemble> ensemble_slots(const Circuit& c);

// --- error protocols ------------------------------------------------------

// Deterministic coherent error: slot i runs exp(i offsets[i] sigma_z) after
// its ideal gate.  Nonzero offsets require single-qubit slots.
struct Systematic {
  std::vector<double> offsets;
};

// One sampled realization, reused for every shot.
struct FixedRealization {};

// A fresh realization per shot; the shot mean estimates the averaged value.
struct Resampled {};

using Protocol = std::variant<Systematic, FixedRealization, Resampled>;

enum class ProtocolKind { Systematic, FixedRealization, Resampled, ExactAveraged };

struct ExperimentResult {
  ProtocolKind protocol = ProtocolKind::ExactAveraged;
  double value = 0.0;
  double std_error = 0.0;  // 0 for deterministic protocols
  double error_vs_ideal = 0.0;
  long shots = 0;
  std::uint64_t seed = 0;
};

struct RunOptions {
  // When set, terminal measurements Bernoulli-sample M's eigenvalue outcomes
  // instead of reporting exact per-realization expectations.
  bool measurement_shot_noise = false;
};

ExperimentResult run_protocol(const Circuit& c, const Matrix& rho, const Matrix& m,
                              const Protocol& protocol, long shots, std::uint64_t seed,
                              const RunOptions& options = RunOptions{});

// --- the single-qubit over-rotation experiment ----------------------------

struct ToyParams {
  double theta = 0.0;    // target angle per gate
  double epsilon = 1e-3; // offset magnitude
};

// N slots of the +-epsilon two-option mixture around theta on one qubit.
Circuit make_toy_circuit(int n_slots, const ToyParams& params);

struct SweepPoint {
  int n = 0;
  double error = 0.0;
};

struct SweepResult {
  ProtocolKind protocol = ProtocolKind::Systematic;
  double epsilon = 0.0;
  std::vector<SweepPoint> points;
  LogLogFit fit;
};

// Error-vs-N sweep for the toy experiment, started from |+><+|.
//
// Systematic:        |<sigma_y> - ideal| with every slot offset by +epsilon.
// FixedRealization:  RMS over `seeds` realizations of the <sigma_y> error.
// Resampled:         |averaged - ideal| in <sigma_x>, the exact infinite-shot
//                    limit of the resampling protocol.  (At theta = 0 the
//                    averaged evolution is a pure dephasing, which leaves
//                    <sigma_y> untouched at zero; the averaging bias shows up
//                    in <sigma_x>.)
SweepResult scaling_sweep(const ToyParams& params, std::span<const int> ns,
                          ProtocolKind protocol, int seeds, long shots,
                          std::uint64_t base_seed);

}  // namespace gatemix

#endif  // GATEMIX_CIRCUIT_HPP_
