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

#ifndef GATEMIX_INJECTION_HPP_
#define GATEMIX_INJECTION_HPP_

#include <array>
#include <utility>
#include <vector>

#include "gatemix/channel.hpp"
#include "gatemix/circuit.hpp"
#include "gatemix/matrix.hpp"
#include "gatemix/random.hpp"

// T gates by state injection: the CNOT / measure / conditional-phase
// protocol, its two-Kraus channel, the closed-form diamond-distance bound
// for an imperfect ancilla, and whole-circuit injection experiments.

namespace gatemix {

// Ancilla cos(tau) e^{i theta/2} |0> + sin(tau) e^{-i theta/2} |1>;
// theta = tau = pi/4 is the perfect magic state for the T gate.
struct AncillaState {
  AncillaState(double theta_in, double tau_in);

  // Amplitudes on |0> and |1>.
  Cx amp0() const;
  Cx amp1() const;

  // Signed offset theta - pi/4, normalized into (-pi, pi].
  double theta_offset() const;

  double theta;
  double tau;
};

// A stock of prepared ancillas; injections draw uniformly from the list, so
// weighted ensembles are expressed by repetition.
struct AncillaEnsemble {
  explicit AncillaEnsemble(std::vector<AncillaState> ancillas_in);

  // Mean of (theta - pi/4)^2 over the list.
  double mean_square_offset() const;
  // Mean of |theta - pi/4|^4 over the list.
  double mean_quartic_offset() const;

  std::vector<AncillaState> ancillas;
};

// Kraus pair of the injection channel:
// A1 = diag(amp0, amp1), A2 = diag(amp1 e^{i pi/4}, amp0 e^{-i pi/4}).
std::pair<Matrix, Matrix> injection_kraus(const AncillaState& a);

// The CPTP channel sum_i A_i . A_i^dag implemented by one injection.
Channel injection_channel(const AncillaState& a);

struct InjectionBranch {
  double probability;
  Matrix post_state;  // normalized control state; zero matrix when p ~ 0
};

// Exact two-branch analysis of the protocol circuit (CNOT from the control
// onto the ancilla, Z measurement of the ancilla, conditional phase
// correction on outcome 1).  Simulated on the joint two-qubit state, not via
// the Kraus pair, so it is an independent route.
std::array<InjectionBranch, 2> protocol_branches(const AncillaState& a, const Matrix& control_rho);

struct ProtocolOutcome {
  int outcome;        // measured ancilla bit
  Matrix post_state;  // control state after the conditional correction
};

// Runs the protocol once with a Born-rule sampled measurement outcome.
ProtocolOutcome protocol_simulate(const AncillaState& a, const Matrix& control_rho, Rng& rng);

// Closed-form bound on || T-channel - injection-channel ||_diamond:
// 2 |w - (amp0 + w^2 amp1)/sqrt(2)| + (1/2) |amp0 - amp1 e^{i pi/4}|^2 with
// w = e^{i pi/8}.  Vanishes to second order at the perfect ancilla.
double injection_bound(const AncillaState& a);

// Remainder constant adopted for the ensemble trace-distance bound
// S*m2 + kQuarticRemainderCoeff*S*m4 (m2, m4 the offset moments); validated
// empirically for offsets up to
// 0.3 rad and a toolkit choice rather than a sharp constant.
inline constexpr double kQuarticRemainderCoeff = 2.0;

struct InjectedCircuitResult {
  Matrix sigma;                   // final state with injected T slots
  double trace_distance_to_ideal; // tr |rho_ideal - sigma|
  int injections;                 // number of T slots replaced
};

// Replaces every flagged T slot by the uniform mixture of the ensemble's
// injection channels and evolves exactly.  Circuits without any T slot (or
// with ensemble slots) are rejected.
InjectedCircuitResult simulate_injected_circuit(const Circuit& c, const AncillaEnsemble& ens);

// Sampled variant: each shot draws one ancilla per T slot; sigma is the shot
// mean.
InjectedCircuitResult simulate_injected_circuit(const Circuit& c, const AncillaEnsemble& ens,
                                                long shots, Rng& rng);

}  // namespace gatemix

#endif  // GATEMIX_INJECTION_HPP_
