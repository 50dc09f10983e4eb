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

#ifndef GATEMIX_TOOLS_SPECFILES_HPP_
#define GATEMIX_TOOLS_SPECFILES_HPP_

#include <string>
#include <vector>

#include "gatemix/circuit.hpp"
#include "gatemix/ensemble.hpp"
#include "gatemix/injection.hpp"
#include "keyval.hpp"

// Loaders for the three experiment input formats: gate-ensemble specs,
// circuit specs, and ancilla lists.  The grammar is documented in the README.

namespace gatemix::cli {

// A [gate] section from a bounds spec, expanded by its repeat count.
// Sections sharing `section_index` came from the same [gate] block, so
// derived per-gate quantities can be computed once.
struct BoundsGate {
  MixedUnitaryEnsemble ensemble;
  int section_index = 0;
};

// Gate-ensemble spec: every [gate] section must describe a Z-rotation target
// with option angles (an exact gate is a single-option menu via 'angle =').
std::vector<BoundsGate> load_ensemble_spec(const std::string& path);

struct CircuitSpec {
  Circuit circuit;
};

// Circuit spec: 'width =' preamble plus [gate] sections with qubit
// placements; supports named exact gates, Z rotations, Z-rotation ensembles,
// and flagged T slots.
CircuitSpec load_circuit_spec(const std::string& path);

// Ancilla list: one "theta tau" pair per line, radians.
std::vector<AncillaState> load_ancilla_list(const std::string& path);

// Pauli-string observable ("XI", "ZZ", ...) on `width` qubits, leftmost
// character on qubit 0.
Matrix parse_observable(const std::string& label, int width);

}  // namespace gatemix::cli

#endif  // GATEMIX_TOOLS_SPECFILES_HPP_
