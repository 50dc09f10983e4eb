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

#ifndef GATEMIX_TOOLS_COMMANDS_HPP_
#define GATEMIX_TOOLS_COMMANDS_HPP_

#include "config.hpp"
#include "gatemix/circuit.hpp"

// The four experiment commands.  Exit codes: 0 on success, 1 on invalid
// input, 2 when a computed bound check fails.

namespace gatemix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitBoundViolated = 2;

int cmd_bounds(const ExperimentConfig& config);
int cmd_toy(const ExperimentConfig& config);
int cmd_injection(const ExperimentConfig& config);
int cmd_verify(const ExperimentConfig& config);

// Seeded circuit used by the injection experiment: a Hadamard layer, then S
// flagged T slots interleaved with Haar single-qubit gates and CNOTs.
Circuit injection_experiment_circuit(int width, int injections, std::uint64_t seed);

// Full argv-level entry point (what main() calls).
int run_cli(int argc, char** argv);

}  // namespace gatemix::cli

#endif  // GATEMIX_TOOLS_COMMANDS_HPP_
