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

#ifndef GATEMIX_TOOLS_CONFIG_HPP_
#define GATEMIX_TOOLS_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

// Experiment configuration: a JSON file selected with --config, with a few
// flag overrides.  Every run writes a <out>.meta.json sidecar echoing the
// parsed config, its digest, and the effective seed.

namespace gatemix::cli {

struct SweepRequest {
  double s_min = 1e-3;
  double s_max = 1e-1;
  int points = 12;
};

struct ExperimentConfig {
  std::string kind;  // bounds | toy-scaling | injection | circuit-verify
  std::string out;
  std::uint64_t seed = 1;
  long shots = 0;

  // bounds
  std::string ensemble_file;
  bool measure_diamond = false;

  // toy-scaling
  double theta = 0.0;
  std::vector<double> epsilons;
  std::vector<int> ns;
  std::vector<std::string> protocols;
  int seeds = 200;

  // injection
  std::string ancilla_file;
  int injections = 20;
  int width = 2;
  int trials = 1;
  std::optional<SweepRequest> sweep;

  // circuit-verify
  std::string circuit_file;
  std::vector<std::string> observables;

  // provenance
  std::string config_path;
  std::string config_digest;
  nlohmann::json echo;
};

struct CliOverrides {
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<long> shots;
  bool measure_diamond = false;
  std::optional<SweepRequest> sweep;
};

// Loads and validates a config of the given kind; paths inside the file are
// resolved relative to the file's directory.  Throws std::runtime_error with
// a readable message on any invalid entry.
ExperimentConfig load_config(const std::string& path, const std::string& expected_kind,
                             const CliOverrides& overrides);

// Writes <out>.meta.json.
void write_sidecar(const ExperimentConfig& config);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace gatemix::cli

#endif  // GATEMIX_TOOLS_CONFIG_HPP_
