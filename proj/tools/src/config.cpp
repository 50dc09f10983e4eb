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

#include "config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "csvio.hpp"

namespace gatemix::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw std::runtime_error(path + ": " + message);
}

std::string resolve_path(const std::string& config_path, const std::string& relative) {
  const std::filesystem::path p(relative);
  if (p.is_absolute()) return relative;
  return (std::filesystem::path(config_path).parent_path() / p).string();
}

const json& require(const json& j, const std::string& path, const std::string& key) {
  if (!j.contains(key)) fail(path, "config is missing key '" + key + "'");
  return j.at(key);
}

SweepRequest parse_sweep(const json& j, const std::string& path) {
  SweepRequest sweep;
  sweep.s_min = require(j, path, "s_min").get<double>();
  sweep.s_max = require(j, path, "s_max").get<double>();
  sweep.points = require(j, path, "points").get<int>();
  if (!(sweep.s_min > 0.0) || !(sweep.s_max > sweep.s_min) || sweep.points < 2) {
    fail(path, "sweep needs 0 < s_min < s_max and at least two points");
  }
  return sweep;
}

}  // namespace

ExperimentConfig load_config(const std::string& path, const std::string& expected_kind,
                             const CliOverrides& overrides) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open config file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& err) {
    fail(path, std::string("JSON parse error: ") + err.what());
  }

  ExperimentConfig config;
  config.config_path = path;
  config.config_digest = file_digest(path);
  config.echo = j;

  config.kind = require(j, path, "kind").get<std::string>();
  if (config.kind != expected_kind) {
    fail(path, "config kind '" + config.kind + "' does not match the '" + expected_kind +
                   "' subcommand");
  }

  config.out = overrides.out ? *overrides.out : require(j, path, "out").get<std::string>();
  if (!overrides.out) config.out = resolve_path(path, config.out);
  config.seed = overrides.seed ? *overrides.seed
                               : (j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 1);
  config.shots =
      overrides.shots ? *overrides.shots : (j.contains("shots") ? j.at("shots").get<long>() : 0);
  if (config.shots < 0) fail(path, "'shots' must be >= 0");

  if (config.kind == "bounds") {
    config.ensemble_file = resolve_path(path, require(j, path, "ensemble_file").get<std::string>());
    config.measure_diamond =
        overrides.measure_diamond ||
        (j.contains("measure_diamond") && j.at("measure_diamond").get<bool>());
  } else if (config.kind == "toy-scaling") {
    config.theta = j.contains("theta") ? j.at("theta").get<double>() : 0.0;
    config.epsilons = require(j, path, "epsilons").get<std::vector<double>>();
    config.ns = require(j, path, "Ns").get<std::vector<int>>();
    config.protocols = require(j, path, "protocols").get<std::vector<std::string>>();
    config.seeds = j.contains("seeds") ? j.at("seeds").get<int>() : 200;
    if (config.epsilons.empty()) fail(path, "'epsilons' must be nonempty");
    for (double e : config.epsilons) {
      if (!(e >= 0.0)) fail(path, "'epsilons' entries must be >= 0");
    }
    if (config.ns.size() < 2 || !std::is_sorted(config.ns.begin(), config.ns.end())) {
      fail(path, "'Ns' must be an ascending list with at least two entries");
    }
    if (config.ns.front() < 1) fail(path, "'Ns' entries must be >= 1");
    if (config.protocols.empty()) fail(path, "'protocols' must be nonempty");
    for (const std::string& p : config.protocols) {
      if (p != "systematic" && p != "fixed-realization" && p != "resampled") {
        fail(path, "unknown protocol '" + p +
                       "' (expected systematic, fixed-realization, or resampled)");
      }
    }
    if (config.seeds < 1) fail(path, "'seeds' must be >= 1");
  } else if (config.kind == "injection") {
    config.ancilla_file = resolve_path(path, require(j, path, "ancilla_file").get<std::string>());
    config.injections = j.contains("injections") ? j.at("injections").get<int>() : 20;
    config.width = j.contains("width") ? j.at("width").get<int>() : 2;
    config.trials = j.contains("trials") ? j.at("trials").get<int>() : 1;
    if (config.injections < 1) fail(path, "'injections' must be >= 1");
    if (config.width < 1 || config.width > 5) fail(path, "'width' must be between 1 and 5");
    if (config.trials < 1) fail(path, "'trials' must be >= 1");
    if (overrides.sweep) {
      config.sweep = overrides.sweep;
    } else if (j.contains("sweep")) {
      config.sweep = parse_sweep(j.at("sweep"), path);
    }
  } else if (config.kind == "circuit-verify") {
    config.circuit_file = resolve_path(path, require(j, path, "circuit_file").get<std::string>());
    config.observables = require(j, path, "observables").get<std::vector<std::string>>();
    if (config.observables.empty()) fail(path, "'observables' must be nonempty");
  } else {
    fail(path, "unknown experiment kind '" + config.kind + "'");
  }

  return config;
}

void write_sidecar(const ExperimentConfig& config) {
  nlohmann::json meta;
  meta["command"] = config.kind;
  meta["config"] = config.echo;
  meta["config_digest"] = config.config_digest;
  meta["format"] = "gatemix-csv-v1";
  meta["seed"] = config.seed;
  meta["tool_version"] = kToolVersion;
  std::ofstream out(config.out + ".meta.json", std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open sidecar file " + config.out + ".meta.json");
  }
  out << meta.dump(2) << "\n";
}

}  // namespace gatemix::cli
