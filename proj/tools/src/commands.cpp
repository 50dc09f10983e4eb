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

#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <map>
#include <utility>

#include "CLI11.hpp"
#include "csvio.hpp"
#include "gatemix/injection.hpp"
#include "gatemix/stats.hpp"
#include "specfiles.hpp"

namespace gatemix::cli {

namespace {

constexpr double kBoundSlack = 1e-6;

void add_provenance_footer(CsvWriter& csv, const ExperimentConfig& config) {
  csv.add_footer("meta seed=" + std::to_string(config.seed) +
                 " config_digest=" + config.config_digest);
}

std::string slope_footer(const std::string& label, const LogLogFit& fit) {
  return label + " slope=" + fmt_double(fit.slope) + " ci95=" + fmt_double(fit.slope_ci95) +
         " intercept=" + fmt_double(fit.intercept) + " points=" + std::to_string(fit.points_used);
}

ProtocolKind protocol_from_name(const std::string& name) {
  if (name == "systematic") return ProtocolKind::Systematic;
  if (name == "fixed-realization") return ProtocolKind::FixedRealization;
  return ProtocolKind::Resampled;
}

Matrix hadamard() {
  Matrix h(2, 2);
  h << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
  return h;
}

Matrix cnot_matrix() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

}  // namespace

int cmd_bounds(const ExperimentConfig& config) {
  const std::vector<BoundsGate> gates = load_ensemble_spec(config.ensemble_file);

  std::vector<std::string> header{"gate", "n_options", "mean_sq_deviation", "norm_mean_minus_target",
                                  "gate_diamond_bound"};
  if (config.measure_diamond) {
    header.push_back("diamond_measured");
    header.push_back("bound_ok");
  }
  CsvWriter csv("gatemix-bounds-v1", header);

  bool violated = false;
  double total_delta = 0.0, total_norm = 0.0, total_bound = 0.0, total_diamond = 0.0;
  std::map<int, double> diamond_cache;

  for (std::size_t idx = 0; idx < gates.size(); ++idx) {
    const MixedUnitaryEnsemble& e = gates[idx].ensemble;
    const double d = mean_square_deviation(e);
    const double norm = operator_norm(mean_unitary(e) - e.target);
    const double bound = d + 2.0 * norm;
    total_delta += d;
    total_norm += norm;
    total_bound += bound;

    std::vector<std::string> row{fmt_long(static_cast<long>(idx)),
                                 fmt_long(static_cast<long>(e.option_count())), fmt_double(d),
                                 fmt_double(norm), fmt_double(bound)};
    if (config.measure_diamond) {
      const int section = gates[idx].section_index;
      if (!diamond_cache.contains(section)) {
        diamond_cache[section] =
            diamond_norm_diff(Channel::from_unitary(e.target), mixture_channel(e));
      }
      const double measured = diamond_cache[section];
      total_diamond += measured;
      const bool ok = measured <= bound + kBoundSlack;
      violated = violated || !ok;
      row.push_back(fmt_double(measured));
      row.push_back(ok ? "1" : "0");
    }
    csv.add_row(std::move(row));
  }

  std::vector<std::string> total{"total", fmt_long(static_cast<long>(gates.size())),
                                 fmt_double(total_delta), fmt_double(total_norm),
                                 fmt_double(total_bound)};
  if (config.measure_diamond) {
    total.push_back(fmt_double(total_diamond));
    total.push_back(violated ? "0" : "1");
  }
  csv.add_row(std::move(total));

  add_provenance_footer(csv, config);
  csv.write(config.out);
  write_sidecar(config);
  return violated ? kExitBoundViolated : kExitOk;
}

int cmd_toy(const ExperimentConfig& config) {
  CsvWriter csv("gatemix-toy-v1", {"protocol", "N", "epsilon", "error"});

  std::vector<std::string> footers;
  for (std::size_t p = 0; p < config.protocols.size(); ++p) {
    const std::string& name = config.protocols[p];
    const ProtocolKind kind = protocol_from_name(name);
    for (std::size_t e = 0; e < config.epsilons.size(); ++e) {
      const double eps = config.epsilons[e];
      const std::uint64_t sweep_seed =
          seeded_stream(config.seed, {static_cast<std::uint64_t>(p),
                                      static_cast<std::uint64_t>(e)})();
      const SweepResult sweep = scaling_sweep(ToyParams{config.theta, eps}, config.ns, kind,
                                              config.seeds, config.shots, sweep_seed);
      for (const SweepPoint& point : sweep.points) {
        csv.add_row({name, fmt_long(point.n), fmt_double(eps), fmt_double(point.error)});
      }
      footers.push_back(
          slope_footer("slope protocol=" + name + " epsilon=" + fmt_double(eps), sweep.fit));
    }
  }
  for (std::string& footer : footers) {
    csv.add_footer(std::move(footer));
  }

  add_provenance_footer(csv, config);
  csv.write(config.out);
  write_sidecar(config);
  return kExitOk;
}

Circuit injection_experiment_circuit(int width, int injections, std::uint64_t seed) {
  Rng rng = seeded_stream(seed, {0xA11CEULL});
  Circuit c;
  c.width = width;
  for (int q = 0; q < width; ++q) {
    c.slots.push_back(GateSlot{{q}, hadamard()});
  }
  for (int s = 0; s < injections; ++s) {
    c.slots.push_back(GateSlot{{s % width}, TGateSlot{}});
    if (width >= 2 && s % 3 == 0) {
      const int q = s % (width - 1);
      c.slots.push_back(GateSlot{{q, q + 1}, cnot_matrix()});
    } else {
      const int q = static_cast<int>(uniform01(rng) * width) % width;
      c.slots.push_back(GateSlot{{q}, haar_unitary(2, rng)});
    }
  }
  return c;
}

int cmd_injection(const ExperimentConfig& config) {
  const std::vector<AncillaState> ancillas = load_ancilla_list(config.ancilla_file);
  const AncillaEnsemble ensemble(ancillas);

  if (config.sweep) {
    // Second-order scaling of the closed-form bound along rays from the
    // perfect ancilla.
    const std::vector<std::pair<double, double>> rays{
        {1.0, 0.0}, {0.0, 1.0}, {M_SQRT1_2, M_SQRT1_2}, {M_SQRT1_2, -M_SQRT1_2}};
    CsvWriter csv("gatemix-injection-sweep-v1", {"direction", "dtheta", "dtau", "s", "bound"});
    const SweepRequest& sweep = *config.sweep;
    const double ratio = std::pow(sweep.s_max / sweep.s_min,
                                  1.0 / static_cast<double>(sweep.points - 1));
    std::vector<std::string> footers;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      std::vector<double> ss, bounds;
      double s = sweep.s_min;
      for (int k = 0; k < sweep.points; ++k) {
        const AncillaState a(M_PI / 4.0 + s * rays[r].first, M_PI / 4.0 + s * rays[r].second);
        const double bound = injection_bound(a);
        csv.add_row({fmt_long(static_cast<long>(r)), fmt_double(rays[r].first),
                     fmt_double(rays[r].second), fmt_double(s), fmt_double(bound)});
        ss.push_back(s);
        bounds.push_back(bound);
        s *= ratio;
      }
      footers.push_back(
          slope_footer("slope direction=" + std::to_string(r), fit_loglog(ss, bounds)));
    }
    for (std::string& footer : footers) {
      csv.add_footer(std::move(footer));
    }
    add_provenance_footer(csv, config);
    csv.write(config.out);
    write_sidecar(config);
    return kExitOk;
  }

  CsvWriter csv("gatemix-injection-v1",
                {"trial", "S", "mean_sq_offset", "mean_quartic_offset", "trace_distance",
                 "bound", "bound_ok"});
  bool violated = false;
  const double m2 = ensemble.mean_square_offset();
  const double m4 = ensemble.mean_quartic_offset();
  for (int trial = 0; trial < config.trials; ++trial) {
    const Circuit circuit = injection_experiment_circuit(
        config.width, config.injections,
        seeded_stream(config.seed, {static_cast<std::uint64_t>(trial)})());
    const InjectedCircuitResult result = simulate_injected_circuit(circuit, ensemble);
    const double s_count = static_cast<double>(result.injections);
    const double bound = s_count * m2 + kQuarticRemainderCoeff * s_count * m4;
    const bool ok = result.trace_distance_to_ideal <= bound + kBoundSlack;
    violated = violated || !ok;
    csv.add_row({fmt_long(trial), fmt_long(result.injections), fmt_double(m2), fmt_double(m4),
                 fmt_double(result.trace_distance_to_ideal), fmt_double(bound), ok ? "1" : "0"});
  }

  add_provenance_footer(csv, config);
  csv.write(config.out);
  write_sidecar(config);
  return violated ? kExitBoundViolated : kExitOk;
}

int cmd_verify(const ExperimentConfig& config) {
  const CircuitSpec spec = load_circuit_spec(config.circuit_file);
  const Circuit& circuit = spec.circuit;
  if (circuit.width > kMaxAveragedWidth) {
    std::cerr << config.circuit_file << ": width " << circuit.width
              << " exceeds the exact-averaged cap of " << kMaxAveragedWidth
              << "; trim the register or use the sampling protocols\n";
    return kExitInvalid;
  }

  const Eigen::Index dim = Eigen::Index{1} << circuit.width;
  Matrix rho0 = Matrix::Zero(dim, dim);
  rho0(0, 0) = 1.0;  // the experiment starts from |0...0>

  const double bound = circuit_diamond_bound(ensemble_slots(circuit));

  std::vector<std::string> header{"observable",   "ideal",  "averaged",
                                  "abs_error",    "norm_m", "circuit_diamond_bound",
                                  "bound_times_norm", "bound_ok"};
  const bool with_mc = config.shots > 0;
  if (with_mc) {
    header.push_back("mc_mean");
    header.push_back("mc_stderr");
  }
  CsvWriter csv("gatemix-verify-v1", header);

  bool violated = false;
  for (std::size_t k = 0; k < config.observables.size(); ++k) {
    const Matrix m = parse_observable(config.observables[k], circuit.width);
    const double ideal = ideal_expectation(circuit, rho0, m);
    const double averaged = averaged_expectation(circuit, rho0, m);
    const double err = std::abs(averaged - ideal);
    const double norm_m = operator_norm(m);
    const bool ok = err <= bound * norm_m + kBoundSlack;
    violated = violated || !ok;
    std::vector<std::string> row{config.observables[k], fmt_double(ideal),
                                 fmt_double(averaged),  fmt_double(err),
                                 fmt_double(norm_m),    fmt_double(bound),
                                 fmt_double(bound * norm_m), ok ? "1" : "0"};
    if (with_mc) {
      const ExperimentResult mc =
          run_protocol(circuit, rho0, m, Resampled{}, config.shots,
                       seeded_stream(config.seed, {static_cast<std::uint64_t>(k)})());
      row.push_back(fmt_double(mc.value));
      row.push_back(fmt_double(mc.std_error));
    }
    csv.add_row(std::move(row));
  }

  add_provenance_footer(csv, config);
  csv.write(config.out);
  write_sidecar(config);
  return violated ? kExitBoundViolated : kExitOk;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"gatemix: mixed-unitary gate ensembles, diamond-norm bounds, "
               "and randomized over-rotation experiments"};
  app.require_subcommand(1);

  struct SubcommandState {
    std::string config_path;
    std::string out;
    std::uint64_t seed = 0;
    long shots = -1;
    bool measure_diamond = false;
    std::vector<double> sweep_values;
  };

  std::map<std::string, std::pair<CLI::App*, SubcommandState>> subs;
  const std::vector<std::pair<std::string, std::string>> kinds{
      {"bounds", "per-gate ensemble bounds and circuit totals"},
      {"toy", "over-rotation scaling experiments"},
      {"injection", "state-injection experiments"},
      {"verify", "averaged-vs-ideal circuit verification"},
  };
  for (const auto& [name, description] : kinds) {
    CLI::App* sub = app.add_subcommand(name, description);
    auto& state = subs[name];
    state.first = sub;
    sub->add_option("--config", state.second.config_path, "experiment config (JSON)")
        ->required();
    sub->add_option("--out", state.second.out, "output CSV path (overrides the config)");
    sub->add_option("--seed", state.second.seed, "global seed (overrides the config)");
    sub->add_option("--shots", state.second.shots, "Monte Carlo shots (overrides the config)");
    if (name == "bounds") {
      sub->add_flag("--measure-diamond", state.second.measure_diamond,
                    "add an exactly measured diamond-distance column (d = 2)");
    }
    if (name == "injection") {
      sub->add_option("--sweep", state.second.sweep_values,
                      "second-order bound sweep: s_min s_max points")
          ->expected(3);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  const std::map<std::string, std::string> kind_names{{"bounds", "bounds"},
                                                      {"toy", "toy-scaling"},
                                                      {"injection", "injection"},
                                                      {"verify", "circuit-verify"}};

  for (const auto& [name, entry] : subs) {
    if (!entry.first->parsed()) continue;
    const SubcommandState& state = entry.second;
    CliOverrides overrides;
    if (!state.out.empty()) overrides.out = state.out;
    if (entry.first->count("--seed") > 0) overrides.seed = state.seed;
    if (state.shots >= 0) overrides.shots = state.shots;
    overrides.measure_diamond = state.measure_diamond;
    if (state.sweep_values.size() == 3) {
      overrides.sweep = SweepRequest{state.sweep_values[0], state.sweep_values[1],
                                     static_cast<int>(state.sweep_values[2])};
    }
    try {
      const ExperimentConfig config =
          load_config(state.config_path, kind_names.at(name), overrides);
      if (name == "bounds") return cmd_bounds(config);
      if (name == "toy") return cmd_toy(config);
      if (name == "injection") return cmd_injection(config);
      return cmd_verify(config);
    } catch (const std::exception& err) {
      std::cerr << "error: " << err.what() << "\n";
      return kExitInvalid;
    }
  }
  return kExitInvalid;
}

}  // namespace gatemix::cli
