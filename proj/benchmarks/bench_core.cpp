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

#include <benchmark/benchmark.h>

#include "gatemix/channel.hpp"
#include "gatemix/circuit.hpp"
#include "gatemix/ensemble.hpp"
#include "gatemix/injection.hpp"
#include "gatemix/random.hpp"

using namespace gatemix;

static void BM_OperatorNorm4x4(benchmark::State& state) {
  Rng rng(1);
  const Matrix a = ginibre(4, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(operator_norm(a));
  }
}
BENCHMARK(BM_OperatorNorm4x4);

static void BM_Kron8x8(benchmark::State& state) {
  Rng rng(2);
  const Matrix a = ginibre(8, 8, rng);
  const Matrix b = ginibre(8, 8, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_Kron8x8);

static void BM_ChoiQubitChannel(benchmark::State& state) {
  const Channel c = mix(
      {Channel::from_unitary(z_rotation(0.1)), Channel::from_unitary(z_rotation(-0.1))},
      {0.5, 0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_choi(c));
  }
}
BENCHMARK(BM_ChoiQubitChannel);

static void BM_DiamondNormQubitPair(benchmark::State& state) {
  Rng rng(3);
  const Channel e = Channel::from_unitary(haar_unitary(2, rng));
  const Channel g = Channel::from_unitary(haar_unitary(2, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(diamond_norm_diff(e, g));
  }
}
BENCHMARK(BM_DiamondNormQubitPair)->Unit(benchmark::kMillisecond);

static void BM_Lemma1Bound(benchmark::State& state) {
  Rng rng(4);
  const MixedUnitaryEnsemble e(haar_unitary(2, rng),
                               {haar_unitary(2, rng), haar_unitary(2, rng)}, {0.4, 0.6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gate_diamond_bound(e));
  }
}
BENCHMARK(BM_Lemma1Bound);

static void BM_AveragedToyEvolution(benchmark::State& state) {
  const Circuit c = make_toy_circuit(static_cast<int>(state.range(0)), ToyParams{0.0, 1e-3});
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(averaged_expectation(c, plus, pauli_x()));
  }
}
BENCHMARK(BM_AveragedToyEvolution)->Arg(100)->Arg(1000);

static void BM_SampleRealization(benchmark::State& state) {
  const Circuit c = make_toy_circuit(static_cast<int>(state.range(0)), ToyParams{0.0, 1e-3});
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_realization(c, rng));
  }
}
BENCHMARK(BM_SampleRealization)->Arg(100)->Arg(1000);

static void BM_InjectedCircuit20T(benchmark::State& state) {
  Rng rng(6);
  Circuit c;
  c.width = 2;
  for (int s = 0; s < 20; ++s) {
    c.slots.push_back(GateSlot{{s % 2}, TGateSlot{}});
    c.slots.push_back(GateSlot{{(s + 1) % 2}, haar_unitary(2, rng)});
  }
  std::vector<AncillaState> list;
  for (int k = 0; k < 20; ++k) {
    list.emplace_back(M_PI / 4.0 + 0.02 * (k % 2 == 0 ? 1 : -1), M_PI / 4.0);
  }
  const AncillaEnsemble ens(list);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_injected_circuit(c, ens));
  }
}
BENCHMARK(BM_InjectedCircuit20T)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
