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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace gatemix;
using gatemix::testing::matrix_near;
using gatemix::testing::plus_density;
using gatemix::testing::toy_sigma_x_oracle;
using gatemix::testing::toy_sigma_y_oracle;

namespace {

Matrix hadamard() {
  Matrix h(2, 2);
  h << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
  return h;
}

Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

MixedUnitaryEnsemble pm_ensemble(double theta, double eps) {
  return z_rotation_ensemble(ZRotationSpec(theta, {theta + eps, theta - eps}));
}

// Random 2-qubit circuit mixing exact Haar gates and Z-rotation ensembles.
Circuit random_mixed_circuit(int slots, double max_offset, Rng& rng) {
  Circuit c;
  c.width = 2;
  for (int s = 0; s < slots; ++s) {
    if (uniform01(rng) < 0.4) {
      c.slots.push_back(GateSlot{{0, 1}, haar_unitary(4, rng)});
    } else {
      const int qubit = uniform01(rng) < 0.5 ? 0 : 1;
      const double theta = uniform(rng, -1.0, 1.0);
      const double phi1 = uniform(rng, 1e-4, max_offset);
      const double phi2 = -uniform(rng, 1e-4, max_offset);
      c.slots.push_back(
          GateSlot{{qubit}, z_rotation_ensemble(ZRotationSpec(theta, {theta + phi1, theta + phi2}))});
    }
  }
  return c;
}

}  // namespace

TEST_CASE("lift places gates by the slow-first qubit convention") {
  Rng rng(51);
  const Matrix g = haar_unitary(2, rng);
  CHECK(matrix_near(lift(g, std::vector<int>{0}, 2), kron(g, identity(2)), 1e-14));
  CHECK(matrix_near(lift(g, std::vector<int>{1}, 2), kron(identity(2), g), 1e-14));

  // CNOT on (0, 1) is the standard matrix; on (1, 0) it is the reversed one.
  CHECK(matrix_near(lift(cnot(), std::vector<int>{0, 1}, 2), cnot(), 0.0));
  Matrix reversed = Matrix::Zero(4, 4);
  reversed(0, 0) = 1.0;  // |00> -> |00>
  reversed(3, 1) = 1.0;  // |01> -> |11>
  reversed(2, 2) = 1.0;  // |10> -> |10>
  reversed(1, 3) = 1.0;  // |11> -> |01>
  CHECK(matrix_near(lift(cnot(), std::vector<int>{1, 0}, 2), reversed, 0.0));

  const Matrix g2 = haar_unitary(4, rng);
  CHECK(matrix_near(lift(g2, std::vector<int>{1, 2}, 3), kron(identity(2), g2), 1e-14));
}

TEST_CASE("validate_circuit rejects malformed slots and states") {
  Circuit c;
  c.width = 2;
  c.slots.push_back(GateSlot{{0, 0}, cnot()});
  CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
  c.slots[0].qubits = {0, 2};
  CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
  c.slots[0].qubits = {0};
  CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);  // 4x4 gate on one qubit
  c.slots[0] = GateSlot{{0}, Matrix(2.0 * identity(2))};
  CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);  // not unitary
  c.slots[0] = GateSlot{{0}, Matrix(hadamard())};
  CHECK_NOTHROW(validate_circuit(c));

  // Invalid rho / M are rejected by the expectation entry points.
  Circuit one;
  one.width = 1;
  one.slots.push_back(GateSlot{{0}, Matrix(hadamard())});
  const Matrix subnormalized = 0.7 * plus_density();
  CHECK_THROWS_AS(ideal_expectation(one, subnormalized, pauli_x()), std::invalid_argument);
  Matrix mixed_up = plus_density();
  mixed_up(0, 1) = Cx(0.5, 0.4);  // breaks Hermiticity
  CHECK_THROWS_AS(ideal_expectation(one, mixed_up, pauli_x()), std::invalid_argument);
  Matrix too_big = Matrix::Zero(2, 2);
  too_big(0, 0) = 1.4;
  too_big(1, 1) = -0.4;  // negative eigenvalue
  CHECK_THROWS_AS(ideal_expectation(one, too_big, pauli_x()), std::invalid_argument);
  Matrix skew = pauli_x();
  skew(0, 1) = Cx(0.0, 0.3);
  CHECK_THROWS_AS(ideal_expectation(one, plus_density(), skew), std::invalid_argument);
}

TEST_CASE("ideal_expectation: empty circuit, single rotation, oracle chain") {
  Circuit empty;
  empty.width = 1;
  CHECK(ideal_expectation(empty, plus_density(), pauli_x()) == doctest::Approx(1.0).epsilon(1e-14));

  const double theta = 0.37;
  Circuit single;
  single.width = 1;
  single.slots.push_back(GateSlot{{0}, z_rotation(theta)});
  CHECK(ideal_expectation(single, plus_density(), pauli_x()) ==
        doctest::Approx(std::cos(2.0 * theta)).epsilon(1e-13));

  const int n = 9;
  Circuit chain;
  chain.width = 1;
  std::vector<double> angles;
  for (int s = 0; s < n; ++s) {
    chain.slots.push_back(GateSlot{{0}, z_rotation(theta)});
    angles.push_back(theta);
  }
  const double oracle = toy_sigma_y_oracle(angles);
  CHECK(ideal_expectation(chain, plus_density(), pauli_y()) ==
        doctest::Approx(oracle).epsilon(1e-12));
  CHECK(std::abs(oracle) == doctest::Approx(std::abs(std::sin(2.0 * n * theta))).epsilon(1e-12));
}

TEST_CASE("averaged_expectation: exact slots reduce to the ideal value") {
  Rng rng(52);
  Circuit c;
  c.width = 2;
  c.slots.push_back(GateSlot{{0}, haar_unitary(2, rng)});
  c.slots.push_back(GateSlot{{0, 1}, haar_unitary(4, rng)});
  const Matrix rho = random_density(4, rng);
  const Matrix m = kron(pauli_x(), identity(2));
  CHECK(averaged_expectation(c, rho, m) ==
        doctest::Approx(ideal_expectation(c, rho, m)).epsilon(1e-12));
}

TEST_CASE("averaged_expectation: one +-epsilon slot dephases <sigma_x> to cos(2 eps)") {
  const double eps = 0.25;
  Circuit c;
  c.width = 1;
  c.slots.push_back(GateSlot{{0}, pm_ensemble(0.0, eps)});
  CHECK(averaged_expectation(c, plus_density(), pauli_x()) ==
        doctest::Approx(std::cos(2.0 * eps)).epsilon(1e-13));
  CHECK(averaged_expectation(c, plus_density(), pauli_y()) ==
        doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("averaged evolution preserves the trace and matches the channel chain") {
  Rng rng(53);
  const Circuit c = random_mixed_circuit(12, 0.2, rng);
  const Matrix rho = random_density(4, rng);
  const Matrix out = averaged_state(c, rho);
  CHECK(std::abs(out.trace().real() - 1.0) <= 1e-9);

  // Same evolution through the channels module.
  Channel chain = Channel::identity_channel(4);
  for (const GateSlot& slot : c.slots) {
    if (const auto* ens = std::get_if<MixedUnitaryEnsemble>(&slot.content)) {
      std::vector<Channel> parts;
      for (const Matrix& w : ens->options) {
        parts.push_back(Channel::from_unitary(lift(w, slot.qubits, c.width)));
      }
      chain = compose(mix(parts, ens->probs), chain);
    } else {
      chain = compose(Channel::from_unitary(lift(slot_ideal(slot), slot.qubits, c.width)), chain);
    }
  }
  CHECK(matrix_near(out, chain.apply(rho), 1e-10));
}

TEST_CASE("averaged_expectation rejects wide registers with guidance") {
  Circuit c;
  c.width = 6;
  c.slots.push_back(GateSlot{{0}, z_rotation(0.1)});
  Matrix rho = Matrix::Zero(64, 64);
  rho(0, 0) = 1.0;
  try {
    averaged_expectation(c, rho, Matrix(Matrix::Identity(64, 64)));
    FAIL("expected width rejection");
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("sampling") != std::string::npos);
  }
}

TEST_CASE("the central bound: |averaged - ideal| is capped by circuit bound x ||M||") {
  Rng rng(54);
  const std::vector<Matrix> observables{kron(pauli_x(), identity(2)),
                                        kron(pauli_y(), identity(2)),
                                        kron(pauli_z(), pauli_z())};
  for (int trial = 0; trial < 8; ++trial) {
    const Circuit c = random_mixed_circuit(30, 0.1, rng);
    const double bound = circuit_diamond_bound(ensemble_slots(c));
    const Matrix rho = random_density(4, rng);
    for (const Matrix& m : observables) {
      const double gap =
          std::abs(averaged_expectation(c, rho, m) - ideal_expectation(c, rho, m));
      CHECK(gap <= bound * operator_norm(m) + 1e-9);
    }
    // The bound also caps the raw trace distance of the output states.
    const Matrix ideal_u = ideal_unitary(c);
    const Matrix ideal_state = ideal_u * rho * ideal_u.adjoint();
    CHECK(trace_norm(averaged_state(c, rho) - ideal_state) <= bound + 1e-9);
  }
}

TEST_CASE("sample_realization: pass-through, degenerate draws, histogram") {
  Rng rng(55);
  Circuit exact;
  exact.width = 1;
  exact.slots.push_back(GateSlot{{0}, z_rotation(0.4)});
  const Circuit realized = sample_realization(exact, rng);
  CHECK(matrix_near(std::get<Matrix>(realized.slots[0].content), z_rotation(0.4), 0.0));

  Circuit degenerate;
  degenerate.width = 1;
  degenerate.slots.push_back(
      GateSlot{{0}, z_rotation_ensemble(ZRotationSpec(0.35, {0.35, 0.40}))});
  for (int k = 0; k < 20; ++k) {
    const Circuit r = sample_realization(degenerate, rng);
    CHECK(matrix_near(std::get<Matrix>(r.slots[0].content), z_rotation(0.35), 0.0));
  }

  Circuit stochastic;
  stochastic.width = 1;
  stochastic.slots.push_back(GateSlot{{0}, pm_ensemble(0.0, 0.1)});
  const int samples = 10000;
  int plus_count = 0;
  for (int k = 0; k < samples; ++k) {
    const Circuit r = sample_realization(stochastic, rng);
    if (matrix_near(std::get<Matrix>(r.slots[0].content), z_rotation(0.1), 1e-12)) ++plus_count;
  }
  // 3 sigma for q = 1/2 over 10^4 draws.
  CHECK(std::abs(plus_count / static_cast<double>(samples) - 0.5) <= 3.0 * 0.005);
}

TEST_CASE("run_protocol: zero offsets reproduce the ideal expectation") {
  Circuit c;
  c.width = 1;
  for (int s = 0; s < 5; ++s) c.slots.push_back(GateSlot{{0}, z_rotation(0.21)});
  const Systematic sys{std::vector<double>(5, 0.0)};
  const ExperimentResult r = run_protocol(c, plus_density(), pauli_y(), sys, 1, 7);
  CHECK(r.value == doctest::Approx(ideal_expectation(c, plus_density(), pauli_y())).epsilon(1e-12));
  CHECK(r.error_vs_ideal <= 1e-12);
}

TEST_CASE("run_protocol: systematic offsets match the amplitude oracle") {
  const double theta = 0.0;
  const double eps = 0.02;
  const int n = 40;
  Circuit c;
  c.width = 1;
  for (int s = 0; s < n; ++s) c.slots.push_back(GateSlot{{0}, z_rotation(theta)});
  const Systematic sys{std::vector<double>(n, eps)};
  const ExperimentResult r = run_protocol(c, plus_density(), pauli_y(), sys, 1, 7);
  const double oracle = toy_sigma_y_oracle(std::vector<double>(n, theta + eps));
  CHECK(r.value == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(r.error_vs_ideal == doctest::Approx(std::abs(std::sin(2.0 * n * eps))).epsilon(1e-10));
}

TEST_CASE("run_protocol: fixed realizations are reproducible per seed") {
  Circuit c;
  c.width = 1;
  for (int s = 0; s < 30; ++s) c.slots.push_back(GateSlot{{0}, pm_ensemble(0.1, 0.05)});
  const ExperimentResult a = run_protocol(c, plus_density(), pauli_y(), FixedRealization{}, 1, 99);
  const ExperimentResult b = run_protocol(c, plus_density(), pauli_y(), FixedRealization{}, 1, 99);
  const ExperimentResult other =
      run_protocol(c, plus_density(), pauli_y(), FixedRealization{}, 1, 100);
  CHECK(a.value == b.value);
  CHECK(a.value != other.value);  // overwhelmingly likely for 30 coin flips
}

TEST_CASE("run_protocol: fixed-realization RMS follows the random-walk law") {
  const double eps = 0.01;
  const int n = 100;
  Circuit c;
  c.width = 1;
  for (int s = 0; s < n; ++s) c.slots.push_back(GateSlot{{0}, pm_ensemble(0.0, eps)});
  const int seeds = 400;
  std::vector<double> errors(seeds);
  for (int s = 0; s < seeds; ++s) {
    errors[static_cast<std::size_t>(s)] =
        run_protocol(c, plus_density(), pauli_y(), FixedRealization{}, 1,
                     seeded_stream(4242, {static_cast<std::uint64_t>(s)})())
            .error_vs_ideal;
  }
  const double measured = rms(errors);
  // Exact law: sqrt((1 - cos(4 eps)^N) / 2); ~ 2 eps sqrt(N) for small angles.
  const double exact = std::sqrt((1.0 - std::pow(std::cos(4.0 * eps), n)) / 2.0);
  CHECK(measured == doctest::Approx(exact).epsilon(0.10));
  CHECK(measured == doctest::Approx(2.0 * eps * std::sqrt(static_cast<double>(n))).epsilon(0.10));
}

TEST_CASE("run_protocol: resampled mean converges to the averaged expectation") {
  const double eps = 0.05;
  const int n = 100;
  Circuit c;
  c.width = 1;
  for (int s = 0; s < n; ++s) c.slots.push_back(GateSlot{{0}, pm_ensemble(0.0, eps)});
  const long shots = 100000;
  const ExperimentResult r =
      run_protocol(c, plus_density(), pauli_x(), Resampled{}, shots, 1234);
  const double target = averaged_expectation(c, plus_density(), pauli_x());
  REQUIRE(r.std_error > 0.0);
  CHECK(std::abs(r.value - target) <= 3.0 * r.std_error);
}

TEST_CASE("wide registers run in state-vector mode on pure inputs") {
  // Width 7 forces the state-vector path; compare against the analytic
  // single-qubit answer (gates act on one qubit of a product state).
  const int width = 7;
  const double theta = 0.13;
  Circuit c;
  c.width = width;
  for (int s = 0; s < 5; ++s) c.slots.push_back(GateSlot{{3}, z_rotation(theta)});

  const Eigen::Index dim = Eigen::Index{1} << width;
  Vector psi = Vector::Zero(dim);
  // |0..0> with qubit 3 in |+>: basis indices 0 and bit (width-1-3).
  const Eigen::Index flip = Eigen::Index{1} << (width - 1 - 3);
  psi(0) = M_SQRT1_2;
  psi(flip) = M_SQRT1_2;
  const Matrix rho = psi * psi.adjoint();

  const Matrix m = lift(pauli_x(), std::vector<int>{3}, width);
  CHECK(ideal_expectation(c, rho, m) ==
        doctest::Approx(std::cos(2.0 * 5 * theta)).epsilon(1e-12));

  // Sampled protocols work at this width too.
  Circuit noisy;
  noisy.width = width;
  for (int s = 0; s < 5; ++s) noisy.slots.push_back(GateSlot{{3}, pm_ensemble(theta, 0.05)});
  const ExperimentResult r =
      run_protocol(noisy, rho, m, FixedRealization{}, 1, 42);
  CHECK(std::isfinite(r.value));

  // Mixed states are rejected in state-vector mode.
  const Matrix mixed = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  CHECK_THROWS_AS(ideal_expectation(c, mixed, m), std::invalid_argument);
}

TEST_CASE("run_protocol: measurement shot noise stays near the exact expectation") {
  Circuit c;
  c.width = 1;
  c.slots.push_back(GateSlot{{0}, z_rotation(0.3)});
  RunOptions opts;
  opts.measurement_shot_noise = true;
  const ExperimentResult r =
      run_protocol(c, plus_density(), pauli_x(), FixedRealization{}, 20000, 5, opts);
  const double exact = ideal_expectation(c, plus_density(), pauli_x());
  CHECK(std::abs(r.value - exact) <= 4.0 * r.std_error);
  CHECK(r.shots == 20000);
}

TEST_CASE("slot order: applying slots in order is right-to-left multiplication") {
  Rng rng(56);
  Circuit c;
  c.width = 1;
  const Matrix g1 = hadamard();
  const Matrix g2 = t_gate();
  const Matrix g3 = pauli_x();
  c.slots.push_back(GateSlot{{0}, g1});
  c.slots.push_back(GateSlot{{0}, g2});
  c.slots.push_back(GateSlot{{0}, g3});
  CHECK(matrix_near(ideal_unitary(c), g3 * g2 * g1, 1e-14));
  CHECK_FALSE(matrix_near(ideal_unitary(c), g1 * g2 * g3, 1e-3));
}

TEST_CASE("scaling_sweep: systematic slope in the linear regime") {
  const ToyParams params{0.0, 1e-4};
  const std::vector<int> ns{10, 30, 100, 300, 1000};
  const SweepResult sweep = scaling_sweep(params, ns, ProtocolKind::Systematic, 1, 1, 7);
  CHECK(std::abs(sweep.fit.slope - 1.0) <= 0.05);
  CHECK(sweep.points.back().error ==
        doctest::Approx(std::abs(std::sin(2.0 * 1000 * 1e-4))).epsilon(1e-9));
}

TEST_CASE("scaling_sweep: fixed-realization slope near one half") {
  const ToyParams params{0.0, 1e-3};
  const std::vector<int> ns{10, 100, 1000};
  const SweepResult sweep = scaling_sweep(params, ns, ProtocolKind::FixedRealization, 150, 1, 7);
  CHECK(std::abs(sweep.fit.slope - 0.5) <= 0.15);
}

TEST_CASE("scaling_sweep: resampled slope one with an eps^2 coefficient") {
  const std::vector<int> ns{10, 30, 100, 300, 1000};
  const SweepResult a = scaling_sweep(ToyParams{0.0, 1e-3}, ns, ProtocolKind::Resampled, 1, 1, 7);
  const SweepResult b = scaling_sweep(ToyParams{0.0, 2e-3}, ns, ProtocolKind::Resampled, 1, 1, 7);
  CHECK(std::abs(a.fit.slope - 1.0) <= 0.05);
  const double ratio = b.points.back().error / a.points.back().error;
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.02));
  // Matches the dephasing closed form 1 - cos(2 eps)^N.
  CHECK(a.points.back().error ==
        doctest::Approx(1.0 - std::pow(std::cos(2e-3), 1000)).epsilon(1e-9));
}
