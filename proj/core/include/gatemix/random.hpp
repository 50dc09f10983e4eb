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

#ifndef GATEMIX_RANDOM_HPP_
#define GATEMIX_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <span>

#include "gatemix/matrix.hpp"

// Seeded randomness with portable draw sequences.  All sampling goes through
// the helpers below instead of std::*_distribution, whose output is
// implementation-defined; identical seeds must replay identical experiments.

namespace gatemix {

using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53-bit resolution.
double uniform01(Rng& rng);

// Uniform double in [lo, hi).
double uniform(Rng& rng, double lo, double hi);

// Standard normal via Box-Muller.
double gaussian(Rng& rng);

// Index k with probability probs[k]; probs are assumed normalized.
std::size_t sample_index(std::span<const double> probs, Rng& rng);

// SplitMix64 finalizer; used to derive independent per-task streams.
std::uint64_t mix64(std::uint64_t x);

// Deterministic stream derived from a base seed plus a path of indices, so
// that sweep points own independent generators regardless of visit order.
Rng seeded_stream(std::uint64_t base_seed, std::initializer_list<std::uint64_t> path);

// Matrix with i.i.d. standard complex Gaussian entries.
Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

// Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
Matrix haar_unitary(Eigen::Index dim, Rng& rng);

Matrix random_hermitian(Eigen::Index dim, Rng& rng);

// Random full-rank density matrix, G G^dag normalized to unit trace.
Matrix random_density(Eigen::Index dim, Rng& rng);

}  // namespace gatemix

#endif  // GATEMIX_RANDOM_HPP_
