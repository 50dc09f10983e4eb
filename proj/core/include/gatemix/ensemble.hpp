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

#ifndef GATEMIX_ENSEMBLE_HPP_
#define GATEMIX_ENSEMBLE_HPP_

#include <vector>

#include "gatemix/channel.hpp"
#include "gatemix/matrix.hpp"
#include "gatemix/random.hpp"

// Mixed-unitary ensembles: a target gate approximated by a probabilistic
// mixture of implementable unitaries, with the per-gate and per-circuit
// bounds on the diamond distance between the averaged evolution and the
// ideal one.

namespace gatemix {

// A target unitary plus the menu of implementable options and their
// probabilities.  Validated on construction: probabilities sum to 1 within
// 1e-12, every option is unitary within 1e-9, all dimensions match.
struct MixedUnitaryEnsemble {
  MixedUnitaryEnsemble(Matrix target, std::vector<Matrix> options, std::vector<double> probs);

  Eigen::Index dim() const { return target.rows(); }
  std::size_t option_count() const { return options.size(); }

  Matrix target;
  std::vector<Matrix> options;
  std::vector<double> probs;
};

// The (generally non-unitary) average of the options.
Matrix mean_unitary(const MixedUnitaryEnsemble& e);

// Probability-weighted mean of ||W_a - mean||^2: how far the menu
// scatters around its average.
double mean_square_deviation(const MixedUnitaryEnsemble& e);

// Per-gate bound (mean-square deviation) + 2 ||mean - target|| on the
// diamond distance between
// the target's channel and the mixture channel.
double gate_diamond_bound(const MixedUnitaryEnsemble& e);

// Circuit bound: sum of per-gate bounds.
double circuit_diamond_bound(std::span<const MixedUnitaryEnsemble> ensembles);

// The mixture channel sum_a q(a) W_a . W_a^dag.
Channel mixture_channel(const MixedUnitaryEnsemble& e);

struct EnsembleDraw {
  std::size_t index;
  Matrix unitary;
};

// Draws option a with probability q(a); successive calls are independent.
EnsembleDraw sample(const MixedUnitaryEnsemble& e, Rng& rng);

// Maps an angle into (-pi, pi].
double normalize_angle(double theta);

// Z-rotation gate family exp(i theta sigma_z): a target angle and the menu
// of synthesizable option angles.  Angles are normalized to (-pi, pi] on
// construction so the closed-form phase arithmetic stays branch-free.
struct ZRotationSpec {
  ZRotationSpec(double target, std::vector<double> options);

  // Per-option angle offsets theta_a - theta_target.
  std::vector<double> offsets() const;

  double theta_target;
  std::vector<double> theta_options;
};

// Two-option mixture with probabilities solving
// q1 * theta1 + q2 * theta2 = theta_target.  The target must lie in the
// closed interval spanned by the options; an endpoint target resolves to the
// degenerate distribution on the matching option.
MixedUnitaryEnsemble z_rotation_ensemble(const ZRotationSpec& spec);

// Same family with caller-supplied probabilities (any option count >= 1);
// the mean constraint is the caller's responsibility here.
MixedUnitaryEnsemble z_rotation_ensemble(const ZRotationSpec& spec, std::vector<double> probs);

// Closed form ||mean - target|| = |sum_a q_a e^{i phi_a} - 1| for Z-rotation
// ensembles; agrees with operator_norm(mean_unitary - target) to 1e-12.
double z_rotation_norm_exact(const ZRotationSpec& spec, std::span<const double> probs);

// Quartic remainder coefficients for the small-angle series bounds below.
// Validated empirically over |phi| <= 0.3; these constants are a choice of
// this toolkit, not sharp values.
inline constexpr double kZNormRemainderCoeff = 1.0;
inline constexpr double kZDeviationRemainderCoeff = 2.0;

struct ZRotationSeriesBound {
  double norm_leading;     // (q1 phi1^2 + q2 phi2^2) / 2
  double norm_remainder;   // kZNormRemainderCoeff * (phi1^4 + phi2^4)
  double deviation_leading;    // q1 phi1^2 + q2 phi2^2
  double deviation_remainder;  // kZDeviationRemainderCoeff * (phi1^4 + phi2^4)
};

// Leading second-order terms of ||mean - target|| and the mean-square
// deviation for two-option
// Z-rotation mixtures, with explicit quartic remainder caps.
ZRotationSeriesBound z_rotation_series_bound(const ZRotationSpec& spec,
                                             std::span<const double> probs);

}  // namespace gatemix

#endif  // GATEMIX_ENSEMBLE_HPP_
