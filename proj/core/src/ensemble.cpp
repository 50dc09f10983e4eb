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

#include "gatemix/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace gatemix {

MixedUnitaryEnsemble::MixedUnitaryEnsemble(Matrix target_in, std::vector<Matrix> options_in,
                                           std::vector<double> probs_in)
    : target(std::move(target_in)), options(std::move(options_in)), probs(std::move(probs_in)) {
  if (options.empty()) {
    throw std::invalid_argument("MixedUnitaryEnsemble: at least one option is required");
  }
  if (options.size() != probs.size()) {
    throw std::invalid_argument("MixedUnitaryEnsemble: option/probability count mismatch");
  }
  if (target.rows() != target.cols()) {
    throw std::invalid_argument("MixedUnitaryEnsemble: target must be square");
  }
  double sum = 0.0;
  for (double q : probs) {
    if (!(q >= 0.0) || q > 1.0 + 1e-12) {
      throw std::invalid_argument("MixedUnitaryEnsemble: probability outside [0, 1]");
    }
    sum += q;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("MixedUnitaryEnsemble: probabilities sum to " +
                                std::to_string(sum));
  }
  for (const Matrix& w : options) {
    if (w.rows() != target.rows() || w.cols() != target.cols()) {
      throw std::invalid_argument("MixedUnitaryEnsemble: option dimension mismatch");
    }
    const double defect = unitarity_defect(w);
    if (defect > kUnitaryTol) {
      throw std::invalid_argument("MixedUnitaryEnsemble: option deviates from unitary by " +
                                  std::to_string(defect));
    }
  }
}

Matrix mean_unitary(const MixedUnitaryEnsemble& e) {
  Matrix mean = Matrix::Zero(e.dim(), e.dim());
  for (std::size_t a = 0; a < e.options.size(); ++a) {
    mean += e.probs[a] * e.options[a];
  }
  return mean;
}

double mean_square_deviation(const MixedUnitaryEnsemble& e) {
  const Matrix mean = mean_unitary(e);
  double d = 0.0;
  for (std::size_t a = 0; a < e.options.size(); ++a) {
    const double dist = operator_norm(e.options[a] - mean);
    d += e.probs[a] * dist * dist;
  }
  return d;
}

double gate_diamond_bound(const MixedUnitaryEnsemble& e) {
  return mean_square_deviation(e) + 2.0 * operator_norm(mean_unitary(e) - e.target);
}

double circuit_diamond_bound(std::span<const MixedUnitaryEnsemble> ensembles) {
  double total = 0.0;
  for (const MixedUnitaryEnsemble& e : ensembles) {
    total += gate_diamond_bound(e);
  }
  return total;
}

Channel mixture_channel(const MixedUnitaryEnsemble& e) {
  std::vector<Channel> parts;
  parts.reserve(e.options.size());
  for (const Matrix& w : e.options) {
    parts.push_back(Channel::from_unitary(w));
  }
  return mix(parts, e.probs);
}

EnsembleDraw sample(const MixedUnitaryEnsemble& e, Rng& rng) {
  const std::size_t index = sample_index(e.probs, rng);
  return EnsembleDraw{index, e.options[index]};
}

double normalize_angle(double theta) {
  double r = std::remainder(theta, 2.0 * M_PI);
  if (r <= -M_PI) r += 2.0 * M_PI;
  return r;
}

ZRotationSpec::ZRotationSpec(double target, std::vector<double> options)
    : theta_target(normalize_angle(target)), theta_options(std::move(options)) {
  if (theta_options.empty()) {
    throw std::invalid_argument("ZRotationSpec: at least one option angle is required");
  }
  for (double& t : theta_options) {
    t = normalize_angle(t);
  }
}

std::vector<double> ZRotationSpec::offsets() const {
  std::vector<double> out(theta_options.size());
  for (std::size_t a = 0; a < theta_options.size(); ++a) {
    out[a] = theta_options[a] - theta_target;
  }
  return out;
}

MixedUnitaryEnsemble z_rotation_ensemble(const ZRotationSpec& spec) {
  if (spec.theta_options.size() != 2) {
    throw std::invalid_argument("z_rotation_ensemble: the mean-constraint solver needs exactly "
                                "two options; pass explicit probabilities otherwise");
  }
  const double theta = spec.theta_target;
  const double t1 = spec.theta_options[0];
  const double t2 = spec.theta_options[1];
  if (t1 == t2) {
    if (theta != t1) {
      throw std::invalid_argument("z_rotation_ensemble: equal options cannot mix to a "
                                  "different target");
    }
    return z_rotation_ensemble(spec, {1.0, 0.0});
  }
  const double lo = std::min(t1, t2);
  const double hi = std::max(t1, t2);
  if (theta < lo || theta > hi) {
    throw std::invalid_argument("z_rotation_ensemble: target angle " + std::to_string(theta) +
                                " lies outside the option interval [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]");
  }
  // Endpoint targets resolve to the degenerate distribution: deterministic,
  // no sampling noise.
  if (theta == t1) return z_rotation_ensemble(spec, {1.0, 0.0});
  if (theta == t2) return z_rotation_ensemble(spec, {0.0, 1.0});
  const double q1 = (t2 - theta) / (t2 - t1);
  return z_rotation_ensemble(spec, {q1, 1.0 - q1});
}

MixedUnitaryEnsemble z_rotation_ensemble(const ZRotationSpec& spec, std::vector<double> probs) {
  std::vector<Matrix> options;
  options.reserve(spec.theta_options.size());
  for (double t : spec.theta_options) {
    options.push_back(z_rotation(t));
  }
  return MixedUnitaryEnsemble(z_rotation(spec.theta_target), std::move(options),
                              std::move(probs));
}

double z_rotation_norm_exact(const ZRotationSpec& spec, std::span<const double> probs) {
  if (probs.size() != spec.theta_options.size()) {
    throw std::invalid_argument("z_rotation_norm_exact: probability count mismatch");
  }
  const std::vector<double> phi = spec.offsets();
  Cx acc = 0.0;
  for (std::size_t a = 0; a < probs.size(); ++a) {
    acc += probs[a] * std::polar(1.0, phi[a]);
  }
  return std::abs(acc - 1.0);
}

ZRotationSeriesBound z_rotation_series_bound(const ZRotationSpec& spec,
                                             std::span<const double> probs) {
  if (spec.theta_options.size() != 2 || probs.size() != 2) {
    throw std::invalid_argument("z_rotation_series_bound: two-option form only");
  }
  const std::vector<double> phi = spec.offsets();
  const double second = probs[0] * phi[0] * phi[0] + probs[1] * phi[1] * phi[1];
  const double quartic = phi[0] * phi[0] * phi[0] * phi[0] + phi[1] * phi[1] * phi[1] * phi[1];
  return ZRotationSeriesBound{
      0.5 * second,
      kZNormRemainderCoeff * quartic,
      second,
      kZDeviationRemainderCoeff * quartic,
  };
}

}  // namespace gatemix
