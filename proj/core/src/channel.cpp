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

#include "gatemix/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace gatemix {

namespace {

// vec(A X B^dag) = (conj(B) (x) A) vec(X) under column stacking, so a Kraus
// term contributes conj(A) (x) A.
Matrix kraus_superoperator(const std::vector<Matrix>& ops) {
  const Eigen::Index d = ops.front().rows();
  Matrix s = Matrix::Zero(d * d, d * d);
  for (const Matrix& a : ops) {
    s += kron(a.conjugate(), a);
  }
  return s;
}

constexpr std::size_t kMaxRetainedKraus = 64;

}  // namespace

Channel::Channel(Eigen::Index dim, Matrix superop, std::vector<Matrix> kraus, ChannelKind kind)
    : dim_(dim), superop_(std::move(superop)), kraus_(std::move(kraus)), kind_(kind) {}

Channel Channel::from_unitary(const Matrix& u) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("Channel::from_unitary: matrix must be square");
  }
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTol) {
    throw std::invalid_argument("Channel::from_unitary: input deviates from unitary by " +
                                std::to_string(defect));
  }
  std::vector<Matrix> ops{u};
  Matrix superop = kraus_superoperator(ops);
  return Channel(u.rows(), std::move(superop), std::move(ops), ChannelKind::Cptp);
}

Channel Channel::from_kraus(const std::vector<Matrix>& ops) {
  if (ops.empty()) {
    throw std::invalid_argument("Channel::from_kraus: empty Kraus set");
  }
  const Eigen::Index d = ops.front().rows();
  for (const Matrix& a : ops) {
    if (a.rows() != d || a.cols() != d) {
      throw std::invalid_argument("Channel::from_kraus: Kraus operators must share a square shape");
    }
  }
  Matrix completeness = Matrix::Zero(d, d);
  for (const Matrix& a : ops) {
    completeness += a.adjoint() * a;
  }
  const double defect = max_abs(completeness - Matrix::Identity(d, d));
  if (defect > kKrausCompletenessTol) {
    throw std::invalid_argument(
        "Channel::from_kraus: completeness sum deviates from identity by " +
        std::to_string(defect));
  }
  return Channel(d, kraus_superoperator(ops), ops, ChannelKind::Cptp);
}

Channel Channel::identity_channel(Eigen::Index dim) {
  return from_unitary(Matrix::Identity(dim, dim));
}

Channel Channel::difference(const Channel& e, const Channel& g) {
  if (e.input_dim() != g.input_dim()) {
    throw std::invalid_argument("Channel::difference: dimension mismatch");
  }
  return Channel(e.input_dim(), e.superoperator() - g.superoperator(), {},
                 ChannelKind::HermiticityPreservingDifference);
}

Matrix Channel::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw std::invalid_argument("Channel::apply: state dimension mismatch");
  }
  return devectorize(superop_ * vectorize(rho));
}

Channel mix(const std::vector<Channel>& channels, const std::vector<double>& probs) {
  if (channels.empty() || channels.size() != probs.size()) {
    throw std::invalid_argument("mix: need matching, nonempty channel and probability lists");
  }
  const Eigen::Index d = channels.front().input_dim();
  double sum = 0.0;
  for (double q : probs) {
    if (!(q >= 0.0)) throw std::invalid_argument("mix: negative probability");
    sum += q;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("mix: probabilities sum to " + std::to_string(sum));
  }

  Matrix superop = Matrix::Zero(d * d, d * d);
  bool all_kraus = true;
  bool all_cptp = true;
  std::vector<Matrix> kraus;
  for (std::size_t k = 0; k < channels.size(); ++k) {
    if (channels[k].input_dim() != d) {
      throw std::invalid_argument("mix: channel dimension mismatch");
    }
    superop += probs[k] * channels[k].superoperator();
    all_kraus = all_kraus && channels[k].has_kraus();
    all_cptp = all_cptp && channels[k].kind() == ChannelKind::Cptp;
  }
  if (all_kraus) {
    for (std::size_t k = 0; k < channels.size(); ++k) {
      const double root = std::sqrt(probs[k]);
      for (const Matrix& a : channels[k].kraus()) {
        kraus.push_back(root * a);
      }
    }
    if (kraus.size() > kMaxRetainedKraus) kraus.clear();
  }
  return Channel(d, std::move(superop), std::move(kraus),
                 all_cptp ? ChannelKind::Cptp : ChannelKind::HermiticityPreservingDifference);
}

Channel compose(const Channel& outer, const Channel& inner) {
  if (outer.input_dim() != inner.input_dim()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  std::vector<Matrix> kraus;
  if (outer.has_kraus() && inner.has_kraus() &&
      outer.kraus().size() * inner.kraus().size() <= kMaxRetainedKraus) {
    for (const Matrix& a : outer.kraus()) {
      for (const Matrix& b : inner.kraus()) {
        kraus.push_back(a * b);
      }
    }
  }
  const ChannelKind kind =
      (outer.kind() == ChannelKind::Cptp && inner.kind() == ChannelKind::Cptp)
          ? ChannelKind::Cptp
          : ChannelKind::HermiticityPreservingDifference;
  return Channel(outer.input_dim(), outer.superoperator() * inner.superoperator(),
                 std::move(kraus), kind);
}

Matrix apply(const Channel& c, const Matrix& rho) { return c.apply(rho); }

ChoiMatrix to_choi(const Channel& c) {
  const Eigen::Index d = c.input_dim();
  const Matrix& s = c.superoperator();
  Matrix j = Matrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index jj = 0; jj < d; ++jj) {
      // Column of the superoperator holding Phi(|i><j|), already vectorized.
      const Eigen::Index col = jj * d + i;
      for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index p = 0; p < d; ++p) {
          j(p * d + i, r * d + jj) += s(r * d + p, col);
        }
      }
    }
  }
  return ChoiMatrix{std::move(j), d};
}

}  // namespace gatemix
