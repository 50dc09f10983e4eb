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

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gatemix/channel.hpp"
#include "gatemix/random.hpp"

// Diamond norm of a Hermiticity-preserving map Phi via the identity
//
//   ||Phi||_diamond = max_rho || (I (x) sqrt(rho)) J(Phi) (I (x) sqrt(rho)) ||_1
//
// with rho ranging over d-dimensional density matrices.  The sandwiched
// matrix is Hermitian whenever J is, so its trace norm is the sum of absolute
// eigenvalues.  For qubits the search walks the Bloch ball (dense grid, then
// projected coordinate descent); for d = 3, 4 it refines an unconstrained
// rho = A^dag A / tr parameterization from seeded random starts.

namespace gatemix {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector3d;

// Closed-form PSD square root of a 2x2 density matrix (Cayley-Hamilton).
Matrix2cd sqrt_psd_2x2(const Matrix2cd& rho) {
  const double tr = rho.trace().real();
  double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
  if (det < 0.0) det = 0.0;
  const double s = std::sqrt(det);
  const double t = std::sqrt(tr + 2.0 * s);
  if (t < 1e-12) return Matrix2cd::Zero();
  Matrix2cd out = rho;
  out(0, 0) += s;
  out(1, 1) += s;
  return out / t;
}

Matrix sqrt_psd_clamped(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  RealVector lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    lam(i) = lam(i) > 0.0 ? std::sqrt(lam(i)) : 0.0;
  }
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix2cd bloch_density(const Vector3d& r) {
  Matrix2cd rho;
  rho(0, 0) = 0.5 * (1.0 + r.z());
  rho(1, 1) = 0.5 * (1.0 - r.z());
  rho(0, 1) = 0.5 * Cx(r.x(), -r.y());
  rho(1, 0) = 0.5 * Cx(r.x(), r.y());
  return rho;
}

Vector3d clip_to_ball(Vector3d r) {
  const double n = r.norm();
  if (n > 1.0) r /= n;
  return r;
}

// Qubit objective on fixed-size matrices; the 16x16 generic path would
// dominate the acceptance-suite runtime otherwise.
class QubitObjective {
 public:
  explicit QubitObjective(const Matrix& j) : j_(j) {}

  double at_bloch(const Vector3d& r) const {
    const Matrix2cd sq = sqrt_psd_2x2(bloch_density(r));
    Matrix4cd b = Matrix4cd::Zero();
    b.block<2, 2>(0, 0) = sq;
    b.block<2, 2>(2, 2) = sq;
    const Matrix4cd k = b * j_ * b;
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(k, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }

 private:
  Matrix4cd j_;
};

double refine_bloch(const QubitObjective& obj, Vector3d r, const DiamondNormOptions& opts) {
  r = clip_to_ball(r);
  double best = obj.at_bloch(r);
  double step = opts.initial_step;
  int passes = 0;
  while (step > opts.final_step && passes < opts.max_passes) {
    bool improved = false;
    for (int k = 0; k < 3; ++k) {
      for (double dir : {+1.0, -1.0}) {
        Vector3d candidate = r;
        candidate(k) += dir * step;
        candidate = clip_to_ball(candidate);
        const double value = obj.at_bloch(candidate);
        if (value > best) {
          best = value;
          r = candidate;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= opts.step_shrink;
    ++passes;
  }
  return best;
}

class GeneralObjective {
 public:
  GeneralObjective(Matrix j, Eigen::Index d) : j_(std::move(j)), d_(d) {}

  double at_rho(const Matrix& rho) const {
    const Matrix b = kron(Matrix::Identity(d_, d_), sqrt_psd_clamped(rho));
    const Matrix k = b * j_ * b;
    Eigen::SelfAdjointEigenSolver<Matrix> es(k, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }

  // Params are Re/Im entries of A with rho = A^dag A / tr(A^dag A).
  Matrix rho_from_params(const std::vector<double>& t) const {
    Matrix a(d_, d_);
    std::size_t k = 0;
    for (Eigen::Index j = 0; j < d_; ++j) {
      for (Eigen::Index i = 0; i < d_; ++i) {
        a(i, j) = Cx(t[k], t[k + 1]);
        k += 2;
      }
    }
    Matrix rho = a.adjoint() * a;
    const double tr = rho.trace().real();
    if (tr < 1e-14) {
      return Matrix::Identity(d_, d_) / static_cast<double>(d_);
    }
    rho /= tr;
    return 0.5 * (rho + Matrix(rho.adjoint()));
  }

  double at_params(const std::vector<double>& t) const { return at_rho(rho_from_params(t)); }

  std::vector<double> params_from_rho(const Matrix& rho) const {
    const Matrix a = sqrt_psd_clamped(rho);
    std::vector<double> t(static_cast<std::size_t>(2 * d_ * d_));
    std::size_t k = 0;
    for (Eigen::Index j = 0; j < d_; ++j) {
      for (Eigen::Index i = 0; i < d_; ++i) {
        t[k] = a(i, j).real();
        t[k + 1] = a(i, j).imag();
        k += 2;
      }
    }
    return t;
  }

 private:
  Matrix j_;
  Eigen::Index d_;
};

double refine_general(const GeneralObjective& obj, std::vector<double> t,
                      const DiamondNormOptions& opts) {
  double best = obj.at_params(t);
  double step = opts.initial_step;
  int passes = 0;
  while (step > opts.final_step && passes < opts.max_passes) {
    bool improved = false;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const double original = t[k];
      for (double dir : {+1.0, -1.0}) {
        t[k] = original + dir * step;
        const double value = obj.at_params(t);
        if (value > best) {
          best = value;
          improved = true;
          break;
        }
        t[k] = original;
      }
    }
    if (!improved) step *= opts.step_shrink;
    ++passes;
  }
  return best;
}

}  // namespace

double diamond_norm_diff(const Channel& e, const Channel& g, const DiamondNormOptions& opts) {
  if (e.input_dim() != g.input_dim()) {
    throw std::invalid_argument("diamond_norm_diff: dimension mismatch");
  }
  const Eigen::Index d = e.input_dim();
  if (d > kMaxDiamondDim) {
    throw std::invalid_argument("diamond_norm_diff: dimension " + std::to_string(d) +
                                " exceeds the supported cap of " +
                                std::to_string(kMaxDiamondDim));
  }

  Matrix j = to_choi(Channel::difference(e, g)).matrix;
  const double herm_defect = max_abs(j - Matrix(j.adjoint()));
  if (herm_defect > 1e-8) {
    throw std::invalid_argument(
        "diamond_norm_diff: difference map is not Hermiticity-preserving (Choi defect " +
        std::to_string(herm_defect) + ")");
  }
  j = 0.5 * (j + Matrix(j.adjoint()));

  Rng rng = seeded_stream(opts.seed, {static_cast<std::uint64_t>(d)});

  if (d == 2) {
    const QubitObjective obj(j);

    // Maximally mixed start doubles as the Choi lower bound ||J||_1 / 2.
    Vector3d best_start = Vector3d::Zero();
    double best_start_value = obj.at_bloch(best_start);

    const int n = opts.bloch_grid_points;
    if (n > 1) {
      for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
          for (int iz = 0; iz < n; ++iz) {
            const Vector3d r(-1.0 + 2.0 * ix / (n - 1), -1.0 + 2.0 * iy / (n - 1),
                             -1.0 + 2.0 * iz / (n - 1));
            if (r.squaredNorm() > 1.0 + 1e-12) continue;
            const double value = obj.at_bloch(r);
            if (value > best_start_value) {
              best_start_value = value;
              best_start = r;
            }
          }
        }
      }
    }

    double best = refine_bloch(obj, best_start, opts);
    for (int k = 0; k < opts.random_starts; ++k) {
      Vector3d r(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
      best = std::max(best, refine_bloch(obj, clip_to_ball(r), opts));
    }
    return best;
  }

  const GeneralObjective obj(std::move(j), d);
  const Matrix mixed = Matrix::Identity(d, d) / static_cast<double>(d);
  double best = refine_general(obj, obj.params_from_rho(mixed), opts);
  for (int k = 0; k < opts.random_starts; ++k) {
    best = std::max(best, refine_general(obj, obj.params_from_rho(random_density(d, rng)), opts));
  }
  return best;
}

}  // namespace gatemix
