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

#ifndef GATEMIX_TESTS_SUPPORT_HPP_
#define GATEMIX_TESTS_SUPPORT_HPP_

#include <cmath>
#include <vector>

#include "gatemix/channel.hpp"
#include "gatemix/matrix.hpp"
#include "gatemix/random.hpp"

// Shared fixtures and independent oracles.  Everything here recomputes its
// answers from first principles (power iteration, brute-force grids, plain
// amplitude chains) so the library paths under test are checked against
// genuinely different routes.

namespace gatemix::testing {

inline bool matrix_near(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

inline Matrix plus_density() {
  Matrix rho(2, 2);
  rho << 0.5, 0.5, 0.5, 0.5;
  return rho;
}

inline Matrix minus_density() {
  Matrix rho(2, 2);
  rho << 0.5, -0.5, -0.5, 0.5;
  return rho;
}

inline Matrix basis_density(int k) {
  Matrix rho = Matrix::Zero(2, 2);
  rho(k, k) = 1.0;
  return rho;
}

// exp(i H) for Hermitian H, via the eigendecomposition.
inline Matrix expi_hermitian(const Matrix& h) {
  const HermitianEig eig = hermitian_eig(h);
  Vector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, eig.eigenvalues(k));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

// Largest singular value by brute-force maximization of ||A v|| over unit
// vectors: random starts polished with power iteration on A^dag A.
inline double operator_norm_oracle(const Matrix& a, Rng& rng, int starts = 50, int iters = 60) {
  const Matrix m = a.adjoint() * a;
  double best = 0.0;
  for (int s = 0; s < starts; ++s) {
    Vector v = ginibre(a.cols(), 1, rng);
    v.normalize();
    for (int it = 0; it < iters; ++it) {
      v = m * v;
      const double n = v.norm();
      if (n == 0.0) break;
      v /= n;
    }
    best = std::max(best, (a * v).norm());
  }
  return best;
}

// Random CPTP channel: Ginibre Kraus candidates renormalized through
// S^{-1/2} so completeness holds exactly.
inline Channel random_cptp_channel(Eigen::Index dim, int n_kraus, Rng& rng) {
  std::vector<Matrix> raw;
  raw.reserve(static_cast<std::size_t>(n_kraus));
  Matrix s = Matrix::Zero(dim, dim);
  for (int k = 0; k < n_kraus; ++k) {
    raw.push_back(ginibre(dim, dim, rng));
    s += raw.back().adjoint() * raw.back();
  }
  const HermitianEig eig = hermitian_eig(0.5 * (s + Matrix(s.adjoint())), 1e-8);
  Vector inv_sqrt(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < inv_sqrt.size(); ++k) {
    inv_sqrt(k) = 1.0 / std::sqrt(eig.eigenvalues(k));
  }
  const Matrix t = eig.eigenvectors * inv_sqrt.asDiagonal() * eig.eigenvectors.adjoint();
  std::vector<Matrix> kraus;
  kraus.reserve(raw.size());
  for (const Matrix& g : raw) {
    kraus.push_back(g * t);
  }
  return Channel::from_kraus(kraus);
}

// Brute-force lower bound on the diamond norm of e - g: a dense sweep of
// Bloch-ball inputs evaluated with an SVD trace norm.  Independent of the
// optimizer in the library.
inline double diamond_lower_oracle(const Channel& e, const Channel& g, int points_per_axis = 25) {
  const Matrix j = to_choi(Channel::difference(e, g)).matrix;
  double best = 0.0;
  const int n = points_per_axis;
  for (int ix = 0; ix < n; ++ix) {
    for (int iy = 0; iy < n; ++iy) {
      for (int iz = 0; iz < n; ++iz) {
        const double rx = -1.0 + 2.0 * ix / (n - 1);
        const double ry = -1.0 + 2.0 * iy / (n - 1);
        const double rz = -1.0 + 2.0 * iz / (n - 1);
        if (rx * rx + ry * ry + rz * rz > 1.0) continue;
        Matrix rho(2, 2);
        rho(0, 0) = 0.5 * (1.0 + rz);
        rho(1, 1) = 0.5 * (1.0 - rz);
        rho(0, 1) = 0.5 * Cx(rx, -ry);
        rho(1, 0) = 0.5 * Cx(rx, ry);
        const Matrix b = kron(identity(2), psd_sqrt(rho));
        best = std::max(best, trace_norm(b * j * b));
      }
    }
  }
  return best;
}

// <sigma_y> after N successive diag(e^{i a}, e^{-i a}) gates on |+>,
// computed as a plain amplitude chain.
inline double toy_sigma_y_oracle(const std::vector<double>& angles) {
  Cx amp0 = M_SQRT1_2;
  Cx amp1 = M_SQRT1_2;
  for (double a : angles) {
    amp0 *= std::polar(1.0, a);
    amp1 *= std::polar(1.0, -a);
  }
  // <sigma_y> = 2 Im(conj(amp0) amp1)
  return 2.0 * std::imag(std::conj(amp0) * amp1);
}

inline double toy_sigma_x_oracle(const std::vector<double>& angles) {
  Cx amp0 = M_SQRT1_2;
  Cx amp1 = M_SQRT1_2;
  for (double a : angles) {
    amp0 *= std::polar(1.0, a);
    amp1 *= std::polar(1.0, -a);
  }
  return 2.0 * std::real(std::conj(amp0) * amp1);
}

}  // namespace gatemix::testing

#endif  // GATEMIX_TESTS_SUPPORT_HPP_
