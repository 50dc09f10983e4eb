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

#ifndef GATEMIX_MATRIX_HPP_
#define GATEMIX_MATRIX_HPP_

#include <Eigen/Dense>
#include <complex>

// Dense complex linear algebra at the small dimensions this toolkit needs
// (d <= 64).  Norms always go through full decompositions so that bound
// verification is not polluted by estimator error.

namespace gatemix {

using Cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical tolerances.  Fixed project-wide; tests may probe around them but
// production code never overrides the defaults.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kPsdClampTol = 1e-12;   // eigenvalues >= -tol are clamped to 0
inline constexpr double kPsdRejectTol = 1e-8;   // eigenvalues < -tol are rejected
inline constexpr Eigen::Index kMaxDecompositionDim = 64;

// Largest |a_ij| over all entries; 0 for empty matrices.
double max_abs(const Matrix& a);

bool all_finite(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = kHermitianTol);
bool is_unitary(const Matrix& a, double tol = kUnitaryTol);

// max |(a a^dag - I)_ij|, the figure of merit behind is_unitary.
double unitarity_defect(const Matrix& a);

// Standard matrix product.  Throws std::invalid_argument on a dimension
// mismatch.
Matrix multiply(const Matrix& a, const Matrix& b);

// Conjugate transpose.
Matrix adjoint(const Matrix& a);

// Kronecker product; the first factor is the slow index:
// kron(a, b)[i*p + k, j*q + l] = a(i, j) * b(k, l) for b of size p x q.
Matrix kron(const Matrix& a, const Matrix& b);

// Largest singular value, via a full SVD.
double operator_norm(const Matrix& a);

// Sum of singular values.  Requires a square input.
double trace_norm(const Matrix& a);

struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns, orthonormal
};

// Full eigendecomposition of a Hermitian matrix.  Rejects inputs whose
// max |a - a^dag| deviation exceeds `tol`.
HermitianEig hermitian_eig(const Matrix& a, double tol = kHermitianTol);

// Hermitian PSD square root: returns B with B*B = a.  Eigenvalues in
// [-kPsdClampTol, 0) are clamped to zero; anything below -kPsdRejectTol is
// rejected.
Matrix psd_sqrt(const Matrix& a);

// Constructors for the handful of fixed matrices the experiments use.
Matrix identity(Eigen::Index dim);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// exp(i theta sigma_z) = diag(e^{i theta}, e^{-i theta}).
Matrix z_rotation(double theta);

// The T gate exp(i pi/8 sigma_z), fixed phase convention.
Matrix t_gate();

// Column-stacking vectorization: vectorize(a)[j*rows + i] = a(i, j).
Vector vectorize(const Matrix& a);
Matrix devectorize(const Vector& v);  // square matrices only

// Partial traces of a bipartite operator on C^{d1} (x) C^{d2} laid out with
// the kron convention above (first factor slow).
Matrix partial_trace_first(const Matrix& ab, Eigen::Index dim_first);
Matrix partial_trace_second(const Matrix& ab, Eigen::Index dim_second);

}  // namespace gatemix

#endif  // GATEMIX_MATRIX_HPP_
