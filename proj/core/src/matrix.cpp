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

#include "gatemix/matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gatemix {

namespace {

void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_decomposable(const Matrix& a, const char* who) {
  if (a.rows() > kMaxDecompositionDim || a.cols() > kMaxDecompositionDim) {
    throw std::invalid_argument(std::string(who) + ": dimension exceeds the decomposition cap of " +
                                std::to_string(kMaxDecompositionDim));
  }
}

}  // namespace

double max_abs(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Cx& z = a(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

double unitarity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(a * a.adjoint() - Matrix::Identity(a.rows(), a.rows()));
}

bool is_unitary(const Matrix& a, double tol) { return unitarity_defect(a) <= tol; }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: dimension mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
  return a * b;
}

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double operator_norm(const Matrix& a) {
  require_decomposable(a, "operator_norm");
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double trace_norm(const Matrix& a) {
  require_square(a, "trace_norm");
  require_decomposable(a, "trace_norm");
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

HermitianEig hermitian_eig(const Matrix& a, double tol) {
  require_square(a, "hermitian_eig");
  require_decomposable(a, "hermitian_eig");
  const double defect = max_abs(a - a.adjoint());
  if (defect > tol) {
    throw std::invalid_argument("hermitian_eig: input deviates from Hermitian by " +
                                std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  return HermitianEig{es.eigenvalues(), es.eigenvectors()};
}

Matrix psd_sqrt(const Matrix& a) {
  HermitianEig eig = hermitian_eig(a);
  RealVector lam = eig.eigenvalues;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -kPsdRejectTol) {
      throw std::invalid_argument("psd_sqrt: input has eigenvalue " + std::to_string(lam(i)) +
                                  " below the PSD tolerance");
    }
    lam(i) = lam(i) > 0.0 ? std::sqrt(lam(i)) : 0.0;
  }
  Matrix b = eig.eigenvectors * lam.asDiagonal() * eig.eigenvectors.adjoint();
  return 0.5 * (b + Matrix(b.adjoint()));
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << Cx(0, 0), Cx(0, -1), Cx(0, 1), Cx(0, 0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix z_rotation(double theta) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, theta);
  m(1, 1) = std::polar(1.0, -theta);
  return m;
}

Matrix t_gate() { return z_rotation(M_PI / 8.0); }

Vector vectorize(const Matrix& a) {
  Vector v(a.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      v(k++) = a(i, j);
    }
  }
  return v;
}

Matrix devectorize(const Vector& v) {
  const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (dim * dim != v.size()) {
    throw std::invalid_argument("devectorize: length is not a perfect square");
  }
  Matrix a(dim, dim);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      a(i, j) = v(k++);
    }
  }
  return a;
}

Matrix partial_trace_first(const Matrix& ab, Eigen::Index dim_first) {
  require_square(ab, "partial_trace_first");
  if (dim_first <= 0 || ab.rows() % dim_first != 0) {
    throw std::invalid_argument("partial_trace_first: incompatible factor dimension");
  }
  const Eigen::Index d2 = ab.rows() / dim_first;
  Matrix out = Matrix::Zero(d2, d2);
  for (Eigen::Index k = 0; k < dim_first; ++k) {
    out += ab.block(k * d2, k * d2, d2, d2);
  }
  return out;
}

Matrix partial_trace_second(const Matrix& ab, Eigen::Index dim_second) {
  require_square(ab, "partial_trace_second");
  if (dim_second <= 0 || ab.rows() % dim_second != 0) {
    throw std::invalid_argument("partial_trace_second: incompatible factor dimension");
  }
  const Eigen::Index d1 = ab.rows() / dim_second;
  Matrix out = Matrix::Zero(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d1; ++j) {
      Cx s = 0.0;
      for (Eigen::Index k = 0; k < dim_second; ++k) {
        s += ab(i * dim_second + k, j * dim_second + k);
      }
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace gatemix
