// Copyright 2026 The orbitvol Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitvol/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "orbitvol/errors.hpp"

namespace orbitvol {

namespace {

double relative_scale(const ComplexMatrix& m) {
  return std::max(1.0, hs_norm(m));
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, BipartiteDims dims)
    : mat_(std::move(mat)), dims_(dims) {
  if (dims_.m < 1 || dims_.n < 1) {
    throw DimensionError("bipartite dimensions must be positive");
  }
  if (mat_.rows() != mat_.cols()) {
    throw DimensionError("density matrix must be square");
  }
  if (mat_.rows() != dims_.total()) {
    throw DimensionError("matrix size " + std::to_string(mat_.rows()) +
                         " does not match dims " + std::to_string(dims_.m) +
                         "x" + std::to_string(dims_.n));
  }
  if (!is_hermitian(mat_)) {
    throw ValidationError("density matrix is not Hermitian");
  }
  const double scale = relative_scale(mat_);
  const cplx tr = mat_.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > kStateTolerance * scale) {
    throw ValidationError("density matrix trace is " +
                          std::to_string(tr.real()) + ", expected 1");
  }
  const auto eig = eig_hermitian(mat_);
  if (eig.values.back() < -kStateTolerance * scale) {
    throw ValidationError("density matrix has negative eigenvalue " +
                          std::to_string(eig.values.back()));
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims,
                            Subsystem keep) {
  const int m = dims.m;
  const int n = dims.n;
  if (m < 1 || n < 1 || rho.rows() != m * n || rho.cols() != m * n) {
    throw DimensionError("partial_trace: matrix is not (m*n)x(m*n)");
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) acc += rho(i * n + j, k * n + j);
        out(i, k) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      cplx acc = 0.0;
      for (int i = 0; i < m; ++i) acc += rho(i * n + j, i * n + l);
      out(j, l) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  return partial_trace(rho.matrix(), rho.dims(), keep);
}

HermitianEigen eig_hermitian(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw DimensionError("eig_hermitian: matrix is not square");
  }
  if (!is_hermitian(h)) {
    throw ValidationError("eig_hermitian: matrix is not Hermitian");
  }
  // Symmetrize so round-off in the input cannot leak into the solver.
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("eig_hermitian: eigensolver did not converge");
  }
  // Eigen returns ascending order.
  const auto d = static_cast<Eigen::Index>(h.rows());
  HermitianEigen out;
  out.values.resize(static_cast<std::size_t>(d));
  out.vectors.resize(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(d - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(d - 1 - k);
  }
  return out;
}

std::vector<double> spectrum(const DensityMatrix& rho) {
  return eig_hermitian(rho.matrix()).values;
}

ComplexVector vec(const ComplexMatrix& m) {
  ComplexVector out(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  }
  return out;
}

ComplexMatrix unvec(const ComplexVector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw DimensionError("unvec: length does not match rows*cols");
  }
  ComplexMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out(i, j) = v(i * cols + j);
  }
  return out;
}

cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  return (x.adjoint() * y).trace();
}

double hs_norm(const ComplexMatrix& x) { return x.norm(); }

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  const double scale = std::max(1.0, hs_norm(h));
  return (h - h.adjoint()).norm() <= tol * scale;
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p < -kStateTolerance) {
      throw ValidationError("entropy: negative eigenvalue " +
                            std::to_string(p));
    }
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto lambda = spectrum(rho);
  return shannon_entropy(lambda);
}

double mutual_information(const DensityMatrix& rho) {
  const auto dims = rho.dims();
  const DensityMatrix rho_a(partial_trace(rho, Subsystem::A), {dims.m, 1});
  const DensityMatrix rho_b(partial_trace(rho, Subsystem::B), {1, dims.n});
  return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) -
         von_neumann_entropy(rho);
}

}  // namespace orbitvol
