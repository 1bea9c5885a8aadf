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

#ifndef ORBITVOL_LINALG_HPP
#define ORBITVOL_LINALG_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace orbitvol {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Tolerance for Hermiticity, unit trace and positivity checks, relative to
/// the Hilbert-Schmidt norm of the matrix.
inline constexpr double kStateTolerance = 1e-9;

/// Local dimensions of C^m (x) C^n. The bipartite basis index of |i,j> is
/// i*n + j (A-major), the same ordering kron(A, B) produces.
struct BipartiteDims {
  int m = 1;
  int n = 1;

  int total() const { return m * n; }
  bool operator==(const BipartiteDims&) const = default;
};

enum class Subsystem { A, B };

/// A validated density matrix: Hermitian, unit trace and positive
/// semi-definite up to kStateTolerance, with bipartite dimension metadata.
class DensityMatrix {
 public:
  /// Validates `mat`; throws ValidationError or DimensionError.
  DensityMatrix(ComplexMatrix mat, BipartiteDims dims);

  const ComplexMatrix& matrix() const { return mat_; }
  BipartiteDims dims() const { return dims_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  ComplexMatrix mat_;
  BipartiteDims dims_;
};

/// Eigenvalues sorted descending with the matching eigenvectors as columns.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the factor that is not `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims,
                            Subsystem keep);
ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

HermitianEigen eig_hermitian(const ComplexMatrix& h);

/// Descending eigenvalues of a density matrix.
std::vector<double> spectrum(const DensityMatrix& rho);

/// vec(M) = sum_ij M_ij |ij>, i.e. the row-major flattening of M.
ComplexVector vec(const ComplexMatrix& m);

/// Inverse of vec for a rows x cols matrix.
ComplexMatrix unvec(const ComplexVector& v, int rows, int cols);

/// Tr(X^dagger Y).
cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

double hs_norm(const ComplexMatrix& x);

bool is_hermitian(const ComplexMatrix& h, double tol = kStateTolerance);

/// -sum lambda ln lambda (nats), with 0 ln 0 = 0. Throws ValidationError
/// for an entry below -kStateTolerance.
double shannon_entropy(std::span<const double> probabilities);

double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho_A) + S(rho_B) - S(rho).
double mutual_information(const DensityMatrix& rho);

}  // namespace orbitvol

#endif  // ORBITVOL_LINALG_HPP
