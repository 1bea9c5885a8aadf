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

#ifndef ORBITVOL_LIEGEOM_HPP
#define ORBITVOL_LIEGEOM_HPP

#include <span>
#include <vector>

#include "orbitvol/eig_grid.hpp"
#include "orbitvol/exactnum.hpp"

namespace orbitvol {

// Root data and volume formulas for U(n) and for the local unitary group
// U(m) (x) U(n) acting on C^m (x) C^n. All group volumes are with respect to
// the Hilbert-Schmidt metric; flag manifolds carry the quotient measure.

enum class RootFactor { A, B };

/// A positive root alpha written in the coordinates of the toral algebra,
/// together with its exact pairing <alpha, varpi> with the Weyl vector.
struct PositiveRoot {
  RootFactor factor = RootFactor::A;
  int i = 0;  ///< 0-based, i < j
  int j = 0;
  std::vector<BigRational> coords;
  BigRational pairing;
};

/// Positive roots e_i - e_j (i < j) of u(n) in coordinates of R^n, with
/// pairings computed against the Weyl vector half the sum of all roots.
std::vector<PositiveRoot> unitary_roots(int n);

/// Weyl vector of u(n): ((n+1)/2 - k) for k = 1..n.
std::vector<BigRational> weyl_vector(int n);

/// Positive roots of u(m) (x) 1 + 1 (x) u(n). Coordinates live on the m*n
/// grid of diagonal entries (index i*n + j): an A-root alpha_ik acts as
/// (1/n) sum_j (x_ij - x_kj), a B-root alpha_jl as (1/m) sum_i (x_ij - x_il).
/// Pairings are (k-i)/n for A-roots and (l-j)/m for B-roots.
struct TensorRootSystem {
  int m = 1;
  int n = 1;
  std::vector<PositiveRoot> roots_a;
  std::vector<PositiveRoot> roots_b;

  std::size_t size() const { return roots_a.size() + roots_b.size(); }
};

TensorRootSystem tensor_roots(int m, int n);

/// vol(U(n)/T) = prod over positive roots of 2 pi / <alpha, varpi>.
ExactVolume hc_flag_volume_un(int n);
/// vol(U(n)) = (2 pi)^(n(n+1)/2) / prod_{j<=n} Gamma(j).
ExactVolume vol_un(int n);
/// vol(T) = (2 pi)^n for the diagonal torus of U(n).
ExactVolume vol_torus(int n);

/// vol((U(m) (x) U(n)) / (T_m (x) T_n)), evaluated from tensor_roots.
ExactVolume vol_tensor_flag(int m, int n);
/// (2 pi)^(m+n-1).
ExactVolume vol_tensor_torus(int m, int n);
ExactVolume vol_tensor_group(int m, int n);

/// Symplectic volume together with a regularity flag. Degenerate inputs are
/// not an error: the volume formula extends continuously (to zero).
struct OrbitVolume {
  double value = 0.0;
  bool regular = false;
};

/// Relative gap below which two orbit coordinates count as equal.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// True if all values are pairwise distinct: after sorting, consecutive gaps
/// exceed kDegeneracyTolerance * max|value|.
bool is_regular(std::span<const double> values);

/// Symplectic volume of the U(n) adjoint orbit through diag(lambda):
/// prod_{i<j} (lambda_i - lambda_j) / prod_j Gamma(j), with lambda ordered
/// descending (the orbit does not depend on the order of the input).
OrbitVolume symp_volume_un_orbit(std::span<const double> lambda);

/// Symplectic volume of the U(m) (x) U(n) orbit through the toral point
/// tr_B(Lambda) (x) 1 + 1 (x) tr_A(Lambda), computed root by root.
OrbitVolume symp_volume_lu_orbit(const EigGrid& grid);

/// Dimension (m^2-1) + (n^2-1) + (m-1)(n-1) of the locally diagonalizable set.
int dim_dlu(int m, int n);

}  // namespace orbitvol

#endif  // ORBITVOL_LIEGEOM_HPP
