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

#ifndef ORBITVOL_TWOQUBIT_HPP
#define ORBITVOL_TWOQUBIT_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "orbitvol/linalg.hpp"

namespace orbitvol {

/// sigma_x, sigma_y, sigma_z (index 0, 1, 2).
const std::array<Eigen::Matrix2cd, 3>& pauli();

/// rho = 1/4 (1 (x) 1 + r.sigma (x) 1 + 1 (x) s.sigma + sum_ab T_ab sigma_a (x) sigma_b)
struct BlochForm {
  Eigen::Vector3d r = Eigen::Vector3d::Zero();
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

/// r_a = Tr[rho (sigma_a (x) 1)], s_b = Tr[rho (1 (x) sigma_b)],
/// T_ab = Tr[rho (sigma_a (x) sigma_b)]. Requires a 2x2 bipartite state.
BlochForm bloch_decompose(const DensityMatrix& rho);
/// Inverse of bloch_decompose; throws ValidationError if the result is not a
/// valid state.
DensityMatrix bloch_compose(const BlochForm& form);

/// Rotation O with O_ab = 1/2 Tr[sigma_a u sigma_b u^dagger] for u in SU(2).
/// Throws ValidationError if u is not special unitary within 1e-9.
Eigen::Matrix3d su2_to_so3(const Eigen::Matrix2cd& u);

/// Two-qubit state supported on the diagonal and anti-diagonal.
struct XState {
  std::array<double, 4> diag{};  ///< rho_11 .. rho_44
  cplx rho14{};
  cplx rho23{};

  /// Throws ValidationError unless the diagonal sums to 1 and
  /// rho22 rho33 >= |rho23|^2, rho11 rho44 >= |rho14|^2 (within 1e-9).
  void validate() const;
  ComplexMatrix to_matrix() const;
  /// Reads an X-shaped 4x4 matrix; throws ValidationError if any entry
  /// outside the X pattern exceeds 1e-12.
  static XState from_matrix(const ComplexMatrix& m);
};

/// Closed-form eigenvalues of an X state, sorted descending.
std::vector<double> xstate_eigenvalues(const XState& x);

/// Bloch coordinates of a diagonal state diag(l1, l2, l3, l4) in the A-major
/// basis |00>, |01>, |10>, |11>: r = a_z e3, s = b_z e3, T = r_zz e3 e3^T.
struct DiagTriple {
  double a_z = 0.0;
  double b_z = 0.0;
  double r_zz = 0.0;
};

/// a_z = l1 + l2 - l3 - l4, b_z = l1 - l2 + l3 - l4, r_zz = l1 - l2 - l3 + l4.
DiagTriple diag_triple(std::span<const double> lambda);
/// Inverse of diag_triple (assuming unit trace).
std::array<double, 4> triple_to_spectrum(const DiagTriple& t);

/// The twelve local-unitary invariants, stored family by family:
///   [0..2]  <r|(T T^t)^k|r>
///   [3..5]  <s|(T^t T)^k|s>
///   [6..8]  <r|(T T^t)^k T|s>
///   [9..11] Tr[(T T^t)^(k+1)]          for k = 0, 1, 2
using InvariantVector = std::array<double, 12>;

InvariantVector lu_invariants(const BlochForm& form);
InvariantVector lu_invariants(const DensityMatrix& rho);
/// Invariants of the diagonal state with Bloch triple t, in closed form.
InvariantVector triple_invariants(const DiagTriple& t);

/// Default relative tolerance of the equivalence and diagonalizability tests.
inline constexpr double kDefaultLuTolerance = 1e-8;

/// Entrywise |x - y| <= tol * max(|x|, |y|) + 1e-12.
bool invariants_match(const InvariantVector& a, const InvariantVector& b, double tol);

bool lu_equivalent(const DensityMatrix& rho, const DensityMatrix& sigma,
                   double tol = kDefaultLuTolerance);

enum class DecisionMethod { Invariants, Geometric };
std::string_view to_string(DecisionMethod method);

struct LocalDiagDecision {
  bool locally_diagonalizable = false;
  std::optional<DiagTriple> witness;
  DecisionMethod method = DecisionMethod::Invariants;
};

/// Decides whether rho = (U (x) V) Lambda (U (x) V)^dagger for a diagonal
/// Lambda. Eigenvalues are local-unitary invariant, so rho qualifies iff its
/// invariants match those of diag(some ordering of spec(rho)). When that
/// test fails but T is numerically rank <= 1 the Bloch data are checked
/// directly via the singular value decomposition of T (method Geometric).
LocalDiagDecision is_locally_diagonalizable(const DensityMatrix& rho,
                                            double tol = kDefaultLuTolerance);

}  // namespace orbitvol

#endif  // ORBITVOL_TWOQUBIT_HPP
