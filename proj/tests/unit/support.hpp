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


// Fixtures shared by the unit tests.

#ifndef ORBITVOL_TESTS_SUPPORT_HPP
#define ORBITVOL_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>

#include "orbitvol/ensemble.hpp"
#include "orbitvol/linalg.hpp"

namespace orbitvol::testing {

inline ComplexMatrix ginibre(int rows, int cols, RngStream& rng) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

inline ComplexMatrix random_hermitian(int d, RngStream& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  return (g + g.adjoint()) / 2.0;
}

inline ComplexMatrix diag_matrix(std::initializer_list<double> values) {
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                          static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (double v : values) out(k, k) = v, ++k;
  return out;
}

inline ComplexMatrix sigma_x() {
  ComplexMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

inline ComplexMatrix sigma_y() {
  ComplexMatrix s(2, 2);
  s << 0, cplx(0, -1), cplx(0, 1), 0;
  return s;
}

inline ComplexMatrix sigma_z() {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

/// |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt 2.
inline DensityMatrix bell_phi_plus() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return DensityMatrix(psi * psi.adjoint(), {2, 2});
}

inline DensityMatrix maximally_mixed(int m, int n) {
  const int d = m * n;
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d), {m, n});
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace orbitvol::testing

#endif  // ORBITVOL_TESTS_SUPPORT_HPP
