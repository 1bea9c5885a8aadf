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

#ifndef ORBITVOL_EIG_GRID_HPP
#define ORBITVOL_EIG_GRID_HPP

#include <span>
#include <vector>

namespace orbitvol {

/// Eigenvalues lambda_ij of a locally diagonal state, i in [0, m), j in [0, n),
/// stored row-major: lambda_ij sits at i*n + j (the kron / A-major order).
class EigGrid {
 public:
  /// Throws DimensionError when values.size() != m*n or m, n < 1.
  EigGrid(int m, int n, std::vector<double> values);

  int m() const { return m_; }
  int n() const { return n_; }
  double operator()(int i, int j) const {
    return values_[static_cast<std::size_t>(i * n_ + j)];
  }
  std::span<const double> values() const { return values_; }

  /// Row sums sum_j lambda_ij, i.e. the diagonal of tr_B(Lambda).
  std::vector<double> row_sums() const;
  /// Column sums sum_i lambda_ij, i.e. the diagonal of tr_A(Lambda).
  std::vector<double> col_sums() const;

  /// True when all entries are >= -tol and they sum to 1 within tol.
  bool is_normalized(double tol = 1e-9) const;

 private:
  int m_;
  int n_;
  std::vector<double> values_;
};

}  // namespace orbitvol

#endif  // ORBITVOL_EIG_GRID_HPP
