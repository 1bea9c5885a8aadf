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

#include "orbitvol/eig_grid.hpp"

#include <cmath>
#include <string>

#include "orbitvol/errors.hpp"

namespace orbitvol {

EigGrid::EigGrid(int m, int n, std::vector<double> values)
    : m_(m), n_(n), values_(std::move(values)) {
  if (m < 1 || n < 1) throw DimensionError("EigGrid: m, n must be >= 1");
  if (values_.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(n)) {
    throw DimensionError("EigGrid: expected " + std::to_string(m * n) +
                         " values, got " + std::to_string(values_.size()));
  }
}

std::vector<double> EigGrid::row_sums() const {
  std::vector<double> out(static_cast<std::size_t>(m_), 0.0);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j);
  }
  return out;
}

std::vector<double> EigGrid::col_sums() const {
  std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] += (*this)(i, j);
  }
  return out;
}

bool EigGrid::is_normalized(double tol) const {
  double sum = 0.0;
  for (double v : values_) {
    if (v < -tol) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

}  // namespace orbitvol
