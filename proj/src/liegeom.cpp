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

#include "orbitvol/liegeom.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "orbitvol/errors.hpp"

namespace orbitvol {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw DimensionError(std::string(what) + ": dimension must be >= 1");
}

// prod over roots of 2 pi / <alpha, varpi>.
ExactVolume flag_volume_from_roots(std::span<const PositiveRoot> roots) {
  ExactVolume vol(BigRational(1), 0);
  for (const auto& root : roots) {
    vol = vol * ExactVolume(BigRational(2) / root.pairing, 1);
  }
  return vol;
}

double gamma_product(int n) {
  // prod_{j=1}^{n} Gamma(j) = prod_{j=1}^{n-1} j!
  double out = 1.0;
  double fact = 1.0;
  for (int j = 1; j < n; ++j) {
    fact *= j;
    out *= fact;
  }
  return out;
}

}  // namespace

std::vector<BigRational> weyl_vector(int n) {
  require_positive(n, "weyl_vector");
  // Half the sum of e_i - e_j over i < j, accumulated root by root.
  std::vector<BigRational> varpi(static_cast<std::size_t>(n), BigRational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      varpi[static_cast<std::size_t>(i)] += BigRational(1, 2);
      varpi[static_cast<std::size_t>(j)] -= BigRational(1, 2);
    }
  }
  for (auto& v : varpi) v.canonicalize();
  return varpi;
}

std::vector<PositiveRoot> unitary_roots(int n) {
  require_positive(n, "unitary_roots");
  const auto varpi = weyl_vector(n);
  std::vector<PositiveRoot> roots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PositiveRoot r;
      r.factor = RootFactor::A;
      r.i = i;
      r.j = j;
      r.coords.assign(static_cast<std::size_t>(n), BigRational(0));
      r.coords[static_cast<std::size_t>(i)] = 1;
      r.coords[static_cast<std::size_t>(j)] = -1;
      r.pairing = 0;
      for (int k = 0; k < n; ++k) {
        r.pairing += r.coords[static_cast<std::size_t>(k)] *
                     varpi[static_cast<std::size_t>(k)];
      }
      r.pairing.canonicalize();
      roots.push_back(std::move(r));
    }
  }
  return roots;
}

TensorRootSystem tensor_roots(int m, int n) {
  require_positive(m, "tensor_roots");
  require_positive(n, "tensor_roots");
  TensorRootSystem sys;
  sys.m = m;
  sys.n = n;
  const auto size = static_cast<std::size_t>(m * n);
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      PositiveRoot r;
      r.factor = RootFactor::A;
      r.i = i;
      r.j = k;
      r.coords.assign(size, BigRational(0));
      for (int j = 0; j < n; ++j) {
        r.coords[static_cast<std::size_t>(i * n + j)] = BigRational(1, n);
        r.coords[static_cast<std::size_t>(k * n + j)] = BigRational(-1, n);
      }
      r.pairing = BigRational(k - i, n);
      r.pairing.canonicalize();
      sys.roots_a.push_back(std::move(r));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int l = j + 1; l < n; ++l) {
      PositiveRoot r;
      r.factor = RootFactor::B;
      r.i = j;
      r.j = l;
      r.coords.assign(size, BigRational(0));
      for (int i = 0; i < m; ++i) {
        r.coords[static_cast<std::size_t>(i * n + j)] = BigRational(1, m);
        r.coords[static_cast<std::size_t>(i * n + l)] = BigRational(-1, m);
      }
      r.pairing = BigRational(l - j, m);
      r.pairing.canonicalize();
      sys.roots_b.push_back(std::move(r));
    }
  }
  return sys;
}

ExactVolume hc_flag_volume_un(int n) {
  const auto roots = unitary_roots(n);
  return flag_volume_from_roots(roots);
}

ExactVolume vol_torus(int n) {
  require_positive(n, "vol_torus");
  return two_pi_pow(n);
}

ExactVolume vol_un(int n) { return hc_flag_volume_un(n) * vol_torus(n); }

ExactVolume vol_tensor_flag(int m, int n) {
  const auto sys = tensor_roots(m, n);
  return flag_volume_from_roots(sys.roots_a) * flag_volume_from_roots(sys.roots_b);
}

ExactVolume vol_tensor_torus(int m, int n) {
  require_positive(m, "vol_tensor_torus");
  require_positive(n, "vol_tensor_torus");
  return two_pi_pow(m + n - 1);
}

ExactVolume vol_tensor_group(int m, int n) {
  return vol_tensor_flag(m, n) * vol_tensor_torus(m, n);
}

bool is_regular(std::span<const double> values) {
  if (values.size() < 2) return true;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double scale = 0.0;
  for (double v : sorted) scale = std::max(scale, std::abs(v));
  const double threshold = kDegeneracyTolerance * scale;
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    if (!(sorted[k] - sorted[k + 1] > threshold)) return false;
  }
  return true;
}

OrbitVolume symp_volume_un_orbit(std::span<const double> lambda) {
  if (lambda.empty()) throw DimensionError("symp_volume_un_orbit: empty spectrum");
  std::vector<double> sorted(lambda.begin(), lambda.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const int n = static_cast<int>(sorted.size());
  double prod = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      prod *= sorted[static_cast<std::size_t>(i)] - sorted[static_cast<std::size_t>(j)];
    }
  }
  return {prod / gamma_product(n), is_regular(sorted)};
}

OrbitVolume symp_volume_lu_orbit(const EigGrid& grid) {
  const auto sys = tensor_roots(grid.m(), grid.n());
  const auto values = grid.values();
  // Weyl-group invariance: using |<alpha, lambda>| is the same as first
  // moving lambda into the dominant chamber.
  double prod = 1.0;
  auto accumulate = [&](const std::vector<PositiveRoot>& roots) {
    for (const auto& root : roots) {
      double pairing_with_lambda = 0.0;
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (root.coords[k] != 0) pairing_with_lambda += root.coords[k].get_d() * values[k];
      }
      prod *= std::abs(pairing_with_lambda) / root.pairing.get_d();
    }
  };
  accumulate(sys.roots_a);
  accumulate(sys.roots_b);
  const bool regular = is_regular(grid.row_sums()) && is_regular(grid.col_sums());
  return {prod, regular};
}

int dim_dlu(int m, int n) {
  require_positive(m, "dim_dlu");
  require_positive(n, "dim_dlu");
  return (m * m - 1) + (n * n - 1) + (m - 1) * (n - 1);
}

}  // namespace orbitvol
