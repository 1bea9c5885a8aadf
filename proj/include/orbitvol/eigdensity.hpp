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

#ifndef ORBITVOL_EIGDENSITY_HPP
#define ORBITVOL_EIGDENSITY_HPP

#include <cstdint>

#include "orbitvol/eig_grid.hpp"
#include "orbitvol/exactnum.hpp"

namespace orbitvol {

// Hilbert-Schmidt volume of the set of locally diagonalizable states on
// C^m (x) C^n. The volume element factors as
//
//   C_{m,n} * P(lambda) * [d lambda] * dHaar(U) * dHaar(V)
//
// so the volume is C_{m,n} times the integral of P over the probability
// simplex (delta(1 - sum lambda) measure, unordered eigenvalues).

/// P(lambda) = prod_{i<i'} sum_j (l_ij - l_i'j)^2 * prod_{j<j'} sum_i (l_ij - l_ij')^2.
/// Unnormalized: the normalization constant is integrate_over_simplex of
/// poly_density(m, n).
double density_unnormalized(const EigGrid& grid);

/// C_{m,n} = 2^(C(m,2)+C(n,2)) * vol U(m)/vol T_m * vol U(n)/vol T_n.
ExactVolume c_mn(int m, int n);

/// Exact volume C_{m,n} * integral of poly_density(m, n). (1,1) gives 1.
ExactVolume lu_set_volume_exact(int m, int n, ExpansionLimits limits = {});

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  /// Worker threads; 0 means ORBITVOL_THREADS or the hardware concurrency.
  int threads = 0;
};

/// Number of samples handled by one random stream. Work is split into
/// chunks of this size, chunk k drawing from RngStream(seed, k), and chunk
/// results are merged in chunk order, so the result does not depend on the
/// number of worker threads.
inline constexpr std::int64_t kMcChunkSize = 1 << 16;

/// Monte Carlo estimate C_{m,n} * mean(P) / (mn-1)! with lambda uniform on the
/// simplex. Throws InputError when samples < 1000.
McEstimate lu_set_volume_mc(int m, int n, std::int64_t samples, std::uint64_t seed,
                            McOptions options = {});

/// f(t) = t^7 / 420: the integral of (l1-l2)^2 (l1-l3)^2 over sum l = t.
double f22(double t);

/// Worker count from ORBITVOL_THREADS, falling back to hardware concurrency.
int default_thread_count();

}  // namespace orbitvol

#endif  // ORBITVOL_EIGDENSITY_HPP
