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

#include "orbitvol/eigdensity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "orbitvol/ensemble.hpp"
#include "orbitvol/errors.hpp"
#include "orbitvol/liegeom.hpp"

namespace orbitvol {

namespace {

int choose2(int k) { return k * (k - 1) / 2; }

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Row-major grid values; no shape checks, callers guarantee m*n entries.
double density_of_values(int m, int n, std::span<const double> values) {
  auto grid = [&](int i, int j) { return values[static_cast<std::size_t>(i * n + j)]; };
  double prod = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        const double diff = grid(i, j) - grid(k, j);
        s += diff * diff;
      }
      prod *= s;
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int l = j + 1; l < n; ++l) {
      double s = 0.0;
      for (int i = 0; i < m; ++i) {
        const double diff = grid(i, j) - grid(i, l);
        s += diff * diff;
      }
      prod *= s;
    }
  }
  return prod;
}

}  // namespace

double density_unnormalized(const EigGrid& grid) {
  return density_of_values(grid.m(), grid.n(), grid.values());
}

ExactVolume c_mn(int m, int n) {
  if (m < 1 || n < 1) throw DimensionError("c_mn: m, n must be >= 1");
  BigInt power_of_two;
  mpz_ui_pow_ui(power_of_two.get_mpz_t(), 2,
                static_cast<unsigned long>(choose2(m) + choose2(n)));
  return ExactVolume(BigRational(power_of_two), 0) * (vol_un(m) / vol_torus(m)) *
         (vol_un(n) / vol_torus(n));
}

ExactVolume lu_set_volume_exact(int m, int n, ExpansionLimits limits) {
  const MultiPoly p = poly_density(m, n, limits);
  return c_mn(m, n) * ExactVolume(integrate_over_simplex(p), 0);
}

int default_thread_count() {
  if (const char* env = std::getenv("ORBITVOL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

McEstimate lu_set_volume_mc(int m, int n, std::int64_t samples, std::uint64_t seed,
                            McOptions options) {
  if (m < 1 || n < 1) throw DimensionError("lu_set_volume_mc: m, n must be >= 1");
  if (samples < 1000) throw InputError("lu_set_volume_mc: need at least 1000 samples");

  const int nvars = m * n;
  const std::int64_t chunks = (samples + kMcChunkSize - 1) / kMcChunkSize;
  std::vector<ChunkSums> partial(static_cast<std::size_t>(chunks));

  auto run_chunk = [&](std::int64_t chunk) {
    RngStream rng(seed, static_cast<std::uint64_t>(chunk));
    const std::int64_t begin = chunk * kMcChunkSize;
    const std::int64_t end = std::min(samples, begin + kMcChunkSize);
    std::vector<double> point(static_cast<std::size_t>(nvars));
    ChunkSums sums;
    for (std::int64_t s = begin; s < end; ++s) {
      sample_uniform_simplex(rng, point);
      const double p = density_of_values(m, n, point);
      sums.sum += p;
      sums.sum_sq += p * p;
    }
    partial[static_cast<std::size_t>(chunk)] = sums;
  };

  const int threads = static_cast<int>(std::min<std::int64_t>(
      options.threads > 0 ? options.threads : default_thread_count(), chunks));
  if (threads <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::int64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& p : partial) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const auto count = static_cast<double>(samples);
  const double mean = sum / count;
  const double variance = std::max(0.0, (sum_sq / count - mean * mean)) * count / (count - 1.0);

  // Simplex surface factor 1/(N-1)! of the delta(1 - sum lambda) measure.
  double inv_factorial = 1.0;
  for (int k = 2; k < nvars; ++k) inv_factorial /= k;
  const double scale = c_mn(m, n).approx() * inv_factorial;

  McEstimate out;
  out.estimate = scale * mean;
  out.std_error = scale * std::sqrt(variance / count);
  out.samples = samples;
  out.seed = seed;
  return out;
}

double f22(double t) {
  if (t < 0.0) throw InputError("f22: t must be >= 0");
  return std::pow(t, 7) / 420.0;
}

}  // namespace orbitvol
