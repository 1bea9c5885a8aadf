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

#include "orbitvol/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "orbitvol/errors.hpp"

namespace orbitvol {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed),
                       static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream),
                       static_cast<std::uint32_t>(stream >> 32),
                       0x6f726276u};  // "orbv"
}

constexpr double kSlack = 1e-10;

}  // namespace

// ---------------------------------------------------------------------------
// RngStream

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  auto seq = make_seed_seq(seed, stream);
  engine_.seed(seq);
}

double RngStream::uniform() {
  // 53 random bits -> [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() { return normal_(engine_); }

double RngStream::exponential() { return -std::log1p(-uniform()); }

double RngStream::gamma(double shape) {
  std::gamma_distribution<double> dist(shape, 1.0);
  return dist(engine_);
}

cplx RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

// ---------------------------------------------------------------------------
// Samplers

ComplexMatrix haar_unitary(int n, RngStream& rng) {
  if (n < 1) throw DimensionError("haar_unitary: n must be >= 1");
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int k = 0; k < n; ++k) {
    const cplx d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= (mag > 0.0) ? d / mag : cplx(1.0, 0.0);
  }
  return q;
}

namespace {

// Divide by the total and push the rounding residual into the largest entry
// so the components sum to 1 up to the last bit.
void normalize_to_simplex(std::span<double> x) {
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= total;
  // Recompute the last entry as 1 minus the left-to-right sum of the others;
  // then the left-to-right sum of all entries rounds to exactly 1. Rounding
  // can leave the head sum a few ulps above 1, so trim its largest entry first.
  const auto head = x.first(x.size() - 1);
  if (head.empty()) {
    x[0] = 1.0;
    return;
  }
  double& largest = *std::max_element(head.begin(), head.end());
  double partial = std::accumulate(head.begin(), head.end(), 0.0);
  while (partial > 1.0) {
    largest = std::nextafter(largest, 0.0);
    partial = std::accumulate(head.begin(), head.end(), 0.0);
  }
  x.back() = 1.0 - partial;
}

}  // namespace

std::vector<double> sample_dirichlet(std::span<const double> alphas, RngStream& rng) {
  if (alphas.empty()) throw DimensionError("sample_dirichlet: no parameters");
  for (double a : alphas) {
    if (!(a > 0.0)) {
      throw ValidationError("sample_dirichlet: parameters must be positive");
    }
  }
  std::vector<double> x(alphas.size());
  for (;;) {
    for (std::size_t k = 0; k < alphas.size(); ++k) x[k] = rng.gamma(alphas[k]);
    // All-zero draws only happen for tiny alphas; redraw.
    if (std::accumulate(x.begin(), x.end(), 0.0) > 0.0) break;
  }
  normalize_to_simplex(x);
  return x;
}

void sample_uniform_simplex(RngStream& rng, std::span<double> out) {
  if (out.empty()) throw DimensionError("sample_uniform_simplex: empty output");
  for (double& v : out) v = rng.exponential();
  normalize_to_simplex(out);
}

DensityMatrix random_hs_state(BipartiteDims dims, RngStream& rng) {
  const int d = dims.total();
  if (dims.m < 1 || dims.n < 1) throw DimensionError("random_hs_state: bad dims");
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho), dims);
}

LuDiagonalizableSample random_lu_diagonalizable_sample(BipartiteDims dims,
                                                       RngStream& rng) {
  if (dims.m < 1 || dims.n < 1) {
    throw DimensionError("random_lu_diagonalizable_state: bad dims");
  }
  std::vector<double> lambda(static_cast<std::size_t>(dims.total()));
  sample_uniform_simplex(rng, lambda);
  ComplexMatrix u = haar_unitary(dims.m, rng);
  ComplexMatrix v = haar_unitary(dims.n, rng);
  const ComplexMatrix w = kron(u, v);
  Eigen::VectorXcd diag(dims.total());
  for (int k = 0; k < dims.total(); ++k) diag(k) = lambda[static_cast<std::size_t>(k)];
  ComplexMatrix rho = w * diag.asDiagonal() * w.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return {DensityMatrix(std::move(rho), dims), std::move(lambda), std::move(u),
          std::move(v)};
}

DensityMatrix random_lu_diagonalizable_state(BipartiteDims dims, RngStream& rng) {
  return random_lu_diagonalizable_sample(dims, rng).state;
}

// ---------------------------------------------------------------------------
// Two-qubit marginal problem

MarginalMinima marginal_min_eigenvalues(const DensityMatrix& rho) {
  if (rho.dims() != BipartiteDims{2, 2}) {
    throw DimensionError("marginal_min_eigenvalues: expects a two-qubit state");
  }
  const auto a = eig_hermitian(partial_trace(rho, Subsystem::A)).values;
  const auto b = eig_hermitian(partial_trace(rho, Subsystem::B)).values;
  return {a.back(), b.back()};
}

bool bravyi_check(std::span<const double> lambda, double lambda_a, double lambda_b) {
  if (lambda.size() != 4) throw DimensionError("bravyi_check: spectrum must have 4 entries");
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
    if (lambda[k] < lambda[k + 1] - kStateTolerance) {
      throw ValidationError("bravyi_check: spectrum must be sorted descending");
    }
  }
  if (lambda[3] < -kStateTolerance) {
    throw ValidationError("bravyi_check: spectrum has a negative entry");
  }
  const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  if (std::abs(total - 1.0) > kStateTolerance) {
    throw ValidationError("bravyi_check: spectrum must sum to 1");
  }
  for (double v : {lambda_a, lambda_b}) {
    if (v < -kStateTolerance || v > 0.5 + kStateTolerance) {
      throw ValidationError("bravyi_check: marginal eigenvalues must lie in [0, 1/2]");
    }
  }
  const double l1 = lambda[0], l2 = lambda[1], l3 = lambda[2], l4 = lambda[3];
  const bool first = std::min(lambda_a, lambda_b) - (l3 + l4) >= -kSlack;
  const bool second = lambda_a + lambda_b - (l2 + l3 + 2.0 * l4) >= -kSlack;
  const bool third =
      std::min(l1 - l3, l2 - l4) - std::abs(lambda_a - lambda_b) >= -kSlack;
  return first && second && third;
}

// ---------------------------------------------------------------------------
// Discrete Weyl basis and marginal mixing

WeylBasis weyl_basis(int d) {
  if (d < 1) throw DimensionError("weyl_basis: d must be >= 1");
  ComplexMatrix shift = ComplexMatrix::Zero(d, d);
  ComplexMatrix clock = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    shift((k + 1) % d, k) = 1.0;
    clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  WeylBasis basis;
  basis.d = d;
  basis.unitaries.reserve(static_cast<std::size_t>(d * d));
  ComplexMatrix x_pow = ComplexMatrix::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    ComplexMatrix w = x_pow;
    for (int b = 0; b < d; ++b) {
      basis.unitaries.push_back(w);
      w = (w * clock).eval();
    }
    x_pow = (shift * x_pow).eval();
  }
  return basis;
}

namespace {

// Fix the global phase: first entry with modulus > 1e-12 becomes real positive.
void normalize_phase(Eigen::Ref<ComplexVector> v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mag = std::abs(v(k));
    if (mag > 1e-12) {
      v *= std::conj(v(k)) / mag;
      return;
    }
  }
}

bool lexicographic_less(const ComplexVector& a, const ComplexVector& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a(k).real() != b(k).real()) return a(k).real() < b(k).real();
    if (a(k).imag() != b(k).imag()) return a(k).imag() < b(k).imag();
  }
  return false;
}

}  // namespace

MixedMarginals mix_marginals(const DensityMatrix& rho) {
  const auto dims = rho.dims();
  if (dims.m != dims.n) {
    throw DimensionError("mix_marginals: requires equal local dimensions");
  }
  const int d = dims.m;
  const int dd = d * d;
  auto eig = eig_hermitian(rho.matrix());

  std::vector<int> order(static_cast<std::size_t>(dd));
  std::iota(order.begin(), order.end(), 0);
  std::vector<ComplexVector> vecs(static_cast<std::size_t>(dd));
  for (int k = 0; k < dd; ++k) {
    vecs[static_cast<std::size_t>(k)] = eig.vectors.col(k);
    normalize_phase(vecs[static_cast<std::size_t>(k)]);
  }
  constexpr double kTie = 1e-12;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double la = eig.values[static_cast<std::size_t>(a)];
    const double lb = eig.values[static_cast<std::size_t>(b)];
    if (std::abs(la - lb) > kTie) return la > lb;
    return lexicographic_less(vecs[static_cast<std::size_t>(a)],
                              vecs[static_cast<std::size_t>(b)]);
  });

  const auto basis = weyl_basis(d);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix v = ComplexMatrix::Zero(dd, dd);
  for (int j = 0; j < dd; ++j) {
    const ComplexVector target = vec(basis.unitaries[static_cast<std::size_t>(j)]) * inv_sqrt_d;
    v += target * vecs[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])].adjoint();
  }
  ComplexMatrix mixed = v * rho.matrix() * v.adjoint();
  mixed = 0.5 * (mixed + mixed.adjoint()).eval();
  return {DensityMatrix(std::move(mixed), dims), std::move(v)};
}

double max_mutual_information(std::span<const double> lambda, int d) {
  if (d < 1 || lambda.size() != static_cast<std::size_t>(d * d)) {
    throw DimensionError("max_mutual_information: spectrum length must be d^2");
  }
  return 2.0 * std::log(static_cast<double>(d)) - shannon_entropy(lambda);
}

}  // namespace orbitvol
