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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "orbitvol/ensemble.hpp"
#include "orbitvol/errors.hpp"
#include "orbitvol/twoqubit.hpp"
#include "support.hpp"

using namespace orbitvol;
using namespace orbitvol::testing;

TEST_CASE("streams are reproducible and distinct") {
  RngStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  for (int k = 0; k < 100; ++k) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  RngStream a2(42, 3);
  CHECK(a2.uniform() != c.uniform());
  RngStream a3(42, 3);
  CHECK(a3.uniform() != d.uniform());
}

TEST_CASE("Haar unitaries are unitary") {
  RngStream rng(1, 0);
  const ComplexMatrix one = haar_unitary(1, rng);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) < 1e-15);
  for (int n : {2, 3, 5, 8}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix u = haar_unitary(n, rng);
      CHECK((u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm() < 1e-12);
    }
  }
}

TEST_CASE("Haar first moment") {
  // |U_11|^2 ~ Beta(1, n-1): mean 1/n, variance (n-1)/(n^2 (n+1)).
  RngStream rng(2, 0);
  for (int n : {2, 3}) {
    const int draws = 100000;
    double sum = 0.0;
    for (int k = 0; k < draws; ++k) sum += std::norm(haar_unitary(n, rng)(0, 0));
    const double mean = sum / draws;
    const double sigma = std::sqrt((n - 1.0) / (n * n * (n + 1.0)) / draws);
    CHECK(std::abs(mean - 1.0 / n) < 3 * sigma);
  }
}

TEST_CASE("Dirichlet sampling") {
  RngStream rng(3, 0);
  const std::vector<double> flat{1, 1, 1, 1};
  const int draws = 100000;
  std::vector<double> sums(4, 0.0);
  for (int k = 0; k < draws; ++k) {
    const auto x = sample_dirichlet(flat, rng);
    for (int j = 0; j < 4; ++j) {
      CHECK(x[j] >= 0.0);
      sums[j] += x[j];
    }
  }
  // Dir(1,1,1,1) marginal: mean 1/4, variance 3/80.
  const double sigma = std::sqrt(3.0 / 80.0 / draws);
  for (double s : sums) CHECK(std::abs(s / draws - 0.25) < 3 * sigma);

  const std::vector<double> skewed{1e6, 1};
  for (int k = 0; k < 100; ++k) {
    const auto x = sample_dirichlet(skewed, rng);
    CHECK(x[0] > 0.999);
    CHECK(x[0] + x[1] == 1.0);
  }

  const std::vector<double> varied{0.3, 2.5, 1.0, 7.0, 0.01};
  for (int k = 0; k < 1000; ++k) {
    const auto x = sample_dirichlet(varied, rng);
    CHECK(std::accumulate(x.begin(), x.end(), 0.0) == 1.0);
  }

  for (int size = 1; size <= 16; ++size) {
    std::vector<double> x(static_cast<std::size_t>(size));
    for (int k = 0; k < 1000; ++k) {
      sample_uniform_simplex(rng, x);
      CHECK(std::accumulate(x.begin(), x.end(), 0.0) == 1.0);
      CHECK(*std::min_element(x.begin(), x.end()) >= 0.0);
    }
  }

  CHECK_THROWS_AS(sample_dirichlet(std::vector<double>{1.0, 0.0}, rng), ValidationError);
  CHECK_THROWS_AS(sample_dirichlet(std::vector<double>{-1.0, 2.0}, rng), ValidationError);
}

TEST_CASE("random states") {
  RngStream rng(4, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_hs_state({2, 3}, rng);
    CHECK(rho.dim() == 6);
    CHECK(std::abs(rho.matrix().trace() - cplx(1.0)) < 1e-12);
  }
}

TEST_CASE("locally diagonalizable samples") {
  RngStream rng(5, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sample = random_lu_diagonalizable_sample({2, 2}, rng);
    CHECK(is_hermitian(sample.state.matrix(), 1e-14));
    auto lambda = sample.lambda;
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    const auto spec = spectrum(sample.state);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(spec[k] - lambda[k]) < 1e-12);
    CHECK(is_locally_diagonalizable(sample.state).locally_diagonalizable);
  }
  const DensityMatrix big = random_lu_diagonalizable_state({3, 2}, rng);
  CHECK(big.dims() == BipartiteDims{3, 2});
}

TEST_CASE("Bravyi inequalities") {
  const std::vector<double> flat{0.25, 0.25, 0.25, 0.25};
  CHECK(bravyi_check(flat, 0.5, 0.5));
  const std::vector<double> pure{1, 0, 0, 0};
  CHECK(bravyi_check(pure, 0.5, 0.5));
  const std::vector<double> half{0.5, 0.5, 0, 0};
  CHECK_FALSE(bravyi_check(half, 0.0, 0.0));

  // A product of pure states has pure marginals.
  CHECK(bravyi_check(pure, 0.0, 0.0));

  // The locally diagonal state diag(0.4, 0.3, 0.2, 0.1) has marginal minima
  // 0.3 and 0.4, meeting la + lb >= l2 + l3 + 2 l4 with equality. The
  // variant with 2 l3 in place of 2 l4 would wrongly reject it.
  const std::vector<double> graded{0.4, 0.3, 0.2, 0.1};
  const DensityMatrix diag(diag_matrix({0.4, 0.3, 0.2, 0.1}), {2, 2});
  const auto diag_minima = marginal_min_eigenvalues(diag);
  CHECK(diag_minima.lambda_a == doctest::Approx(0.3));
  CHECK(diag_minima.lambda_b == doctest::Approx(0.4));
  CHECK(bravyi_check(graded, diag_minima.lambda_a, diag_minima.lambda_b));
  CHECK_FALSE(bravyi_check(graded, 0.3, 0.35));

  const std::vector<double> unsorted{0.1, 0.2, 0.3, 0.4};
  CHECK_THROWS_AS(bravyi_check(unsorted, 0.2, 0.2), ValidationError);
  CHECK_THROWS_AS(bravyi_check(flat, 0.7, 0.2), ValidationError);
  CHECK_THROWS_AS(bravyi_check(std::vector<double>{0.5, 0.5}, 0.2, 0.2), DimensionError);

  RngStream rng(6, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix rho = random_hs_state({2, 2}, rng);
    const auto minima = marginal_min_eigenvalues(rho);
    CHECK(bravyi_check(spectrum(rho), minima.lambda_a, minima.lambda_b));
  }
}

TEST_CASE("Weyl basis") {
  const WeylBasis w2 = weyl_basis(2);
  CHECK(max_abs_diff(w2(0, 0), ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(max_abs_diff(w2(0, 1), sigma_z()) < 1e-15);
  CHECK(max_abs_diff(w2(1, 0), sigma_x()) < 1e-15);
  CHECK(max_abs_diff(w2(1, 1), sigma_x() * sigma_z()) < 1e-15);

  for (int d : {2, 3, 4}) {
    const WeylBasis w = weyl_basis(d);
    REQUIRE(w.unitaries.size() == static_cast<std::size_t>(d * d));
    for (std::size_t j = 0; j < w.unitaries.size(); ++j) {
      const ComplexMatrix& u = w.unitaries[j];
      CHECK((u.adjoint() * u - ComplexMatrix::Identity(d, d)).norm() < 1e-13);
      for (std::size_t k = 0; k < w.unitaries.size(); ++k) {
        // Direct trace of W_j^dagger W_k.
        cplx tr = 0.0;
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) tr += std::conj(u(r, c)) * w.unitaries[k](r, c);
        const double expected = j == k ? d : 0.0;
        CHECK(std::abs(tr - expected) < 1e-12);
      }
    }
  }

  const WeylBasis w3 = weyl_basis(3);
  ComplexMatrix gram(9, 9);
  for (int j = 0; j < 9; ++j)
    for (int k = 0; k < 9; ++k)
      gram(j, k) = vec(w3.unitaries[j]).dot(vec(w3.unitaries[k])) / 3.0;
  CHECK((gram - ComplexMatrix::Identity(9, 9)).norm() < 1e-13);
}

TEST_CASE("marginal mixing") {
  const DensityMatrix pure(diag_matrix({1, 0, 0, 0}), {2, 2});
  const auto mixed = mix_marginals(pure);
  const ComplexMatrix& m = mixed.state.matrix();
  CHECK(std::abs((m * m).trace() - cplx(1.0)) < 1e-12);
  CHECK(hs_norm(partial_trace(mixed.state, Subsystem::A) - ComplexMatrix::Identity(2, 2) / 2.0) <
        1e-12);
  CHECK(mutual_information(mixed.state) == doctest::Approx(2 * std::numbers::ln2));

  const auto flat = mix_marginals(maximally_mixed(2, 2));
  CHECK(max_abs_diff(flat.state.matrix(), ComplexMatrix::Identity(4, 4) / 4.0) < 1e-14);

  RngStream rng(7, 0);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityMatrix rho = random_hs_state({d, d}, rng);
      const auto out = mix_marginals(rho);
      const ComplexMatrix target = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
      CHECK(hs_norm(partial_trace(out.state, Subsystem::A) - target) < 1e-12);
      CHECK(hs_norm(partial_trace(out.state, Subsystem::B) - target) < 1e-12);
      CHECK((out.v.adjoint() * out.v - ComplexMatrix::Identity(d * d, d * d)).norm() < 1e-12);
      const auto before = spectrum(rho);
      const auto after = spectrum(out.state);
      for (int k = 0; k < d * d; ++k) CHECK(std::abs(before[k] - after[k]) < 1e-12);
      CHECK(std::abs(mutual_information(out.state) - max_mutual_information(before, d)) < 1e-10);
    }
  }
  CHECK_THROWS_AS(mix_marginals(maximally_mixed(2, 3)), DimensionError);
}

TEST_CASE("maximal mutual information") {
  const double ln2 = std::numbers::ln2;
  CHECK(max_mutual_information(std::vector<double>{1, 0, 0, 0}, 2) == doctest::Approx(2 * ln2));
  CHECK(max_mutual_information(std::vector<double>{0.25, 0.25, 0.25, 0.25}, 2) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(max_mutual_information(std::vector<double>{0.5, 0.5, 0, 0}, 2) == doctest::Approx(ln2));
  CHECK_THROWS_AS(max_mutual_information(std::vector<double>{1.0}, 2), DimensionError);
}
