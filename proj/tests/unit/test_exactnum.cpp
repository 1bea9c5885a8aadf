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
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "orbitvol/errors.hpp"
#include "orbitvol/exactnum.hpp"

using namespace orbitvol;

namespace {

using NaiveTerm = std::pair<std::vector<int>, long long>;
using NaiveFactor = std::vector<NaiveTerm>;

// One factor sum_k (x_a_k - x_b_k)^2 written out as x_a^2 - 2 x_a x_b + x_b^2.
NaiveFactor naive_factor(int nvars, const std::vector<std::pair<int, int>>& pairs) {
  NaiveFactor f;
  for (auto [a, b] : pairs) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[a] = 2;
    f.emplace_back(e, 1);
    e[a] = 1;
    e[b] = 1;
    f.emplace_back(e, -2);
    e[a] = 0;
    e[b] = 2;
    f.emplace_back(e, 1);
  }
  return f;
}

// Expands the density polynomial by enumerating every choice of one term
// per factor. Exponential, but fine for a handful of factors.
std::map<std::vector<int>, long long> naive_density(int m, int n) {
  const int nvars = m * n;
  std::vector<NaiveFactor> factors;
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      std::vector<std::pair<int, int>> pairs;
      for (int j = 0; j < n; ++j) pairs.emplace_back(i * n + j, k * n + j);
      factors.push_back(naive_factor(nvars, pairs));
    }
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < m; ++i) pairs.emplace_back(i * n + j, i * n + l);
      factors.push_back(naive_factor(nvars, pairs));
    }

  std::map<std::vector<int>, long long> out;
  std::vector<std::size_t> choice(factors.size(), 0);
  while (true) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    long long c = 1;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& [fe, fc] = factors[f][choice[f]];
      for (int v = 0; v < nvars; ++v) e[v] += fe[v];
      c *= fc;
    }
    out[e] += c;
    std::size_t f = 0;
    while (f < factors.size() && ++choice[f] == factors[f].size()) choice[f++] = 0;
    if (f == factors.size()) break;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

double product_form(int m, int n, const std::vector<double>& x) {
  double p = 1.0;
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += std::pow(x[i * n + j] - x[k * n + j], 2);
      p *= s;
    }
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l) {
      double s = 0.0;
      for (int i = 0; i < m; ++i) s += std::pow(x[i * n + j] - x[i * n + l], 2);
      p *= s;
    }
  return p;
}

// Variable permutation induced by permuting grid rows and columns.
std::vector<int> grid_permutation(int m, int n, const std::vector<int>& rows,
                                  const std::vector<int>& cols) {
  std::vector<int> perm(static_cast<std::size_t>(m * n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) perm[i * n + j] = rows[i] * n + cols[j];
  return perm;
}

BigRational factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return BigRational(f);
}

// Beta integral int_0^1 x^a (1-x)^b dx via the binomial expansion of (1-x)^b.
BigRational beta_oracle(int a, int b) {
  BigRational sum = 0;
  BigInt binom = 1;
  for (int k = 0; k <= b; ++k) {
    BigRational term(binom, a + k + 1);
    term.canonicalize();
    sum += (k % 2 == 0) ? term : BigRational(-term);
    binom = binom * (b - k) / (k + 1);
  }
  return sum;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("7")) == "7/1");
  CHECK(to_string(parse_rational("-2/6")) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("exact volume arithmetic") {
  const ExactVolume prod = ExactVolume(16, 2) * ExactVolume(BigRational(1, 105), 0);
  CHECK(prod == ExactVolume(BigRational(16, 105), 2));
  CHECK(ExactVolume(1, 3) / ExactVolume(1, 3) == ExactVolume(1, 0));
  CHECK(ExactVolume(BigRational(1, 2), 1) + ExactVolume(BigRational(1, 3), 1) ==
        ExactVolume(BigRational(5, 6), 1));
  CHECK_THROWS_AS(ExactVolume(1, 1) + ExactVolume(1, 2), IncompatibleUnitsError);
  CHECK_THROWS_AS(ExactVolume(1, 1) / ExactVolume(0, 0), ArithmeticError);
  CHECK(ExactVolume(BigRational(16, 105), 2).approx() ==
        doctest::Approx(16.0 * M_PI * M_PI / 105.0).epsilon(1e-15));
  CHECK(two_pi_pow(3) == ExactVolume(8, 3));
}

TEST_CASE("simplex monomial integrals") {
  for (int n = 1; n <= 8; ++n) {
    const std::vector<std::uint16_t> zeros(static_cast<std::size_t>(n), 0);
    CHECK(simplex_monomial_integral(zeros) == 1 / factorial(n - 1));
  }
  const std::vector<std::uint16_t> e10{1, 0};
  CHECK(simplex_monomial_integral(e10) == BigRational(1, 2));
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      const std::vector<std::uint16_t> e{static_cast<std::uint16_t>(a),
                                         static_cast<std::uint16_t>(b)};
      CHECK(simplex_monomial_integral(e) == beta_oracle(a, b));
    }
  }
}

TEST_CASE("integrate the Laplace cross-check term") {
  const MultiPoly l1 = MultiPoly::variable(4, 0);
  const MultiPoly l2 = MultiPoly::variable(4, 1);
  const MultiPoly l3 = MultiPoly::variable(4, 2);
  const MultiPoly d12 = l1 - l2;
  const MultiPoly d13 = l1 - l3;
  const MultiPoly term = d12 * d12 * d13 * d13;
  CHECK(integrate_over_simplex(term) == BigRational(1, 420));
  CHECK(integrate_over_simplex(MultiPoly::constant(4, 1)) == BigRational(1, 6));
}

TEST_CASE("poly_density small cases") {
  const MultiPoly one = poly_density(1, 1);
  CHECK(one == MultiPoly::constant(1, 1));

  const MultiPoly p22 = poly_density(2, 2);
  CHECK(p22.degree() == 4);
  CHECK(p22.is_homogeneous());
  // [(x11-x21)^2 + (x12-x22)^2] [(x11-x12)^2 + (x21-x22)^2]
  const MultiPoly x11 = MultiPoly::variable(4, 0), x12 = MultiPoly::variable(4, 1);
  const MultiPoly x21 = MultiPoly::variable(4, 2), x22 = MultiPoly::variable(4, 3);
  const MultiPoly rows = (x11 - x21) * (x11 - x21) + (x12 - x22) * (x12 - x22);
  const MultiPoly cols = (x11 - x12) * (x11 - x12) + (x21 - x22) * (x21 - x22);
  CHECK(p22 == rows * cols);
  CHECK(integrate_over_simplex(p22) == BigRational(1, 105));
}

TEST_CASE("poly_density matches naive expansion") {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 4}}) {
    const MultiPoly p = poly_density(m, n);
    const auto oracle = naive_density(m, n);
    CHECK(p.term_count() == oracle.size());
    CHECK(p.degree() == (m * (m - 1) + n * (n - 1)));
    for (const auto& [e, c] : p.terms()) {
      const std::vector<int> key(e.begin(), e.end());
      const auto it = oracle.find(key);
      REQUIRE(it != oracle.end());
      CHECK(c == static_cast<long>(it->second));
    }
  }
}

TEST_CASE("poly_density equals the product form at random points") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const MultiPoly p = poly_density(m, n);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> x(static_cast<std::size_t>(m * n));
      for (double& v : x) v = u(gen);
      const double expected = product_form(m, n, x);
      CHECK(std::abs(p.evaluate(x) - expected) <= 1e-10 * std::abs(expected) + 1e-300);
    }
  }
}

TEST_CASE("poly_density is fixed by row and column permutations") {
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}}) {
    const MultiPoly p = poly_density(m, n);
    std::vector<int> rows(static_cast<std::size_t>(m)), cols(static_cast<std::size_t>(n));
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::iota(cols.begin(), cols.end(), 0);
      do {
        const auto perm = grid_permutation(m, n, rows, cols);
        CHECK(p.permuted(perm) == p);
      } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
  }
}

TEST_CASE("density integral is positive") {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}}) {
    CHECK(integrate_over_simplex(poly_density(m, n)) > 0);
  }
}

TEST_CASE("expansion capacity") {
  CHECK_THROWS_AS(poly_density(2, 5), CapacityError);
  CHECK_THROWS_AS(poly_density(2, 3, {5}), CapacityError);
  CHECK_THROWS_AS(poly_density(0, 3), DimensionError);
}

TEST_CASE("multivariate polynomial algebra") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const MultiPoly sq = (x + y) * (x + y);
  CHECK(sq.term_count() == 3);
  CHECK(sq.terms().at(Exponent{1, 1}) == 2);
  CHECK((sq - sq).is_zero());
  CHECK((sq - sq).degree() == -1);
  const std::vector<double> pt{2.0, -3.0};
  CHECK(sq.evaluate(pt) == 1.0);
  const std::vector<int> swap{1, 0};
  CHECK((x * x * y).permuted(swap) == x * y * y);
  CHECK_FALSE((x * x + y).is_homogeneous());
}
