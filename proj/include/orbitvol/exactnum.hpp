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

#ifndef ORBITVOL_EXACTNUM_HPP
#define ORBITVOL_EXACTNUM_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace orbitvol {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "p/q" or "p"; the result is canonicalized.
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// coeff * pi^pi_power with an exact rational coefficient.
class ExactVolume {
 public:
  ExactVolume() = default;
  ExactVolume(BigRational coeff, int pi_power);

  const BigRational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }

  /// Floating-point value coeff * pi^pi_power.
  double approx() const;

  friend ExactVolume operator*(const ExactVolume& a, const ExactVolume& b);
  /// Throws ArithmeticError on a zero divisor.
  friend ExactVolume operator/(const ExactVolume& a, const ExactVolume& b);
  /// Throws IncompatibleUnitsError unless the pi powers agree.
  friend ExactVolume operator+(const ExactVolume& a, const ExactVolume& b);

  bool operator==(const ExactVolume& other) const {
    return pi_power_ == other.pi_power_ && coeff_ == other.coeff_;
  }

 private:
  BigRational coeff_{1};
  int pi_power_ = 0;
};

/// Convenience: (2 pi)^k as an ExactVolume.
ExactVolume two_pi_pow(int k);

using Exponent = std::vector<std::uint16_t>;

/// Multivariate polynomial with arbitrary-precision integer coefficients.
/// Terms are kept in a std::map so iteration order (and therefore every
/// derived quantity) is deterministic.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const BigInt& c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  /// Adds c * x^exponent, dropping the term if it cancels to zero.
  void add_term(const Exponent& exponent, const BigInt& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  /// Reorders variables: variable k of the result is variable perm[k] of
  /// this polynomial.
  MultiPoly permuted(std::span<const int> perm) const;

  double evaluate(std::span<const double> x) const;

  bool operator==(const MultiPoly& other) const = default;

 private:
  int nvars_;
  std::map<Exponent, BigInt> terms_;
};

/// Size cap for poly_density; the term count grows combinatorially.
struct ExpansionLimits {
  int max_vars = 9;
};

/// Expanded product over row pairs i<i' of sum_j (x_ij - x_i'j)^2 times the
/// product over column pairs j<j' of sum_i (x_ij - x_ij')^2. Variable x_ij
/// has index i*n + j. Throws CapacityError when m*n exceeds the limit.
MultiPoly poly_density(int m, int n, ExpansionLimits limits = {});

/// Integral over the unit simplex sum x = 1 (delta-function measure) of
/// prod x_k^e_k, i.e. prod e_k! / (N - 1 + sum e_k)!.
BigRational simplex_monomial_integral(std::span<const std::uint16_t> exponents);

/// Exact integral of p against delta(1 - sum x) dx over the positive orthant.
BigRational integrate_over_simplex(const MultiPoly& p);

/// Cached n! values for 0 <= n <= max.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned max);
  const BigInt& operator()(unsigned k) const;

 private:
  std::vector<BigInt> values_;
};

}  // namespace orbitvol

#endif  // ORBITVOL_EXACTNUM_HPP
