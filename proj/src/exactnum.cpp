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

#include "orbitvol/exactnum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "orbitvol/errors.hpp"

namespace orbitvol {

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : e) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

int total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw ArithmeticError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  // Always print "p/q" so integer results stay in the same shape.
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

// ---------------------------------------------------------------------------
// ExactVolume

ExactVolume::ExactVolume(BigRational coeff, int pi_power)
    : coeff_(std::move(coeff)), pi_power_(pi_power) {
  coeff_.canonicalize();
}

double ExactVolume::approx() const {
  // mpq get_d is correctly truncated; the pi power is applied in long double
  // to keep the error at the last ulp for the small powers used here.
  const long double c = coeff_.get_d();
  return static_cast<double>(
      c * std::pow(std::numbers::pi_v<long double>, pi_power_));
}

ExactVolume operator*(const ExactVolume& a, const ExactVolume& b) {
  return ExactVolume(a.coeff_ * b.coeff_, a.pi_power_ + b.pi_power_);
}

ExactVolume operator/(const ExactVolume& a, const ExactVolume& b) {
  if (b.coeff_ == 0) throw ArithmeticError("division of exact volume by zero");
  return ExactVolume(a.coeff_ / b.coeff_, a.pi_power_ - b.pi_power_);
}

ExactVolume operator+(const ExactVolume& a, const ExactVolume& b) {
  if (a.pi_power_ != b.pi_power_) {
    throw IncompatibleUnitsError("cannot add pi^" + std::to_string(a.pi_power_) +
                                 " and pi^" + std::to_string(b.pi_power_) +
                                 " terms");
  }
  return ExactVolume(a.coeff_ + b.coeff_, a.pi_power_);
}

ExactVolume two_pi_pow(int k) {
  BigInt two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return ExactVolume(BigRational(two_k), k);
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DimensionError("MultiPoly needs at least one variable");
}

MultiPoly MultiPoly::constant(int nvars, const BigInt& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) {
    throw DimensionError("MultiPoly::variable: index out of range");
  }
  MultiPoly p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, 1);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != d) return false;
  }
  return true;
}

void MultiPoly::add_term(const Exponent& exponent, const BigInt& c) {
  if (exponent.size() != static_cast<std::size_t>(nvars_)) {
    throw DimensionError("exponent vector length does not match nvars");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw DimensionError("MultiPoly: nvars mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw DimensionError("MultiPoly: nvars mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionError("MultiPoly: nvars mismatch");
  std::unordered_map<Exponent, BigInt, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      }
      auto [it, inserted] = acc.try_emplace(e);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  MultiPoly out(a.nvars_);
  for (auto& [exp, c] : acc) {
    if (c != 0) out.terms_.emplace(exp, std::move(c));
  }
  return out;
}

MultiPoly MultiPoly::permuted(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(nvars_)) {
    throw DimensionError("permutation length does not match nvars");
  }
  MultiPoly out(nvars_);
  Exponent e(static_cast<std::size_t>(nvars_));
  for (const auto& [src, c] : terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = src[static_cast<std::size_t>(perm[k])];
    }
    out.add_term(e, c);
  }
  return out;
}

double MultiPoly::evaluate(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(nvars_)) {
    throw DimensionError("evaluate: point dimension does not match nvars");
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int p = 0; p < e[k]; ++p) term *= x[k];
    }
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Density polynomial

MultiPoly poly_density(int m, int n, ExpansionLimits limits) {
  if (m < 1 || n < 1) throw DimensionError("poly_density: m, n must be >= 1");
  const int nvars = m * n;
  if (nvars > limits.max_vars) {
    throw CapacityError("poly_density: m*n = " + std::to_string(nvars) +
                        " exceeds the expansion limit of " +
                        std::to_string(limits.max_vars));
  }
  auto x = [&](int i, int j) { return MultiPoly::variable(nvars, i * n + j); };
  auto squared_difference = [&](const MultiPoly& u, const MultiPoly& v) {
    const MultiPoly d = u - v;
    return d * d;
  };

  std::vector<MultiPoly> factors;
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) {
      MultiPoly f(nvars);
      for (int j = 0; j < n; ++j) f += squared_difference(x(i, j), x(k, j));
      factors.push_back(std::move(f));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int l = j + 1; l < n; ++l) {
      MultiPoly f(nvars);
      for (int i = 0; i < m; ++i) f += squared_difference(x(i, j), x(i, l));
      factors.push_back(std::move(f));
    }
  }

  // Balanced pairwise reduction keeps intermediate products small.
  if (factors.empty()) return MultiPoly::constant(nvars, 1);
  while (factors.size() > 1) {
    std::vector<MultiPoly> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < factors.size(); k += 2) {
      next.push_back(factors[k] * factors[k + 1]);
    }
    if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

// ---------------------------------------------------------------------------
// Simplex integration

FactorialTable::FactorialTable(unsigned max) : values_(max + 1) {
  values_[0] = 1;
  for (unsigned k = 1; k <= max; ++k) values_[k] = values_[k - 1] * k;
}

const BigInt& FactorialTable::operator()(unsigned k) const {
  if (k >= values_.size()) throw CapacityError("factorial table too small");
  return values_[k];
}

BigRational simplex_monomial_integral(std::span<const std::uint16_t> exponents) {
  if (exponents.empty()) {
    throw DimensionError("simplex integral needs at least one variable");
  }
  unsigned total = 0;
  for (auto e : exponents) total += e;
  const auto nvars = static_cast<unsigned>(exponents.size());
  const FactorialTable fact(total + nvars - 1);
  BigInt num = 1;
  for (auto e : exponents) num *= fact(e);
  BigRational q(num, fact(total + nvars - 1));
  q.canonicalize();
  return q;
}

BigRational integrate_over_simplex(const MultiPoly& p) {
  if (p.is_zero()) return BigRational(0);
  const auto nvars = static_cast<unsigned>(p.nvars());
  const auto max_degree = static_cast<unsigned>(p.degree());
  const FactorialTable fact(max_degree + nvars - 1);

  // Terms of equal total degree share the denominator (N-1+d)!, so sum the
  // numerators per degree and divide once.
  std::map<unsigned, BigInt> numerators;
  BigInt prod;
  for (const auto& [e, c] : p.terms()) {
    prod = c;
    unsigned d = 0;
    for (auto k : e) {
      prod *= fact(k);
      d += k;
    }
    numerators[d] += prod;
  }
  BigRational sum = 0;
  for (const auto& [d, num] : numerators) {
    BigRational term(num, fact(d + nvars - 1));
    term.canonicalize();
    sum += term;
  }
  return sum;
}

}  // namespace orbitvol
