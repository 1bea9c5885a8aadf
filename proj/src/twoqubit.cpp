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

#include "orbitvol/twoqubit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "orbitvol/errors.hpp"

namespace orbitvol {

namespace {

constexpr double kUnitaryTolerance = 1e-9;
constexpr double kXPatternTolerance = 1e-12;

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.dims() != BipartiteDims{2, 2}) {
    throw DimensionError(std::string(what) + ": expects a 2x2 bipartite state");
  }
}

ComplexMatrix to_dynamic(const Eigen::Matrix2cd& m) { return ComplexMatrix(m); }

}  // namespace

const std::array<Eigen::Matrix2cd, 3>& pauli() {
  static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
    const cplx i(0.0, 1.0);
    std::array<Eigen::Matrix2cd, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -i, i, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma;
}

// ---------------------------------------------------------------------------
// Bloch form

BlochForm bloch_decompose(const DensityMatrix& rho) {
  require_two_qubits(rho, "bloch_decompose");
  const auto& sigma = pauli();
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  BlochForm form;
  for (int a = 0; a < 3; ++a) {
    const ComplexMatrix sa = to_dynamic(sigma[static_cast<std::size_t>(a)]);
    form.r(a) = (rho.matrix() * kron(sa, id)).trace().real();
    form.s(a) = (rho.matrix() * kron(id, sa)).trace().real();
    for (int b = 0; b < 3; ++b) {
      const ComplexMatrix sb = to_dynamic(sigma[static_cast<std::size_t>(b)]);
      form.t(a, b) = (rho.matrix() * kron(sa, sb)).trace().real();
    }
  }
  return form;
}

DensityMatrix bloch_compose(const BlochForm& form) {
  const auto& sigma = pauli();
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix rho = ComplexMatrix::Identity(4, 4);
  for (int a = 0; a < 3; ++a) {
    const ComplexMatrix sa = to_dynamic(sigma[static_cast<std::size_t>(a)]);
    rho += form.r(a) * kron(sa, id) + form.s(a) * kron(id, sa);
    for (int b = 0; b < 3; ++b) {
      rho += form.t(a, b) * kron(sa, to_dynamic(sigma[static_cast<std::size_t>(b)]));
    }
  }
  rho *= 0.25;
  return DensityMatrix(std::move(rho), {2, 2});
}

Eigen::Matrix3d su2_to_so3(const Eigen::Matrix2cd& u) {
  if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() > kUnitaryTolerance) {
    throw ValidationError("su2_to_so3: matrix is not unitary");
  }
  if (std::abs(u.determinant() - cplx(1.0, 0.0)) > kUnitaryTolerance) {
    throw ValidationError("su2_to_so3: determinant is not 1");
  }
  const auto& sigma = pauli();
  Eigen::Matrix3d o;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      o(a, b) = 0.5 * (sigma[static_cast<std::size_t>(a)] * u *
                       sigma[static_cast<std::size_t>(b)] * u.adjoint())
                          .trace()
                          .real();
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// X states

void XState::validate() const {
  const double total = std::accumulate(diag.begin(), diag.end(), 0.0);
  if (std::abs(total - 1.0) > kStateTolerance) {
    throw ValidationError("X state: diagonal must sum to 1");
  }
  for (double v : diag) {
    if (v < -kStateTolerance) throw ValidationError("X state: negative diagonal entry");
  }
  if (diag[1] * diag[2] < std::norm(rho23) - kStateTolerance) {
    throw ValidationError("X state: rho22 rho33 < |rho23|^2");
  }
  if (diag[0] * diag[3] < std::norm(rho14) - kStateTolerance) {
    throw ValidationError("X state: rho11 rho44 < |rho14|^2");
  }
}

ComplexMatrix XState::to_matrix() const {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) m(k, k) = diag[static_cast<std::size_t>(k)];
  m(0, 3) = rho14;
  m(3, 0) = std::conj(rho14);
  m(1, 2) = rho23;
  m(2, 1) = std::conj(rho23);
  return m;
}

XState XState::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("X state: expects a 4x4 matrix");
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool on_x = (i == j) || (i + j == 3);
      if (!on_x && std::abs(m(i, j)) > kXPatternTolerance) {
        throw ValidationError("X state: nonzero entry outside the X pattern");
      }
    }
  }
  if (!is_hermitian(m)) throw ValidationError("X state: matrix is not Hermitian");
  XState x;
  for (int k = 0; k < 4; ++k) x.diag[static_cast<std::size_t>(k)] = m(k, k).real();
  x.rho14 = m(0, 3);
  x.rho23 = m(1, 2);
  x.validate();
  return x;
}

std::vector<double> xstate_eigenvalues(const XState& x) {
  x.validate();
  const auto& p = x.diag;
  // Pauli-basis coordinates of the X state.
  const double pol_1 = p[0] - p[1] + p[2] - p[3];
  const double pol_2 = p[0] + p[1] - p[2] - p[3];
  const double r_zz = p[0] - p[1] - p[2] + p[3];
  const double r_xx = 2.0 * (x.rho14.real() + x.rho23.real());
  const double r_yy = 2.0 * (x.rho23.real() - x.rho14.real());
  const double r_xy = -2.0 * (x.rho14.imag() + x.rho23.imag());
  const double r_yx = -2.0 * (x.rho14.imag() - x.rho23.imag());

  const double outer = std::sqrt((pol_1 + pol_2) * (pol_1 + pol_2) +
                                 (r_xx - r_yy) * (r_xx - r_yy) +
                                 (r_xy + r_yx) * (r_xy + r_yx));
  const double inner = std::sqrt((pol_1 - pol_2) * (pol_1 - pol_2) +
                                 (r_xx + r_yy) * (r_xx + r_yy) +
                                 (r_xy - r_yx) * (r_xy - r_yx));
  std::vector<double> lambda{0.25 * ((1.0 + r_zz) + outer), 0.25 * ((1.0 + r_zz) - outer),
                             0.25 * ((1.0 - r_zz) + inner), 0.25 * ((1.0 - r_zz) - inner)};
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda;
}

// ---------------------------------------------------------------------------
// Diagonal triples

DiagTriple diag_triple(std::span<const double> l) {
  if (l.size() != 4) throw DimensionError("diag_triple: expects 4 eigenvalues");
  return {l[0] + l[1] - l[2] - l[3], l[0] - l[1] + l[2] - l[3],
          l[0] - l[1] - l[2] + l[3]};
}

std::array<double, 4> triple_to_spectrum(const DiagTriple& t) {
  const double a = t.a_z, b = t.b_z, c = t.r_zz;
  return {(1.0 + a + b + c) / 4.0, (1.0 + a - b - c) / 4.0, (1.0 - a + b - c) / 4.0,
          (1.0 - a - b + c) / 4.0};
}

// ---------------------------------------------------------------------------
// Invariants

InvariantVector lu_invariants(const BlochForm& form) {
  const Eigen::Matrix3d ttt = form.t * form.t.transpose();
  const Eigen::Matrix3d tt_t = form.t.transpose() * form.t;
  InvariantVector inv{};
  Eigen::Matrix3d pow_a = Eigen::Matrix3d::Identity();  // (T T^t)^k
  Eigen::Matrix3d pow_b = Eigen::Matrix3d::Identity();  // (T^t T)^k
  for (int k = 0; k < 3; ++k) {
    inv[static_cast<std::size_t>(k)] = form.r.dot(pow_a * form.r);
    inv[static_cast<std::size_t>(3 + k)] = form.s.dot(pow_b * form.s);
    inv[static_cast<std::size_t>(6 + k)] = form.r.dot(pow_a * form.t * form.s);
    pow_a = pow_a * ttt;
    pow_b = pow_b * tt_t;
    inv[static_cast<std::size_t>(9 + k)] = pow_a.trace();
  }
  return inv;
}

InvariantVector lu_invariants(const DensityMatrix& rho) {
  return lu_invariants(bloch_decompose(rho));
}

InvariantVector triple_invariants(const DiagTriple& t) {
  InvariantVector inv{};
  const double t2 = t.r_zz * t.r_zz;
  double t_pow = 1.0;  // r_zz^(2k)
  for (int k = 0; k < 3; ++k) {
    inv[static_cast<std::size_t>(k)] = t.a_z * t.a_z * t_pow;
    inv[static_cast<std::size_t>(3 + k)] = t.b_z * t.b_z * t_pow;
    inv[static_cast<std::size_t>(6 + k)] = t.a_z * t.b_z * t.r_zz * t_pow;
    t_pow *= t2;
    inv[static_cast<std::size_t>(9 + k)] = t_pow;
  }
  return inv;
}

bool invariants_match(const InvariantVector& a, const InvariantVector& b, double tol) {
  constexpr double kAbsoluteFloor = 1e-12;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double scale = std::max(std::abs(a[k]), std::abs(b[k]));
    if (std::abs(a[k] - b[k]) > tol * scale + kAbsoluteFloor) return false;
  }
  return true;
}

bool lu_equivalent(const DensityMatrix& rho, const DensityMatrix& sigma, double tol) {
  return invariants_match(lu_invariants(rho), lu_invariants(sigma), tol);
}

std::string_view to_string(DecisionMethod method) {
  return method == DecisionMethod::Invariants ? "invariants" : "geometric";
}

// ---------------------------------------------------------------------------
// Local diagonalizability

namespace {

// Bloch data of the form r = a x, s = b y, T = c x y^t for unit x, y.
std::optional<DiagTriple> geometric_triple(const BlochForm& form, double tol) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(form.t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sv = svd.singularValues();
  const double scale = std::max(1.0, sv(0));
  if (sv(1) > tol * scale) return std::nullopt;

  const double c = sv(0);
  Eigen::Vector3d x = svd.matrixU().col(0);
  Eigen::Vector3d y = svd.matrixV().col(0);
  if (c <= tol) {
    // T vanishes: the directions are fixed by r and s alone.
    if (form.r.norm() > tol) x = form.r.normalized();
    if (form.s.norm() > tol) y = form.s.normalized();
  }
  const double a = form.r.dot(x);
  const double b = form.s.dot(y);
  if ((form.r - a * x).norm() > tol * std::max(1.0, form.r.norm())) return std::nullopt;
  if ((form.s - b * y).norm() > tol * std::max(1.0, form.s.norm())) return std::nullopt;
  return DiagTriple{a, b, c};
}

bool spectrum_matches(const DiagTriple& t, std::vector<double> sorted_spec, double tol) {
  auto candidate = triple_to_spectrum(t);
  std::sort(candidate.begin(), candidate.end(), std::greater<>());
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(candidate[k] - sorted_spec[k]) > tol + 1e-12) return false;
  }
  return true;
}

}  // namespace

LocalDiagDecision is_locally_diagonalizable(const DensityMatrix& rho, double tol) {
  require_two_qubits(rho, "is_locally_diagonalizable");
  const auto spec = spectrum(rho);
  const BlochForm form = bloch_decompose(rho);
  const InvariantVector target = lu_invariants(form);

  std::array<double, 4> order{};
  std::copy(spec.begin(), spec.end(), order.begin());
  std::sort(order.begin(), order.end());
  std::vector<InvariantVector> tried;
  do {
    const DiagTriple triple = diag_triple(order);
    const InvariantVector candidate = triple_invariants(triple);
    if (std::find(tried.begin(), tried.end(), candidate) != tried.end()) continue;
    tried.push_back(candidate);
    if (invariants_match(candidate, target, tol)) {
      return {true, triple, DecisionMethod::Invariants};
    }
  } while (std::next_permutation(order.begin(), order.end()));

  // Off the generic set the invariant comparison can fail on tolerance
  // alone; check the rank-one structure of T directly.
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(form.t);
  if (svd.singularValues()(1) <= tol * std::max(1.0, svd.singularValues()(0))) {
    if (auto triple = geometric_triple(form, tol); triple && spectrum_matches(*triple, spec, tol)) {
      return {true, triple, DecisionMethod::Geometric};
    }
    return {false, std::nullopt, DecisionMethod::Geometric};
  }
  return {false, std::nullopt, DecisionMethod::Invariants};
}

}  // namespace orbitvol
