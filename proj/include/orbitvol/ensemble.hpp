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

#ifndef ORBITVOL_ENSEMBLE_HPP
#define ORBITVOL_ENSEMBLE_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "orbitvol/linalg.hpp"

namespace orbitvol {

/// A reproducible random stream. Identical (seed, stream) pairs produce
/// identical sequences; distinct stream indices give independent streams, so
/// parallel work is split by stream index rather than by thread.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Uniform on [0, 1).
  double uniform();
  double normal();
  /// Standard exponential, rate 1.
  double exponential();
  /// Gamma(shape, 1).
  double gamma(double shape);
  /// (N(0,1) + i N(0,1)) / sqrt(2).
  cplx complex_normal();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// Haar-distributed n x n unitary: QR of a Ginibre matrix with the phases of
/// diag(R) moved into Q.
ComplexMatrix haar_unitary(int n, RngStream& rng);

/// Point on the simplex from Dirichlet(alphas). Throws ValidationError for a
/// non-positive alpha.
std::vector<double> sample_dirichlet(std::span<const double> alphas, RngStream& rng);

/// Uniform point on the (N-1)-simplex, i.e. Dirichlet(1, ..., 1), written
/// into `out` (size N).
void sample_uniform_simplex(RngStream& rng, std::span<double> out);

/// Hilbert-Schmidt distributed random state G G^dagger / Tr(G G^dagger) with
/// square Ginibre G.
DensityMatrix random_hs_state(BipartiteDims dims, RngStream& rng);

struct LuDiagonalizableSample {
  DensityMatrix state;
  std::vector<double> lambda;  ///< diagonal of Lambda, A-major order
  ComplexMatrix u;
  ComplexMatrix v;
};

/// (U (x) V) Lambda (U (x) V)^dagger with Lambda uniform on the simplex and
/// Haar-random U in U(m), V in U(n).
LuDiagonalizableSample random_lu_diagonalizable_sample(BipartiteDims dims,
                                                       RngStream& rng);
DensityMatrix random_lu_diagonalizable_state(BipartiteDims dims, RngStream& rng);

/// Minimal eigenvalues of the two single-qubit marginals of a two-qubit state.
struct MarginalMinima {
  double lambda_a;
  double lambda_b;
};
MarginalMinima marginal_min_eigenvalues(const DensityMatrix& rho);

/// Two-qubit marginal-problem inequalities for a descending spectrum and the
/// minimal eigenvalues of the two marginals, with slack >= -1e-10:
///   min(la, lb) >= l3 + l4
///   la + lb     >= l2 + l3 + 2 l4
///   |la - lb|   <= min(l1 - l3, l2 - l4)
/// Throws ValidationError for an unsorted or invalid spectrum or marginal
/// eigenvalues outside [0, 1/2].
bool bravyi_check(std::span<const double> lambda, double lambda_a, double lambda_b);

/// Clock-and-shift unitaries W_{a,b} = X^a Z^b stored at index a*d + b, with
/// X|k> = |k+1 mod d> and Z|k> = exp(2 pi i k / d)|k>.
struct WeylBasis {
  int d = 1;
  std::vector<ComplexMatrix> unitaries;

  const ComplexMatrix& operator()(int a, int b) const {
    return unitaries[static_cast<std::size_t>(a * d + b)];
  }
};

WeylBasis weyl_basis(int d);

struct MixedMarginals {
  DensityMatrix state;  ///< V rho V^dagger
  ComplexMatrix v;
};

/// Global unitary V sending the j-th eigenvector of rho (descending
/// eigenvalue order) to vec(W_j)/sqrt(d). Both marginals of V rho V^dagger
/// are maximally mixed. Requires dims m == n.
MixedMarginals mix_marginals(const DensityMatrix& rho);

/// 2 ln d - S(lambda): the largest mutual information on the unitary orbit
/// of a d x d state with spectrum lambda (length d^2).
double max_mutual_information(std::span<const double> lambda, int d);

}  // namespace orbitvol

#endif  // ORBITVOL_ENSEMBLE_HPP
