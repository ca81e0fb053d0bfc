// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded generators for property-style tests.

#ifndef QCORR_TESTS_RANDOM_STATES_HPP
#define QCORR_TESTS_RANDOM_STATES_HPP

#include <random>
#include <vector>

#include "qcorr/density_matrix.hpp"
#include "qcorr/operator_core.hpp"
#include "qcorr/states.hpp"

namespace qcorr::testing {

using Rng = std::mt19937_64;

inline Matrix random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = Complex(n(rng), n(rng));
  return g;
}

inline Matrix random_hermitian(Index n, Rng& rng) {
  const Matrix g = random_ginibre(n, n, rng);
  return (g + g.adjoint()) / 2.0;
}

/// Haar-distributed unitary (QR of a Ginibre matrix with the R-phase fix).
inline Matrix random_unitary(Index n, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_ginibre(n, n, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline Vector random_unit_vector(Index n, Rng& rng) {
  Vector v = random_ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

/// G G^dagger / Tr with G of size n x rank; full rank by default.
inline Matrix random_density(Index n, Rng& rng, Index rank = -1) {
  const Matrix g = random_ginibre(n, rank < 0 ? n : rank, rng);
  const Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline DensityMatrix random_bipartite(Dims dims, Rng& rng, Index rank = -1) {
  return DensityMatrix::from_matrix(dims, random_density(dims.total(), rng, rank));
}

inline DensityMatrix random_pure(Dims dims, Rng& rng) { return random_bipartite(dims, rng, 1); }

inline std::vector<double> random_probabilities(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& x : p) total += (x = e(rng));
  for (double& x : p) x /= total;
  return p;
}

inline DensityMatrix random_separable(Dims dims, int terms, Rng& rng) {
  const std::vector<double> w = random_probabilities(static_cast<std::size_t>(terms), rng);
  std::vector<Matrix> rhos, sigmas;
  for (int i = 0; i < terms; ++i) {
    rhos.push_back(random_density(dims.h, rng));
    sigmas.push_back(random_density(dims.k, rng));
  }
  return separable_mixture(w, rhos, sigmas);
}

/// sum_k p_k |u_k><u_k| (x) sigma_k for a random orthonormal basis u_k of H.
inline DensityMatrix random_classical_quantum(Dims dims, Rng& rng) {
  const Matrix u = random_unitary(dims.h, rng);
  const std::vector<double> p = random_probabilities(static_cast<std::size_t>(dims.h), rng);
  Matrix theta = Matrix::Zero(dims.total(), dims.total());
  for (Index k = 0; k < dims.h; ++k)
    theta += p[static_cast<std::size_t>(k)] * kron(Matrix(u.col(k) * u.col(k).adjoint()), random_density(dims.k, rng));
  return DensityMatrix::from_matrix(dims, theta);
}

inline CirculantSpec random_circulant_spec(Index d, Rng& rng) {
  std::vector<Matrix> blocks;
  const std::vector<double> w = random_probabilities(static_cast<std::size_t>(d), rng);
  for (Index a = 0; a < d; ++a) blocks.push_back(w[static_cast<std::size_t>(a)] * random_density(d, rng));
  return CirculantSpec(std::move(blocks));
}

inline BellWeights random_bell_weights(Index d, Rng& rng) {
  const std::vector<double> p = random_probabilities(static_cast<std::size_t>(d * d), rng);
  RealMatrix m(d, d);
  for (Index i = 0; i < d * d; ++i) m(i / d, i % d) = p[static_cast<std::size_t>(i)];
  return BellWeights(m);
}

/// theta -> (U (x) V) theta (U (x) V)^dagger.
inline DensityMatrix local_rotate(const DensityMatrix& theta, const Matrix& u, const Matrix& v) {
  const Matrix uv = kron(u, v);
  return DensityMatrix::from_matrix(theta.dims(), uv * theta.matrix() * uv.adjoint());
}

}  // namespace qcorr::testing

#endif  // QCORR_TESTS_RANDOM_STATES_HPP
