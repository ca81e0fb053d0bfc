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

#include "qcorr/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qcorr/operator_core.hpp"

namespace qcorr {
namespace {

Index mod(Index a, Index d) { return ((a % d) + d) % d; }

Complex root_of_unity(Index d, Index e) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(e, d)) / static_cast<double>(d));
}

void require_dimension(Index d, Index min_d, const char* what) {
  if (d < min_d) {
    std::ostringstream msg;
    msg << what << ": dimension " << d << " is below " << min_d;
    throw DomainError(msg.str());
  }
}

void require_index(Index v, Index d, const char* what) {
  if (v < 0 || v >= d) {
    std::ostringstream msg;
    msg << what << ": index " << v << " out of range [0, " << d << ")";
    throw DomainError(msg.str());
  }
}

// Permutation matrix of pi(0) = 0, pi(i) = d - i: Pi_ij = delta_{i, pi(j)}.
RealMatrix reflection_permutation(Index d) {
  RealMatrix p = RealMatrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) p(mod(-j, d), j) = 1.0;
  return p;
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    std::ostringstream msg;
    msg << "bell-eps family: epsilon = " << epsilon << " must be positive and finite";
    throw DomainError(msg.str());
  }
}

}  // namespace

DensityMatrix pure_from_schmidt(std::span<const Complex> lambdas, Index d_h, Index d_k, const Tolerances& tol) {
  const Dims dims{d_h, d_k};
  if (lambdas.empty() || static_cast<Index>(lambdas.size()) > std::min(d_h, d_k))
    throw ValidationError("pure_from_schmidt: Schmidt rank must be between 1 and min(d_H, d_K)");
  Vector psi = Vector::Zero(dims.total());
  double norm = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const auto ii = static_cast<Index>(i);
    psi(dims.flat(ii, ii)) = lambdas[i];
    norm += std::norm(lambdas[i]);
  }
  if (std::abs(norm - 1.0) > tol.prob) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "pure_from_schmidt: sum |lambda_i|^2 = " << norm << ", expected 1";
    throw ValidationError(msg.str());
  }
  return DensityMatrix::from_matrix(dims, psi * psi.adjoint(), tol);
}

DensityMatrix separable_mixture(std::span<const double> weights, std::span<const Matrix> rhos,
                                std::span<const Matrix> sigmas, const Tolerances& tol) {
  if (weights.empty() || weights.size() != rhos.size() || weights.size() != sigmas.size())
    throw ValidationError("separable_mixture: weights, rhos and sigmas must have equal nonzero length");
  const Dims dims{rhos.front().rows(), sigmas.front().rows()};
  Matrix sum = Matrix::Zero(dims.total(), dims.total());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (rhos[i].rows() != dims.h || sigmas[i].rows() != dims.k)
      throw ValidationError("separable_mixture: factor dimension mismatch");
    if (!(weights[i] >= 0.0)) throw ValidationError("separable_mixture: negative weight");
    validate_density(rhos[i], tol);
    validate_density(sigmas[i], tol);
    sum += weights[i] * kron(rhos[i], sigmas[i]);
    total += weights[i];
  }
  if (std::abs(total - 1.0) > tol.prob) throw ValidationError("separable_mixture: weights do not sum to 1");
  return DensityMatrix::from_matrix(dims, std::move(sum), tol);
}

DensityMatrix max_entangled(Index d) {
  require_dimension(d, 2, "max_entangled");
  const Dims dims{d, d};
  Vector psi = Vector::Zero(dims.total());
  for (Index i = 0; i < d; ++i) psi(dims.flat(i, i)) = 1.0 / std::sqrt(static_cast<double>(d));
  return DensityMatrix::from_matrix(dims, psi * psi.adjoint());
}

Matrix shift_operator(Index d, Index n) {
  Matrix s = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) s(mod(k + n, d), k) = 1.0;
  return s;
}

Matrix weyl_unitary(Index d, Index m, Index n) {
  require_dimension(d, 1, "weyl_unitary");
  require_index(m, d, "weyl_unitary");
  require_index(n, d, "weyl_unitary");
  Matrix u = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) u(mod(k + n, d), k) = root_of_unity(d, m * k);
  return u;
}

Matrix bell_projector(Index d, Index m, Index n) {
  const Matrix local = embed(weyl_unitary(d, m, n), Dims{d, d}, Side::K);
  return local * max_entangled(d).matrix() * local.adjoint();
}

Matrix sigma_projector(Index d, Index n) {
  require_dimension(d, 1, "sigma_projector");
  require_index(n, d, "sigma_projector");
  const Matrix s = shift_operator(d, n);
  Matrix out = Matrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i) {
    const Matrix e = matrix_unit(d, i, i);
    out += kron(e, s * e * s.adjoint());
  }
  return out;
}

BellWeights::BellWeights(RealMatrix p, double prob_tol) : p_(std::move(p)) {
  if (p_.rows() < 2 || p_.rows() != p_.cols()) throw ValidationError("Bell weights must form a square d x d matrix, d >= 2");
  if ((p_.array() < 0.0).any() || !p_.allFinite()) throw ValidationError("Bell weights must be non-negative");
  if (std::abs(p_.sum() - 1.0) > prob_tol) throw ValidationError("Bell weights do not sum to 1");
}

DensityMatrix bell_diagonal(const BellWeights& w) {
  const Index d = w.d();
  const Dims dims{d, d};
  const Matrix psi = max_entangled(d).matrix();
  Matrix sum = Matrix::Zero(dims.total(), dims.total());
  for (Index m = 0; m < d; ++m)
    for (Index n = 0; n < d; ++n) {
      if (w.p()(m, n) == 0.0) continue;
      const Matrix local = embed(weyl_unitary(d, m, n), dims, Side::K);
      sum += w.p()(m, n) * (local * psi * local.adjoint());
    }
  return DensityMatrix::from_matrix(dims, std::move(sum));
}

CirculantSpec::CirculantSpec(std::vector<Matrix> blocks, const Tolerances& tol) : blocks_(std::move(blocks)) {
  const Index d = static_cast<Index>(blocks_.size());
  if (d < 2) throw ValidationError("circulant spec needs d >= 2 blocks");
  double trace = 0.0;
  for (Index a = 0; a < d; ++a) {
    const Matrix& b = blocks_[static_cast<std::size_t>(a)];
    if (b.rows() != d || b.cols() != d) {
      std::ostringstream msg;
      msg << "circulant block " << a << " is " << b.rows() << "x" << b.cols() << ", expected " << d << "x" << d;
      throw ValidationError(msg.str());
    }
    const PsdResult psd = is_psd(b, tol.psd, tol.herm);
    if (!psd.psd) {
      std::ostringstream msg;
      msg << "circulant block " << a << " is not positive semidefinite: min eigenvalue " << psd.min_eigenvalue;
      throw ValidationError(msg.str());
    }
    trace += b.trace().real();
  }
  if (std::abs(trace - 1.0) > tol.prob) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "circulant blocks have total trace " << trace << ", expected 1";
    throw ValidationError(msg.str());
  }
}

Matrix assemble_circulant(std::span<const Matrix> blocks) {
  const Index d = static_cast<Index>(blocks.size());
  const Dims dims{d, d};
  Matrix out = Matrix::Zero(dims.total(), dims.total());
  for (Index a = 0; a < d; ++a)
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        out(dims.flat(i, mod(i + a, d)), dims.flat(j, mod(j + a, d))) += blocks[static_cast<std::size_t>(a)](i, j);
  return out;
}

Matrix assemble_permuted_circulant(std::span<const Matrix> blocks) {
  const Index d = static_cast<Index>(blocks.size());
  const Dims dims{d, d};
  Matrix out = Matrix::Zero(dims.total(), dims.total());
  for (Index a = 0; a < d; ++a)
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        out(dims.flat(i, mod(a - i, d)), dims.flat(j, mod(a - j, d))) += blocks[static_cast<std::size_t>(a)](i, j);
  return out;
}

DensityMatrix circulant_from_blocks(const CirculantSpec& spec, const Tolerances& tol) {
  return DensityMatrix::from_matrix(Dims{spec.d(), spec.d()}, assemble_circulant(spec.blocks()), tol);
}

std::vector<Matrix> circulant_pt_blocks(const CirculantSpec& spec) {
  const Index d = spec.d();
  const RealMatrix pi = reflection_permutation(d);
  std::vector<Matrix> out(static_cast<std::size_t>(d), Matrix::Zero(d, d));
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      const Matrix mask = (pi.cast<Complex>() * shift_operator(d, b));
      out[static_cast<std::size_t>(a)] += spec.blocks()[static_cast<std::size_t>(mod(a + b, d))].cwiseProduct(mask);
    }
  return out;
}

CirculantSpec bell_blocks_fourier(const BellWeights& w) {
  const Index d = w.d();
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(d));
  for (Index n = 0; n < d; ++n) {
    Matrix a = Matrix::Zero(d, d);
    for (Index k = 0; k < d; ++k)
      for (Index l = 0; l < d; ++l)
        for (Index m = 0; m < d; ++m) a(k, l) += w.p()(m, n) * root_of_unity(d, m * (k - l));
    blocks.push_back(a / static_cast<double>(d));
  }
  return CirculantSpec(std::move(blocks));
}

std::vector<double> horodecki_weights(Index d, double alpha) {
  require_dimension(d, 3, "horodecki family");
  const double dm1 = static_cast<double>(d - 1);
  const double upper = dm1 * dm1 + 1.0;
  if (!(alpha >= 0.0 && alpha <= upper)) {
    std::ostringstream msg;
    msg << "horodecki family: alpha = " << alpha << " outside [0, " << upper << "] for d = " << d;
    throw DomainError(msg.str());
  }
  const double ell = dm1 * (2.0 * static_cast<double>(d) - 3.0) + 1.0;
  std::vector<double> lambda(static_cast<std::size_t>(d), dm1 / ell);
  lambda[0] = alpha / ell;
  lambda[static_cast<std::size_t>(d - 2)] = (upper - alpha) / ell;
  return lambda;
}

DensityMatrix horodecki_general(Index d, double alpha) {
  const std::vector<double> lambda = horodecki_weights(d, alpha);
  Matrix theta = lambda.back() * max_entangled(d).matrix();
  for (Index i = 1; i < d; ++i)
    theta += (lambda[static_cast<std::size_t>(i - 1)] / static_cast<double>(d)) * sigma_projector(d, i);
  return DensityMatrix::from_matrix(Dims{d, d}, std::move(theta));
}

BellWeights bell_family_eps_weights(double epsilon) {
  require_epsilon(epsilon);
  const double big_lambda = 1.0 + epsilon + 1.0 / epsilon;
  RealMatrix p = RealMatrix::Zero(3, 3);
  p(0, 0) = 1.0 / big_lambda;
  for (Index m = 0; m < 3; ++m) {
    p(m, 1) = epsilon / (3.0 * big_lambda);
    p(m, 2) = 1.0 / (3.0 * epsilon * big_lambda);
  }
  return BellWeights(std::move(p));
}

DensityMatrix bell_family_eps(double epsilon) {
  require_epsilon(epsilon);
  const double big_lambda = 1.0 + epsilon + 1.0 / epsilon;
  Matrix theta = max_entangled(3).matrix() + (epsilon / 3.0) * sigma_projector(3, 1) +
                 (1.0 / (3.0 * epsilon)) * sigma_projector(3, 2);
  return DensityMatrix::from_matrix(Dims{3, 3}, theta / big_lambda);
}

std::string_view to_string(Family f) { return f == Family::horodecki ? "horodecki" : "bell-eps"; }

Family parse_family(std::string_view name) {
  if (name == "horodecki") return Family::horodecki;
  if (name == "bell-eps" || name == "bell_eps") return Family::bell_eps;
  throw DomainError("unknown family '" + std::string(name) + "' (expected horodecki or bell-eps)");
}

DensityMatrix family_state(Family f, Index d, double param) {
  if (f == Family::horodecki) return horodecki_general(d, param);
  if (d != 3) throw DomainError("bell-eps family is defined for d = 3 only");
  return bell_family_eps(param);
}

}  // namespace qcorr
