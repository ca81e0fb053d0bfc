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

#include "qcorr/entanglement_maps.hpp"

#include <cmath>
#include <sstream>

namespace qcorr {
namespace {

void require_faithful(const RealVector& spectrum, const Tolerances& tol) {
  const double lo = spectrum.minCoeff();
  if (lo < tol.faithful) {
    std::ostringstream msg;
    msg << "marginal state is not faithful: min eigenvalue " << lo << " below " << tol.faithful;
    throw ValidationError(msg.str());
  }
}

}  // namespace

LinearMap::LinearMap(Dims dims, std::vector<Matrix> blocks) : dims_(dims), blocks_(std::move(blocks)) {
  if (dims_.h < 1 || dims_.k < 1 || static_cast<Index>(blocks_.size()) != dims_.k * dims_.k)
    throw ValidationError("linear map needs d_K^2 blocks");
  for (const Matrix& b : blocks_)
    if (b.rows() != dims_.h || b.cols() != dims_.h) throw ValidationError("linear map block has wrong shape");
}

Matrix LinearMap::apply(const Matrix& b) const {
  if (b.rows() != dims_.k || b.cols() != dims_.k) throw ValidationError("linear map argument has wrong shape");
  Matrix out = Matrix::Zero(dims_.h, dims_.h);
  for (Index i = 0; i < dims_.k; ++i)
    for (Index j = 0; j < dims_.k; ++j)
      if (b(i, j) != Complex(0.0)) out += b(i, j) * block(i, j);
  return out;
}

LinearMap map_from_state(const DensityMatrix& theta) {
  const Dims dims = theta.dims();
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(dims.k * dims.k));
  for (Index i = 0; i < dims.k; ++i)
    for (Index j = 0; j < dims.k; ++j)
      blocks.push_back(partial_trace(embed(matrix_unit(dims.k, i, j), dims, Side::K) * theta.matrix(), dims, Side::K));
  return LinearMap(dims, std::move(blocks));
}

Matrix dual_apply(const LinearMap& phi, const Matrix& a) {
  const Dims dims = phi.dims();
  if (a.rows() != dims.h || a.cols() != dims.h) {
    std::ostringstream msg;
    msg << "dual_apply: argument is " << a.rows() << "x" << a.cols() << ", expected " << dims.h << "x" << dims.h;
    throw ValidationError(msg.str());
  }
  Matrix out(dims.k, dims.k);
  for (Index b = 0; b < dims.k; ++b)
    for (Index c = 0; c < dims.k; ++c) out(b, c) = (a * phi.block(c, b)).trace();
  return out;
}

ChoiOperator state_from_map(const LinearMap& phi, const Tolerances& tol) {
  const Dims dims = phi.dims();
  Matrix theta = Matrix::Zero(dims.total(), dims.total());
  for (Index i = 0; i < dims.k; ++i)
    for (Index j = 0; j < dims.k; ++j) theta += kron(phi.block(j, i), matrix_unit(dims.k, i, j));
  ChoiOperator out{BipartiteOperator(dims, std::move(theta)), {}};
  out.positivity = is_psd(out.op.matrix, tol.psd, tol.herm);
  return out;
}

bool is_ccp(const LinearMap& phi, const Tolerances& tol) { return state_from_map(phi, tol).positivity.psd; }

bool is_cp(const LinearMap& phi, const Tolerances& tol) {
  const Dims dims = phi.dims();
  Matrix choi = Matrix::Zero(dims.total(), dims.total());
  for (Index i = 0; i < dims.k; ++i)
    for (Index j = 0; j < dims.k; ++j) choi += kron(phi.block(i, j), matrix_unit(dims.k, i, j));
  return is_psd(choi, tol.psd, tol.herm).psd;
}

Qcpo Qcpo::from_operator(BipartiteOperator op, const Tolerances& tol) {
  const PsdResult psd = is_psd(op.matrix, tol.psd, tol.herm);
  if (!psd.psd) {
    std::ostringstream msg;
    msg << "QCPO is not positive semidefinite: min eigenvalue " << psd.min_eigenvalue;
    throw ValidationError(msg.str());
  }
  const Matrix reduced = partial_trace(op, Side::K);
  const double dev = max_abs_diff(reduced, Matrix::Identity(op.dims.h, op.dims.h));
  if (dev > tol.prob) {
    std::ostringstream msg;
    msg << "QCPO partial trace over K deviates from the identity by " << dev;
    throw ValidationError(msg.str());
  }
  return Qcpo(std::move(op));
}

Matrix sqrt_psd(const Matrix& rho, const Tolerances& tol) {
  return hermitian_function(rho, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }, tol.herm);
}

Matrix inverse_sqrt_faithful(const Matrix& rho, const Tolerances& tol) {
  const auto eig = hermitian_eig(rho, tol.herm);
  require_faithful(eig.values, tol);
  const RealVector inv = eig.values.cwiseSqrt().cwiseInverse();
  return eig.vectors * inv.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

Qcpo qcpo_from_state(const DensityMatrix& theta, const Tolerances& tol) {
  const Dims dims = theta.dims();
  const Matrix left = embed(inverse_sqrt_faithful(theta.marginal_h(), tol), dims, Side::H);
  return Qcpo::from_operator(BipartiteOperator(dims, left * theta.matrix() * left), tol);
}

DensityMatrix state_from_qcpo(const Qcpo& pi, const Matrix& rho, const Tolerances& tol) {
  const Dims dims = pi.op().dims;
  if (rho.rows() != dims.h || rho.cols() != dims.h) throw ValidationError("state_from_qcpo: marginal has wrong dimension");
  validate_density(rho, tol);
  require_faithful(eigenvalues_hermitian(rho, tol.herm), tol);
  const Matrix left = embed(sqrt_psd(rho, tol), dims, Side::H);
  return DensityMatrix::from_matrix(dims, left * pi.op().matrix * left, tol);
}

Qcpo qcpo_from_unital_map(const LinearMap& u, const Tolerances& tol) {
  const Dims dims = u.dims();
  Matrix pi = Matrix::Zero(dims.total(), dims.total());
  for (Index k = 0; k < dims.k; ++k)
    for (Index l = 0; l < dims.k; ++l) pi += kron(u.block(k, l), matrix_unit(dims.k, k, l));
  return Qcpo::from_operator(BipartiteOperator(dims, std::move(pi)), tol);
}

MapDecomposition decompose_map(const LinearMap& phi, const Tolerances& tol) {
  const Dims dims = phi.dims();
  Matrix rho = phi.apply(Matrix::Identity(dims.k, dims.k));
  const Matrix inv = inverse_sqrt_faithful(rho, tol);
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(dims.k * dims.k));
  for (Index i = 0; i < dims.k; ++i)
    for (Index j = 0; j < dims.k; ++j) blocks.push_back(inv * phi.block(j, i) * inv);
  return {LinearMap(dims, std::move(blocks)), std::move(rho)};
}

LinearMap recompose(const MapDecomposition& parts) {
  const Dims dims = parts.unital.dims();
  const Matrix root = sqrt_psd(parts.rho);
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(dims.k * dims.k));
  for (Index i = 0; i < dims.k; ++i)
    for (Index j = 0; j < dims.k; ++j) blocks.push_back(root * parts.unital.block(j, i) * root);
  return LinearMap(dims, std::move(blocks));
}

}  // namespace qcorr
