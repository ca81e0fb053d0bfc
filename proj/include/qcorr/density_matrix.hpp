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

#ifndef QCORR_DENSITY_MATRIX_HPP
#define QCORR_DENSITY_MATRIX_HPP

#include <span>

#include "qcorr/operator_core.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// Checks a single-system density matrix in the order Hermiticity, PSD,
/// trace and throws ValidationError naming the first violated invariant.
void validate_density(const Matrix& rho, const Tolerances& tol = {});

/// Hermitian, positive semidefinite, trace-one operator on H (x) K.
class DensityMatrix {
 public:
  /// Validates and wraps. Throws ValidationError on the first violated
  /// invariant (Hermiticity, then PSD, then trace).
  static DensityMatrix from_operator(BipartiteOperator op, const Tolerances& tol = {});
  static DensityMatrix from_matrix(Dims dims, Matrix m, const Tolerances& tol = {}) {
    return from_operator(BipartiteOperator(dims, std::move(m)), tol);
  }

  const BipartiteOperator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix; }
  Dims dims() const { return op_.dims; }

  /// Reduced state on H (tracing out K), rho = Tr_K theta.
  Matrix marginal_h() const { return partial_trace(op_, Side::K); }
  /// Reduced state on K (tracing out H), sigma = Tr_H theta.
  Matrix marginal_k() const { return partial_trace(op_, Side::H); }
  Matrix marginal(Side kept) const { return kept == Side::H ? marginal_h() : marginal_k(); }

 private:
  explicit DensityMatrix(BipartiteOperator op) : op_(std::move(op)) {}

  BipartiteOperator op_;
};

/// Mixes states of equal dimensions: sum_i w_i theta_i. Weights must form a
/// probability vector.
DensityMatrix mix(std::span<const double> weights, std::span<const DensityMatrix> states,
                  const Tolerances& tol = {});

}  // namespace qcorr

#endif  // QCORR_DENSITY_MATRIX_HPP
