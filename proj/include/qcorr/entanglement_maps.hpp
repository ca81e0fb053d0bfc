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

// State <-> entanglement map <-> conditional probability operator.
//
// A state theta on H (x) K defines phi : B(K) -> B(H),
//   phi(b) = Tr_K[(1_H (x) b) theta],   phi*(a) = Tr_H[(a (x) 1_K) theta],
// and is recovered as theta = sum_ij phi(e_ji) (x) e_ij. With a faithful
// marginal rho = phi(1_K) the map factors as
//   phi(b) = rho^{1/2} u(b^T) rho^{1/2},  u unital and CP,
// and pi = sum_kl u(e_kl) (x) e_kl = (rho^{-1/2} (x) 1) theta (rho^{-1/2} (x) 1)
// is a QCPO: pi >= 0 and Tr_K pi = 1_H.

#ifndef QCORR_ENTANGLEMENT_MAPS_HPP
#define QCORR_ENTANGLEMENT_MAPS_HPP

#include <vector>

#include "qcorr/density_matrix.hpp"
#include "qcorr/operator_core.hpp"

namespace qcorr {

/// Linear map B(K) -> B(H) stored by its values on matrix units:
/// block(i, j) = phi(e_ij) for i, j < d_K, each block d_H x d_H.
class LinearMap {
 public:
  /// blocks in row-major (i, j) order; throws ValidationError on shape errors.
  LinearMap(Dims dims, std::vector<Matrix> blocks);

  Dims dims() const { return dims_; }
  const Matrix& block(Index i, Index j) const { return blocks_[static_cast<std::size_t>(i * dims_.k + j)]; }

  /// phi(b) = sum_ij b_ij phi(e_ij).
  Matrix apply(const Matrix& b) const;

  /// Tr_H phi(1_K); equals one for an entanglement map.
  double normalization() const { return apply(Matrix::Identity(dims_.k, dims_.k)).trace().real(); }

 private:
  Dims dims_;
  std::vector<Matrix> blocks_;
};

/// Entanglement map of a state.
LinearMap map_from_state(const DensityMatrix& theta);

/// phi*(a), the dual map with Tr_K[phi*(a) b] = Tr_H[a phi(b)].
Matrix dual_apply(const LinearMap& phi, const Matrix& a);

/// sum_ij phi(e_ji) (x) e_ij. Positivity is reported rather than enforced,
/// since the CP/CCP tests run on maps whose operator is not a state.
struct ChoiOperator {
  BipartiteOperator op;
  PsdResult positivity;

  bool is_state(const Tolerances& tol = {}) const {
    return positivity.psd && std::abs(op.matrix.trace().real() - 1.0) <= tol.prob;
  }
  /// Throws ValidationError when the operator is not a density matrix.
  DensityMatrix to_state(const Tolerances& tol = {}) const { return DensityMatrix::from_operator(op, tol); }
};

ChoiOperator state_from_map(const LinearMap& phi, const Tolerances& tol = {});

/// Completely co-positive: the operator of state_from_map is PSD.
bool is_ccp(const LinearMap& phi, const Tolerances& tol = {});
/// Completely positive: sum_ij phi(e_ij) (x) e_ij is PSD. For phi built from
/// a state this is the PPT test of that state.
bool is_cp(const LinearMap& phi, const Tolerances& tol = {});

/// Quantum conditional probability operator: pi >= 0, Tr_K pi = 1_H.
class Qcpo {
 public:
  /// Checks both conditions; throws ValidationError.
  static Qcpo from_operator(BipartiteOperator op, const Tolerances& tol = {});

  const BipartiteOperator& op() const { return op_; }

 private:
  explicit Qcpo(BipartiteOperator op) : op_(std::move(op)) {}
  BipartiteOperator op_;
};

/// (rho^{-1/2} (x) 1) theta (rho^{-1/2} (x) 1) with rho = Tr_K theta.
/// Throws ValidationError, reporting rho's min eigenvalue, if rho is not
/// faithful.
Qcpo qcpo_from_state(const DensityMatrix& theta, const Tolerances& tol = {});

/// (rho^{1/2} (x) 1) pi (rho^{1/2} (x) 1); the result has Tr_K = rho.
DensityMatrix state_from_qcpo(const Qcpo& pi, const Matrix& rho, const Tolerances& tol = {});

/// sum_kl u(e_kl) (x) e_kl for a unital CP map u.
Qcpo qcpo_from_unital_map(const LinearMap& u, const Tolerances& tol = {});

struct MapDecomposition {
  LinearMap unital;  ///< u(b) = rho^{-1/2} phi(b^T) rho^{-1/2}
  Matrix rho;        ///< phi(1_K)
};

/// Throws ValidationError if phi(1_K) is not faithful.
MapDecomposition decompose_map(const LinearMap& phi, const Tolerances& tol = {});

/// phi(b) = rho^{1/2} u(b^T) rho^{1/2}.
LinearMap recompose(const MapDecomposition& parts);

/// rho^{-1/2} and rho^{1/2} of a faithful density matrix.
Matrix inverse_sqrt_faithful(const Matrix& rho, const Tolerances& tol = {});
Matrix sqrt_psd(const Matrix& rho, const Tolerances& tol = {});

}  // namespace qcorr

#endif  // QCORR_ENTANGLEMENT_MAPS_HPP
