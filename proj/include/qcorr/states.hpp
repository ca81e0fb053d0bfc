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

// Constructors for the bipartite state families: Schmidt pure states,
// separable mixtures, Weyl-generated Bell-diagonal states, circulant states
// and the two parametric families on C^d (x) C^d.

#ifndef QCORR_STATES_HPP
#define QCORR_STATES_HPP

#include <span>
#include <string_view>
#include <vector>

#include "qcorr/density_matrix.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// |Psi><Psi| with |Psi> = sum_i lambda_i e_i (x) f_i.
DensityMatrix pure_from_schmidt(std::span<const Complex> lambdas, Index d_h, Index d_k,
                                const Tolerances& tol = {});

/// sum_i w_i rho_i (x) sigma_i.
DensityMatrix separable_mixture(std::span<const double> weights, std::span<const Matrix> rhos,
                                std::span<const Matrix> sigmas, const Tolerances& tol = {});

inline DensityMatrix product_state(const Matrix& rho, const Matrix& sigma, const Tolerances& tol = {}) {
  const double w[] = {1.0};
  return separable_mixture(w, std::span(&rho, 1), std::span(&sigma, 1), tol);
}

/// Trace-one maximally entangled state (1/d) sum_ij e_ij (x) e_ij.
DensityMatrix max_entangled(Index d);

/// Cyclic shift S^n e_k = e_{k+n mod d}.
Matrix shift_operator(Index d, Index n);

/// Weyl unitary U_mn e_k = lambda^{mk} e_{k+n}, lambda = exp(2 pi i / d).
Matrix weyl_unitary(Index d, Index m, Index n);

/// Trace-one Bell projector P_mn = (1 (x) U_mn) P+ (1 (x) U_mn)^dagger.
Matrix bell_projector(Index d, Index m, Index n);

/// Rank-d orthogonal projector onto Sigma_n = span{e_i (x) e_{i+n}}.
Matrix sigma_projector(Index d, Index n);

/// Probabilities p_mn of a Bell-diagonal state; p is d x d.
class BellWeights {
 public:
  explicit BellWeights(RealMatrix p, double prob_tol = Tolerances{}.prob);

  Index d() const { return p_.rows(); }
  const RealMatrix& p() const { return p_; }

 private:
  RealMatrix p_;
};

/// sum_mn p_mn P_mn, assembled as the Weyl twirl of P+.
DensityMatrix bell_diagonal(const BellWeights& w);

/// Blocks a^(0..d-1) of a circulant state; each PSD, total trace one.
class CirculantSpec {
 public:
  explicit CirculantSpec(std::vector<Matrix> blocks, const Tolerances& tol = {});

  Index d() const { return static_cast<Index>(blocks_.size()); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

 private:
  std::vector<Matrix> blocks_;
};

/// sum_alpha sum_ij a^(alpha)_ij e_ij (x) e_{i+alpha, j+alpha}: block alpha
/// lives on Sigma_alpha. Blocks need not be PSD.
Matrix assemble_circulant(std::span<const Matrix> blocks);

/// sum_alpha sum_ij b^(alpha)_ij e_ij (x) e_{alpha-i, alpha-j}: block alpha
/// lives on the permuted subspace span{e_i (x) e_{pi(i)+alpha}}, pi(i) = -i mod d.
Matrix assemble_permuted_circulant(std::span<const Matrix> blocks);

DensityMatrix circulant_from_blocks(const CirculantSpec& spec, const Tolerances& tol = {});

/// Blocks of the K-partial transpose on the permuted decomposition:
/// b^(alpha) = sum_beta a^(alpha+beta) o (Pi S^beta), o the Hadamard product
/// and Pi_ij = delta_{i, pi(j)}. The state is PPT iff every b^(alpha) >= 0.
std::vector<Matrix> circulant_pt_blocks(const CirculantSpec& spec);

/// Fourier blocks a^(n)_kl = (1/d) sum_m p_mn lambda^{m(k-l)} of a
/// Bell-diagonal state.
CirculantSpec bell_blocks_fourier(const BellWeights& w);

/// Mixture weights (lambda_1, ..., lambda_d) of the generalized Horodecki
/// family; lambda_d multiplies P+, lambda_i multiplies Pi_i / d.
std::vector<double> horodecki_weights(Index d, double alpha);

/// lambda_d P+ + sum_{i<d} lambda_i Pi_i / d, alpha in [0, (d-1)^2 + 1].
DensityMatrix horodecki_general(Index d, double alpha);

/// (1/Lambda)(P+ + eps Pi_1 / 3 + eps^-1 Pi_2 / 3) on C^3 (x) C^3,
/// Lambda = 1 + eps + 1/eps.
DensityMatrix bell_family_eps(double epsilon);

/// Bell weights of bell_family_eps(epsilon).
BellWeights bell_family_eps_weights(double epsilon);

enum class Family { horodecki, bell_eps };

std::string_view to_string(Family f);
/// Accepts "horodecki" and "bell-eps" (or "bell_eps"); throws DomainError.
Family parse_family(std::string_view name);

/// Dispatches to the family constructor. bell_eps requires d == 3.
DensityMatrix family_state(Family f, Index d, double param);

}  // namespace qcorr

#endif  // QCORR_STATES_HPP
