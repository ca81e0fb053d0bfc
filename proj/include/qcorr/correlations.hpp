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

// Entropic correlation measures of bipartite states. All entropies are in
// nats. For theta on H (x) K with marginals rho = Tr_K theta and
// sigma = Tr_H theta:
//   I(theta)          = S(rho) + S(sigma) - S(theta)
//   S_theta(sigma|rho) = S(theta) - S(rho)
//   D(theta)          = (S(rho) + S(sigma)) / 2 - S(theta)

#ifndef QCORR_CORRELATIONS_HPP
#define QCORR_CORRELATIONS_HPP

#include <string_view>

#include "qcorr/density_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// -sum x ln x over a spectrum. Values in [-psd_tol, 0) count as zero;
/// anything more negative throws ValidationError.
double entropy_of_spectrum(const RealVector& spectrum, double psd_tol = Tolerances{}.psd);

/// Von Neumann entropy of a (single-system or bipartite) density matrix.
double von_neumann_entropy(const Matrix& rho, const Tolerances& tol = {});
inline double von_neumann_entropy(const DensityMatrix& theta, const Tolerances& tol = {}) {
  return von_neumann_entropy(theta.matrix(), tol);
}

/// Umegaki relative entropy Tr theta (ln theta - ln omega). Returns
/// +infinity when the support of theta is not inside the support of omega.
double relative_entropy(const Matrix& theta, const Matrix& omega, const Tolerances& tol = {});

double mutual_entropy(const DensityMatrix& theta, const Tolerances& tol = {});

/// S(theta) minus the entropy of the marginal on `conditioned_on`.
/// conditioned_on = H gives S_theta(sigma | rho).
double conditional_entropy(const DensityMatrix& theta, Side conditioned_on, const Tolerances& tol = {});

double d_correlation(const DensityMatrix& theta, const Tolerances& tol = {});

struct PptResult {
  bool ppt = false;
  double margin = 0.0;  ///< min eigenvalue of the K-partial transpose
};

PptResult is_ppt(const DensityMatrix& theta, const Tolerances& tol = {});

struct CorrelationReport {
  double s_theta = 0.0;
  double s_rho = 0.0;
  double s_sigma = 0.0;
  double mutual = 0.0;
  double s_k_given_h = 0.0;  ///< S_theta(sigma | rho)
  double s_h_given_k = 0.0;  ///< S_theta(rho | sigma)
  double d = 0.0;
  double ppt_margin = 0.0;
  bool ppt = false;
};

/// All of the above from one set of eigendecompositions.
CorrelationReport correlation_report(const DensityMatrix& theta, const Tolerances& tol = {});

/// Closed-form D of a family member (natural log, 0 ln 0 = 0).
double analytic_d(Family family, double param, Index d = 3);

enum class SeparabilityLabel { sep, ppt_ent, npt };

std::string_view to_string(SeparabilityLabel label);

/// Label from the published analytic classification of each family; never
/// computed from numerics.
SeparabilityLabel classify_family(Family family, Index d, double param, double eq_tol = Tolerances{}.eq_band);

enum class DOrdering { a_stronger, b_stronger, equal };

std::string_view to_string(DOrdering ordering);

struct DComparison {
  double d_a = 0.0;
  double d_b = 0.0;
  DOrdering ordering = DOrdering::equal;
};

/// Orders two states with equal marginals by D. Throws ValidationError
/// reporting the max marginal deviation when the marginals differ.
DComparison compare_d(const DensityMatrix& a, const DensityMatrix& b, const Tolerances& tol = {});

}  // namespace qcorr

#endif  // QCORR_CORRELATIONS_HPP
