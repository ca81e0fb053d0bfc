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

#ifndef QCORR_TYPES_HPP
#define QCORR_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcorr {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Factor of a bipartite space H (x) K.
enum class Side { H, K };

constexpr Side other(Side s) { return s == Side::H ? Side::K : Side::H; }

inline const char* to_string(Side s) { return s == Side::H ? "H" : "K"; }

/// Numerical tolerances shared across modules. All of them may be overridden
/// by callers (the CLI exposes them through --tol name=value).
struct Tolerances {
  double herm = 1e-10;      ///< max |A_ij - conj(A_ji)| accepted as Hermitian
  double eig = 1e-9;        ///< eigendecomposition residual contract
  double psd = 1e-10;       ///< eigenvalues >= -psd count as non-negative
  double prob = 1e-9;       ///< normalization of probabilities and traces
  double faithful = 1e-8;   ///< min eigenvalue for an invertible marginal
  double marg = 1e-9;       ///< marginal equality in D-ordering comparisons
  double eq_band = 1e-9;    ///< equality band for D-ordering
  double p_floor = 1e-12;   ///< measurement outcomes below this are dropped
  double supp = 1e-10;      ///< support threshold in relative entropy
};

/// Malformed input: a broken matrix invariant, a bad probability vector, a
/// dimension mismatch.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside the domain of a family or operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qcorr

#endif  // QCORR_TYPES_HPP
