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

// Measurement-based correlations. A complete rank-1 projective measurement
// {P_k} on one factor leaves the conditional entropy
//   S(theta | {P_k}) = sum_k p_k S(theta_k),
// and the classical correlation is the largest
//   I(theta | {P_k}) = S(unmeasured marginal) - S(theta | {P_k})
// over such measurements. Discord is I(theta) minus that classical part.
//
// The supremum is searched numerically: a basis is the column set of
// exp(iG), G Hermitian with its d^2 real parameters, and each of
// cfg.restarts seeded random starts is refined with Nelder-Mead. The
// returned classical correlation is therefore a lower bound on the true
// supremum and the discord an upper bound on the true discord.

#ifndef QCORR_DISCORD_HPP
#define QCORR_DISCORD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qcorr/density_matrix.hpp"

namespace qcorr {

/// d orthogonal rank-1 projectors on one factor summing to the identity.
class MeasurementBasis {
 public:
  /// Projectors onto the columns of a unitary.
  static MeasurementBasis from_unitary(Side side, const Matrix& u, const Tolerances& tol = {});
  /// Validates P^2 = P, P^dagger = P, Tr P = 1 and sum P = 1.
  static MeasurementBasis from_projectors(Side side, std::vector<Matrix> projectors, const Tolerances& tol = {});
  static MeasurementBasis computational(Side side, Index d);

  Side side() const { return side_; }
  Index dimension() const { return static_cast<Index>(vectors_.size()); }
  /// Unit vectors v_k with P_k = v_k v_k^dagger.
  const std::vector<Vector>& vectors() const { return vectors_; }
  std::vector<Matrix> projectors() const;

 private:
  MeasurementBasis(Side side, std::vector<Vector> vectors) : side_(side), vectors_(std::move(vectors)) {}

  Side side_;
  std::vector<Vector> vectors_;
};

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 5000;   ///< function evaluations per local search
  double step_tol = 1e-10;
  std::uint64_t seed = 42;
  unsigned threads = 0;   ///< restarts run in parallel; 0 = hardware concurrency
};

struct MeasurementOutcome {
  Index index = 0;
  double probability = 0.0;
  DensityMatrix state;  ///< (P_k (x) 1) theta (P_k (x) 1) / p_k, or the K-side analogue
};

struct PostMeasurement {
  std::vector<MeasurementOutcome> outcomes;
  double discarded_mass = 0.0;  ///< total probability of outcomes with p_k <= p_floor
};

PostMeasurement post_measurement(const DensityMatrix& theta, const MeasurementBasis& basis,
                                 const Tolerances& tol = {});

double conditional_entropy_given(const DensityMatrix& theta, const MeasurementBasis& basis,
                                 const Tolerances& tol = {});

/// S(unmeasured marginal) - S(theta | basis).
double measured_mutual_information(const DensityMatrix& theta, const MeasurementBasis& basis,
                                   const Tolerances& tol = {});

/// exp(iG) for the Hermitian G encoded by d^2 reals: diagonal first, then
/// (re, im) of each upper off-diagonal entry in row-major order.
Matrix unitary_from_parameters(const RealVector& params, Index d);

struct ClassicalCorrelation {
  double value = 0.0;
  MeasurementBasis basis;
  int best_restart = 0;
};

ClassicalCorrelation classical_correlation(const DensityMatrix& theta, Side side, const OptimizerConfig& cfg = {},
                                           const Tolerances& tol = {});

struct DiscordResult {
  double value = 0.0;  ///< raw, with values in [-1e-9, 0) clamped to 0
  double raw = 0.0;    ///< mutual - classical
  double mutual = 0.0;
  double classical = 0.0;
};

inline constexpr double kDiscordClampBand = 1e-9;

DiscordResult discord(const DensityMatrix& theta, Side side, const OptimizerConfig& cfg = {},
                      const Tolerances& tol = {});

struct SymmetricDiscord {
  double value = 0.0;
  DiscordResult h;
  DiscordResult k;
};

/// (D_H + D_K) / 2.
SymmetricDiscord symmetric_discord(const DensityMatrix& theta, const OptimizerConfig& cfg = {},
                                   const Tolerances& tol = {});

}  // namespace qcorr

#endif  // QCORR_DISCORD_HPP
