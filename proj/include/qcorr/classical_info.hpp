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

// Shannon entropies of finite joint distributions. Natural log throughout.

#ifndef QCORR_CLASSICAL_INFO_HPP
#define QCORR_CLASSICAL_INFO_HPP

#include "qcorr/types.hpp"

namespace qcorr {

/// -sum p_i ln p_i with 0 ln 0 = 0.
double shannon_entropy(const RealVector& p, double prob_tol = Tolerances{}.prob);

/// r_ij = P(X = x_i, Y = y_j). Rows index X, columns index Y.
class JointDistribution {
 public:
  explicit JointDistribution(RealMatrix r, double prob_tol = Tolerances{}.prob);

  const RealMatrix& matrix() const { return r_; }
  RealVector marginal_x() const { return r_.rowwise().sum(); }
  RealVector marginal_y() const { return r_.colwise().sum().transpose(); }
  JointDistribution transposed() const { return JointDistribution(r_.transpose()); }

 private:
  RealMatrix r_;
};

struct JointEntropies {
  double s_x = 0.0;
  double s_y = 0.0;
  double s_xy = 0.0;
  double mutual = 0.0;
  double s_x_given_y = 0.0;
  double s_y_given_x = 0.0;
};

JointEntropies joint_entropies(const JointDistribution& r);

/// Column-stochastic T_ij = p(i | j) together with the input distribution q,
/// so that r_ij = T_ij q_j and p = T q.
struct StochasticChannel {
  RealMatrix transition;
  RealVector input;

  RealMatrix joint() const { return transition * input.asDiagonal(); }
  RealVector output() const { return transition * input; }
};

/// Throws ValidationError naming the column whose marginal q_j is zero.
StochasticChannel channel_from_joint(const JointDistribution& r);

}  // namespace qcorr

#endif  // QCORR_CLASSICAL_INFO_HPP
