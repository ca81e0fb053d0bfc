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

#include "qcorr/classical_info.hpp"

#include <cmath>
#include <sstream>

namespace qcorr {
namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

template <typename Derived>
double entropy_of(const Eigen::DenseBase<Derived>& p) {
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i) s -= xlogx(p.derived().data()[i]);
  return s;
}

void check_probabilities(const auto& values, double prob_tol, const char* what) {
  if (values.size() == 0) throw ValidationError(std::string(what) + " is empty");
  for (Index i = 0; i < values.size(); ++i) {
    const double v = values.data()[i];
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream msg;
      msg << what << " has invalid entry " << v << " at flat position " << i;
      throw ValidationError(msg.str());
    }
  }
  const double total = values.sum();
  if (std::abs(total - 1.0) > prob_tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " sums to " << total << ", expected 1";
    throw ValidationError(msg.str());
  }
}

}  // namespace

double shannon_entropy(const RealVector& p, double prob_tol) {
  check_probabilities(p, prob_tol, "probability vector");
  return entropy_of(p);
}

JointDistribution::JointDistribution(RealMatrix r, double prob_tol) : r_(std::move(r)) {
  check_probabilities(r_, prob_tol, "joint distribution");
}

JointEntropies joint_entropies(const JointDistribution& r) {
  JointEntropies e;
  e.s_x = entropy_of(r.marginal_x());
  e.s_y = entropy_of(r.marginal_y());
  e.s_xy = entropy_of(r.matrix());
  e.mutual = e.s_x + e.s_y - e.s_xy;
  e.s_x_given_y = e.s_xy - e.s_y;
  e.s_y_given_x = e.s_xy - e.s_x;
  return e;
}

StochasticChannel channel_from_joint(const JointDistribution& r) {
  StochasticChannel ch;
  ch.input = r.marginal_y();
  ch.transition.resize(r.matrix().rows(), r.matrix().cols());
  for (Index j = 0; j < r.matrix().cols(); ++j) {
    if (!(ch.input(j) > 0.0)) {
      std::ostringstream msg;
      msg << "column " << j << " has zero marginal probability; p(. | y_" << j << ") is undefined";
      throw ValidationError(msg.str());
    }
    ch.transition.col(j) = r.matrix().col(j) / ch.input(j);
  }
  return ch;
}

}  // namespace qcorr
