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

#ifndef QCORR_NELDER_MEAD_HPP
#define QCORR_NELDER_MEAD_HPP

#include <functional>

#include "qcorr/types.hpp"

namespace qcorr {

struct NelderMeadOptions {
  double initial_step = 0.5;
  int max_evaluations = 5000;
  double f_tol = 1e-12;  ///< spread of simplex values at convergence
  double x_tol = 1e-9;   ///< simplex diameter at convergence
};

struct NelderMeadResult {
  RealVector x;
  double value = 0.0;
  int evaluations = 0;
};

/// Minimizes f with the standard Nelder-Mead simplex (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2), starting from an axis-aligned
/// simplex around x0.
NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& f, const RealVector& x0,
                             const NelderMeadOptions& options = {});

}  // namespace qcorr

#endif  // QCORR_NELDER_MEAD_HPP
