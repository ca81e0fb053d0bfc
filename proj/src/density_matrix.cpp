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

#include "qcorr/density_matrix.hpp"

#include <cmath>
#include <sstream>

namespace qcorr {

void validate_density(const Matrix& rho, const Tolerances& tol) {
  require_hermitian(rho, tol.herm);
  const PsdResult psd = is_psd(rho, tol.psd, tol.herm);
  if (!psd.psd) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite: min eigenvalue " << psd.min_eigenvalue;
    throw ValidationError(msg.str());
  }
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > tol.prob) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace is " << trace << ", expected 1";
    throw ValidationError(msg.str());
  }
}

DensityMatrix DensityMatrix::from_operator(BipartiteOperator op, const Tolerances& tol) {
  validate_density(op.matrix, tol);
  return DensityMatrix(std::move(op));
}

DensityMatrix mix(std::span<const double> weights, std::span<const DensityMatrix> states,
                  const Tolerances& tol) {
  if (weights.size() != states.size() || states.empty())
    throw ValidationError("mix: need one weight per state and at least one state");
  const Dims dims = states.front().dims();
  Matrix sum = Matrix::Zero(dims.total(), dims.total());
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (weights[i] < 0.0) throw ValidationError("mix: negative weight");
    if (!(states[i].dims() == dims)) throw ValidationError("mix: dimension mismatch");
    sum += weights[i] * states[i].matrix();
    total += weights[i];
  }
  if (std::abs(total - 1.0) > tol.prob) throw ValidationError("mix: weights do not sum to 1");
  return DensityMatrix::from_matrix(dims, std::move(sum), tol);
}

}  // namespace qcorr
