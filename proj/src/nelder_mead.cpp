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

#include "qcorr/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qcorr {

NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& f, const RealVector& x0,
                             const NelderMeadOptions& options) {
  const Index n = x0.size();
  std::vector<RealVector> simplex(static_cast<std::size_t>(n + 1), x0);
  std::vector<double> values(static_cast<std::size_t>(n + 1));
  int evals = 0;
  auto eval = [&](const RealVector& x) {
    ++evals;
    return f(x);
  };
  for (Index i = 0; i < n; ++i) simplex[static_cast<std::size_t>(i + 1)](i) += options.initial_step;
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double diameter = 0.0;
    for (const RealVector& v : simplex) diameter = std::max(diameter, (v - simplex[best]).cwiseAbs().maxCoeff());
    if (values[worst] - values[best] <= options.f_tol && diameter <= options.x_tol) break;

    RealVector centroid = RealVector::Zero(n);
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != worst) centroid += simplex[i];
    centroid /= static_cast<double>(n);

    const RealVector reflected = centroid + (centroid - simplex[worst]);
    const double f_reflected = eval(reflected);
    if (f_reflected < values[best]) {
      const RealVector expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const RealVector contracted = outside ? RealVector(centroid + 0.5 * (reflected - centroid))
                                          : RealVector(centroid + 0.5 * (simplex[worst] - centroid));
    const double f_contracted = eval(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      values[i] = eval(simplex[i]);
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(it - values.begin());
  return {simplex[idx], *it, evals};
}

}  // namespace qcorr
