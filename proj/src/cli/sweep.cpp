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

#include "qcorr/cli/sweep.hpp"

#include <cmath>
#include <ostream>

#include "qcorr/cli/state_io.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr::cli {

std::vector<double> sweep_grid(double param_min, double param_max, int steps, Spacing spacing) {
  if (steps < 2) throw ValidationError("sweep needs at least 2 steps");
  if (!(param_min <= param_max)) throw ValidationError("sweep range must satisfy min <= max");
  if (spacing == Spacing::log && !(param_min > 0.0)) throw DomainError("log-spaced sweep needs a positive range");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double last = static_cast<double>(steps - 1);
  if (spacing == Spacing::linear) {
    for (int k = 0; k < steps; ++k) grid[static_cast<std::size_t>(k)] = param_min + (param_max - param_min) * k / last;
  } else {
    const double lo = std::log10(param_min);
    const double hi = std::log10(param_max);
    for (int k = 0; k < steps; ++k) grid[static_cast<std::size_t>(k)] = std::pow(10.0, lo + (hi - lo) * k / last);
  }
  grid.front() = param_min;
  grid.back() = param_max;
  return grid;
}

std::vector<SweepRecord> run_sweep(const SweepOptions& options) {
  const std::vector<double> grid = sweep_grid(options.param_min, options.param_max, options.steps, options.spacing);
  // Fail on the range before spending time on the grid.
  classify_family(options.family, options.d, grid.front(), options.tol.eq_band);
  classify_family(options.family, options.d, grid.back(), options.tol.eq_band);

  OptimizerConfig optimizer = options.optimizer;
  optimizer.threads = 1;

  std::vector<SweepRecord> records(grid.size());
  parallel_for(grid.size(), options.threads, [&](std::size_t i) {
    const double param = grid[i];
    const DensityMatrix theta = family_state(options.family, options.d, param);
    const CorrelationReport report = correlation_report(theta, options.tol);
    SweepRecord& rec = records[i];
    rec.param = param;
    rec.s_theta = report.s_theta;
    rec.s_rho = report.s_rho;
    rec.s_sigma = report.s_sigma;
    rec.mutual = report.mutual;
    rec.d = report.d;
    rec.ppt_margin = report.ppt_margin;
    rec.label = classify_family(options.family, options.d, param, options.tol.eq_band);
    if (options.discord) {
      rec.discord_sym = symmetric_discord(theta, optimizer, options.tol).value;
      rec.restarts_used = optimizer.restarts;
    }
  });
  return records;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records, bool with_discord) {
  out << "param,S_theta,S_rho,S_sigma,I,D,ppt_margin,label";
  if (with_discord) out << ",discord_sym,restarts_used";
  out << '\n';
  for (const SweepRecord& r : records) {
    out << format_real(r.param) << ',' << format_real(r.s_theta) << ',' << format_real(r.s_rho) << ','
        << format_real(r.s_sigma) << ',' << format_real(r.mutual) << ',' << format_real(r.d) << ','
        << format_real(r.ppt_margin) << ',' << to_string(r.label);
    if (with_discord) {
      out << ',' << (r.discord_sym ? format_real(*r.discord_sym) : std::string()) << ','
          << (r.restarts_used ? std::to_string(*r.restarts_used) : std::string());
    }
    out << '\n';
  }
}

}  // namespace qcorr::cli
