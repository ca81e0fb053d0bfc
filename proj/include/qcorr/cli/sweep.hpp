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

#ifndef QCORR_CLI_SWEEP_HPP
#define QCORR_CLI_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/states.hpp"

namespace qcorr::cli {

/// One grid point of a family sweep.
struct SweepRecord {
  double param = 0.0;
  double s_theta = 0.0;
  double s_rho = 0.0;
  double s_sigma = 0.0;
  double mutual = 0.0;
  double d = 0.0;
  double ppt_margin = 0.0;
  SeparabilityLabel label = SeparabilityLabel::sep;
  std::optional<double> discord_sym;
  std::optional<int> restarts_used;
};

enum class Spacing { linear, log };

struct SweepOptions {
  Family family = Family::horodecki;
  Index d = 3;
  double param_min = 0.0;
  double param_max = 1.0;
  int steps = 2;
  Spacing spacing = Spacing::linear;
  bool discord = false;
  OptimizerConfig optimizer;
  unsigned threads = 0;  ///< grid points run in parallel; 0 = hardware concurrency
  Tolerances tol;
};

/// Grid endpoints are hit exactly; point k of a linear grid is
/// min + (max - min) * k / (steps - 1), of a log grid the same in log10.
std::vector<double> sweep_grid(double param_min, double param_max, int steps, Spacing spacing);

/// Rows in ascending grid order regardless of scheduling. Throws
/// ValidationError for a bad grid and DomainError for out-of-family params.
std::vector<SweepRecord> run_sweep(const SweepOptions& options);

/// Header param,S_theta,S_rho,S_sigma,I,D,ppt_margin,label and, with
/// discord, discord_sym,restarts_used.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records, bool with_discord);

}  // namespace qcorr::cli

#endif  // QCORR_CLI_SWEEP_HPP
