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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcorr/correlations.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/states.hpp"
#include "support/random_states.hpp"

namespace qcorr {
namespace {

using testing::Rng;

OptimizerConfig config(int restarts, std::uint64_t seed = 42, unsigned threads = 1) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

/// Qubit-side classical correlation by exhaustive search over the Bloch
/// sphere: a 1 degree grid followed by a 0.01 degree grid around the best cell.
double qubit_grid_classical(const DensityMatrix& theta) {
  const double deg = std::numbers::pi / 180.0;
  const double s_k = von_neumann_entropy(theta.marginal_k());
  auto cond = [&](double polar, double azimuth) {
    Matrix u(2, 2);
    const Complex phase = std::polar(1.0, azimuth);
    u << std::cos(polar / 2), -std::conj(phase) * std::sin(polar / 2), phase * std::sin(polar / 2), std::cos(polar / 2);
    return conditional_entropy_given(theta, MeasurementBasis::from_unitary(Side::H, u));
  };
  double best = std::numeric_limits<double>::infinity(), bp = 0.0, ba = 0.0;
  for (int i = 0; i <= 180; ++i)
    for (int j = 0; j < 360; ++j) {
      const double v = cond(i * deg, j * deg);
      if (v < best) best = v, bp = i * deg, ba = j * deg;
    }
  const double cp = bp, ca = ba;
  for (int i = -100; i <= 100; ++i)
    for (int j = -100; j <= 100; ++j) {
      const double v = cond(cp + 0.01 * i * deg, ca + 0.01 * j * deg);
      if (v < best) best = v;
    }
  return s_k - best;
}

TEST(MeasurementBasis, ConstructionAndValidation) {
  const MeasurementBasis comp = MeasurementBasis::computational(Side::K, 3);
  EXPECT_EQ(comp.dimension(), 3);
  EXPECT_EQ(comp.side(), Side::K);
  std::vector<Matrix> projectors = comp.projectors();
  EXPECT_NO_THROW(MeasurementBasis::from_projectors(Side::K, projectors));
  projectors[2] = projectors[1];
  EXPECT_THROW(MeasurementBasis::from_projectors(Side::K, projectors), ValidationError);
  projectors[2] = 2.0 * matrix_unit(3, 2, 2);
  EXPECT_THROW(MeasurementBasis::from_projectors(Side::K, projectors), ValidationError);
  projectors.pop_back();
  EXPECT_THROW(MeasurementBasis::from_projectors(Side::K, projectors), ValidationError);
  EXPECT_THROW(MeasurementBasis::from_unitary(Side::H, Matrix::Constant(2, 2, 1.0)), ValidationError);
}

TEST(PostMeasurement, BellStateCollapses) {
  const DensityMatrix psi = max_entangled(2);
  const PostMeasurement pm = post_measurement(psi, MeasurementBasis::computational(Side::H, 2));
  ASSERT_EQ(pm.outcomes.size(), 2u);
  for (const MeasurementOutcome& o : pm.outcomes) {
    EXPECT_NEAR(o.probability, 0.5, 1e-15);
    const Index flat = o.index * 3;
    EXPECT_NEAR(o.state.matrix()(flat, flat).real(), 1.0, 1e-15);
  }
  EXPECT_EQ(pm.discarded_mass, 0.0);
}

TEST(PostMeasurement, DropsNullOutcomes) {
  const Matrix rho = matrix_unit(2, 0, 0);
  const DensityMatrix theta = product_state(rho, Matrix(Matrix::Identity(3, 3) / 3.0));
  const PostMeasurement pm = post_measurement(theta, MeasurementBasis::computational(Side::H, 2));
  ASSERT_EQ(pm.outcomes.size(), 1u);
  EXPECT_EQ(pm.outcomes[0].index, 0);
  EXPECT_EQ(pm.discarded_mass, 0.0);
  EXPECT_THROW(post_measurement(theta, MeasurementBasis::computational(Side::H, 3)), ValidationError);
}

TEST(PostMeasurement, ConditionalEntropyMatchesOutcomes) {
  Rng rng(51);
  const DensityMatrix theta = testing::random_bipartite(Dims{3, 2}, rng);
  const MeasurementBasis basis = MeasurementBasis::from_unitary(Side::H, testing::random_unitary(3, rng));
  double expected = 0.0;
  for (const MeasurementOutcome& o : post_measurement(theta, basis).outcomes)
    expected += o.probability * von_neumann_entropy(o.state.marginal_k());
  EXPECT_NEAR(conditional_entropy_given(theta, basis), expected, 1e-12);
}

TEST(MeasuredMutual, NeverExceedsMutual) {
  Rng rng(52);
  for (int t = 0; t < 50; ++t) {
    const Dims dims{2 + t % 2, 2 + (t / 2) % 2};
    const DensityMatrix theta = testing::random_bipartite(dims, rng, 1 + t % 4);
    const double mutual = mutual_entropy(theta);
    for (Side side : {Side::H, Side::K}) {
      const MeasurementBasis basis = MeasurementBasis::from_unitary(side, testing::random_unitary(dims.of(side), rng));
      EXPECT_LE(measured_mutual_information(theta, basis), mutual + 1e-9);
    }
  }
}

TEST(UnitaryParameters, AlwaysUnitary) {
  Rng rng(53);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (Index d : {2, 3, 4}) {
    RealVector x(d * d);
    for (Index i = 0; i < x.size(); ++i) x(i) = u(rng);
    const Matrix m = unitary_from_parameters(x, d);
    EXPECT_LE(max_abs_diff(Matrix(m.adjoint() * m), Matrix(Matrix::Identity(d, d))), 1e-12);
  }
  EXPECT_LE(max_abs_diff(unitary_from_parameters(RealVector::Zero(4), 2), Matrix(Matrix::Identity(2, 2))), 1e-15);
  EXPECT_THROW(unitary_from_parameters(RealVector::Zero(3), 2), ValidationError);
}

TEST(Discord, QubitSideMatchesSphereGrid) {
  Rng rng(54);
  for (int t = 0; t < 3; ++t) {
    const DensityMatrix theta = testing::random_bipartite(Dims{2, 2 + t % 2}, rng, 2);
    const double oracle = qubit_grid_classical(theta);
    const double optimized = classical_correlation(theta, Side::H, config(8)).value;
    EXPECT_NEAR(optimized, oracle, 1e-4);
    EXPECT_GE(optimized, oracle - 1e-9);
  }
}

TEST(Discord, BellStateHasUnitDiscord) {
  const DiscordResult r = discord(max_entangled(2), Side::H, config(4));
  EXPECT_NEAR(r.value, std::log(2.0), 1e-8);
  EXPECT_NEAR(r.mutual, 2.0 * std::log(2.0), 1e-12);
}

TEST(Discord, DeterministicAcrossRunsAndThreads) {
  Rng rng(55);
  const DensityMatrix theta = testing::random_bipartite(Dims{3, 3}, rng);
  const ClassicalCorrelation a = classical_correlation(theta, Side::H, config(6, 7, 1));
  const ClassicalCorrelation b = classical_correlation(theta, Side::H, config(6, 7, 1));
  const ClassicalCorrelation c = classical_correlation(theta, Side::H, config(6, 7, 3));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, c.value);
  EXPECT_EQ(a.best_restart, c.best_restart);
}

TEST(Discord, RestartMonotonicity) {
  Rng rng(56);
  const DensityMatrix theta = testing::random_bipartite(Dims{3, 2}, rng);
  double previous = -std::numeric_limits<double>::infinity();
  for (int restarts : {1, 2, 4, 8}) {
    const double c = classical_correlation(theta, Side::H, config(restarts, 99)).value;
    EXPECT_GE(c, previous);
    previous = c;
  }
}

TEST(Discord, LocalUnitaryInvariance) {
  Rng rng(57);
  for (int t = 0; t < 3; ++t) {
    const DensityMatrix theta = testing::random_bipartite(Dims{3, 2}, rng, 2);
    const DensityMatrix rotated =
        testing::local_rotate(theta, testing::random_unitary(3, rng), testing::random_unitary(2, rng));
    for (Side side : {Side::H, Side::K}) {
      const double a = classical_correlation(theta, side, config(16)).value;
      const double b = classical_correlation(rotated, side, config(16)).value;
      EXPECT_NEAR(a, b, 1e-6);
    }
  }
}

TEST(Discord, ClassicalQuantumStatesHaveZeroDiscord) {
  Rng rng(58);
  for (int t = 0; t < 4; ++t) {
    const DensityMatrix theta = testing::random_classical_quantum(Dims{2 + t % 2, 3}, rng);
    const DiscordResult r = discord(theta, Side::H, config(32, 42, 0));
    EXPECT_LE(std::abs(r.value), 1e-6);
    EXPECT_GE(r.raw, -1e-9);
  }
}

TEST(Discord, PureStatesEqualEntanglementEntropy) {
  Rng rng(59);
  for (int t = 0; t < 3; ++t) {
    const DensityMatrix theta = testing::random_pure(Dims{3, 3}, rng);
    const double s = von_neumann_entropy(theta.marginal_h());
    EXPECT_NEAR(discord(theta, Side::H, config(8)).value, s, 1e-4);
    EXPECT_NEAR(discord(theta, Side::K, config(8)).value, s, 1e-4);
  }
}

TEST(Discord, ClampKeepsRawValue) {
  Rng rng(60);
  const DiscordResult r = discord(testing::random_classical_quantum(Dims{2, 2}, rng), Side::H, config(4));
  EXPECT_GE(r.value, 0.0);
  EXPECT_NEAR(r.raw, r.mutual - r.classical, 0.0);
  if (r.raw >= 0.0) EXPECT_EQ(r.value, r.raw);
}

TEST(Discord, SymmetricIsAverage) {
  const SymmetricDiscord s = symmetric_discord(bell_family_eps(1.0), config(4));
  EXPECT_NEAR(s.value, 0.5 * (s.h.value + s.k.value), 1e-15);
  EXPECT_GE(s.value, 0.0);
}

// Reference values from tests/oracles/discord_oracle.py (grid search plus
// Powell polishing in an independent basis parameterization).
TEST(Discord, QutritValuesMatchFrozenOracle) {
  Vector v = Vector::Zero(9);
  v << 0.4, 1.0, 0.0, 0.0, 0.0, Complex(0.0, 0.5), 0.3, 0.0, 0.0;
  v /= v.norm();
  RealVector weights(3);
  weights << 0.5, 0.3, 0.2;
  const Matrix mixed = kron(Matrix(weights.cast<Complex>().asDiagonal()), Matrix(Matrix::Identity(3, 3) / 3.0));
  const DensityMatrix generic = DensityMatrix::from_matrix(Dims{3, 3}, 0.5 * v * v.adjoint() + 0.5 * mixed);

  struct Case {
    DensityMatrix theta;
    double d_h, d_k;
  };
  const std::vector<Case> cases = {{bell_family_eps(1.0), 0.262618797734, 0.262618797734},
                                   {horodecki_general(3, 3.1), 0.263371168587, 0.263371168587},
                                   {generic, 0.192753963519, 0.192502031901}};
  for (const Case& c : cases) {
    const SymmetricDiscord s = symmetric_discord(c.theta, config(32, 42, 0));
    EXPECT_NEAR(s.h.value, c.d_h, 1e-6);
    EXPECT_NEAR(s.k.value, c.d_k, 1e-6);
  }
}

TEST(Discord, RejectsEmptyRestarts) {
  EXPECT_THROW(classical_correlation(max_entangled(2), Side::H, config(0)), ValidationError);
}

}  // namespace
}  // namespace qcorr
