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

#include "qcorr/discord.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qcorr/correlations.hpp"
#include "qcorr/nelder_mead.hpp"
#include "qcorr/operator_core.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(restart));
}

// Isometry v (x) 1 (or 1 (x) v): maps the unmeasured factor into H (x) K.
Matrix conditioning_isometry(const Vector& v, Dims dims, Side measured) {
  return measured == Side::H ? Matrix(kron(v, Matrix::Identity(dims.k, dims.k)))
                             : Matrix(kron(Matrix::Identity(dims.h, dims.h), v));
}

void require_matching(const DensityMatrix& theta, const MeasurementBasis& basis) {
  const Index d = theta.dims().of(basis.side());
  if (basis.dimension() != d) {
    std::ostringstream msg;
    msg << "measurement basis on " << to_string(basis.side()) << " has dimension " << basis.dimension()
        << " but the state's factor has dimension " << d;
    throw ValidationError(msg.str());
  }
}

// sum_k p_k S(sigma_k) where p_k sigma_k = W_k^dagger theta W_k.
double conditional_entropy_of_vectors(const Matrix& theta, Dims dims, Side measured, const Matrix& basis_columns,
                                      const Tolerances& tol) {
  double s = 0.0;
  for (Index k = 0; k < basis_columns.cols(); ++k) {
    const Matrix w = conditioning_isometry(basis_columns.col(k), dims, measured);
    const Matrix block = w.adjoint() * theta * w;
    const double p = block.trace().real();
    if (p <= tol.p_floor) continue;
    s += p * entropy_of_spectrum(eigenvalues_hermitian(Matrix(block / p), tol.herm), tol.psd);
  }
  return s;
}

}  // namespace

MeasurementBasis MeasurementBasis::from_unitary(Side side, const Matrix& u, const Tolerances&) {
  if (u.rows() != u.cols() || u.rows() < 1) throw ValidationError("measurement unitary must be square");
  const double dev = max_abs_diff(u.adjoint() * u, Matrix::Identity(u.rows(), u.cols()));
  if (dev > 1e-10) {
    std::ostringstream msg;
    msg << "measurement matrix is not unitary (deviation " << dev << ")";
    throw ValidationError(msg.str());
  }
  std::vector<Vector> vectors;
  for (Index k = 0; k < u.cols(); ++k) vectors.emplace_back(u.col(k));
  return MeasurementBasis(side, std::move(vectors));
}

MeasurementBasis MeasurementBasis::from_projectors(Side side, std::vector<Matrix> projectors, const Tolerances& tol) {
  if (projectors.empty()) throw ValidationError("measurement basis is empty");
  const Index d = projectors.front().rows();
  if (static_cast<Index>(projectors.size()) != d)
    throw ValidationError("a complete rank-1 measurement needs exactly d projectors");
  constexpr double kProjTol = 1e-10;
  Matrix sum = Matrix::Zero(d, d);
  std::vector<Vector> vectors;
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    const Matrix& p = projectors[k];
    if (p.rows() != d || p.cols() != d) throw ValidationError("projector has wrong shape");
    std::ostringstream where;
    where << "projector " << k;
    if (hermiticity_defect(p).deviation > kProjTol) throw ValidationError(where.str() + " is not Hermitian");
    if (max_abs_diff(p * p, p) > kProjTol) throw ValidationError(where.str() + " is not idempotent");
    if (std::abs(p.trace().real() - 1.0) > kProjTol) throw ValidationError(where.str() + " does not have rank 1");
    const auto eig = hermitian_eig(p, tol.herm);
    vectors.emplace_back(eig.vectors.col(d - 1));
    sum += p;
  }
  if (max_abs_diff(sum, Matrix::Identity(d, d)) > kProjTol) throw ValidationError("projectors do not sum to the identity");
  return MeasurementBasis(side, std::move(vectors));
}

MeasurementBasis MeasurementBasis::computational(Side side, Index d) {
  return from_unitary(side, Matrix::Identity(d, d));
}

std::vector<Matrix> MeasurementBasis::projectors() const {
  std::vector<Matrix> out;
  out.reserve(vectors_.size());
  for (const Vector& v : vectors_) out.emplace_back(v * v.adjoint());
  return out;
}

PostMeasurement post_measurement(const DensityMatrix& theta, const MeasurementBasis& basis, const Tolerances& tol) {
  require_matching(theta, basis);
  const Dims dims = theta.dims();
  PostMeasurement out;
  const std::vector<Matrix> projectors = basis.projectors();
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    const Matrix local = embed(projectors[k], dims, basis.side());
    const Matrix collapsed = local * theta.matrix() * local;
    const double p = collapsed.trace().real();
    if (p <= tol.p_floor) {
      out.discarded_mass += std::max(p, 0.0);
      continue;
    }
    out.outcomes.push_back({static_cast<Index>(k), p, DensityMatrix::from_matrix(dims, collapsed / p, tol)});
  }
  return out;
}

double conditional_entropy_given(const DensityMatrix& theta, const MeasurementBasis& basis, const Tolerances& tol) {
  require_matching(theta, basis);
  Matrix columns(basis.dimension(), basis.dimension());
  for (Index k = 0; k < basis.dimension(); ++k) columns.col(k) = basis.vectors()[static_cast<std::size_t>(k)];
  return conditional_entropy_of_vectors(theta.matrix(), theta.dims(), basis.side(), columns, tol);
}

double measured_mutual_information(const DensityMatrix& theta, const MeasurementBasis& basis, const Tolerances& tol) {
  return von_neumann_entropy(theta.marginal(other(basis.side())), tol) - conditional_entropy_given(theta, basis, tol);
}

Matrix unitary_from_parameters(const RealVector& params, Index d) {
  if (params.size() != d * d) throw ValidationError("unitary parameterization needs d^2 reals");
  Matrix g = Matrix::Zero(d, d);
  Index p = 0;
  for (Index j = 0; j < d; ++j) g(j, j) = params(p++);
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      g(j, k) = Complex(params(p), params(p + 1));
      g(k, j) = std::conj(g(j, k));
      p += 2;
    }
  const auto eig = hermitian_eig(g);
  Vector phases(d);
  for (Index j = 0; j < d; ++j) phases(j) = std::polar(1.0, eig.values(j));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ClassicalCorrelation classical_correlation(const DensityMatrix& theta, Side side, const OptimizerConfig& cfg,
                                           const Tolerances& tol) {
  if (cfg.restarts < 1) throw ValidationError("optimizer needs at least one restart");
  const Dims dims = theta.dims();
  const Index d = dims.of(side);
  const Matrix& rho = theta.matrix();
  const double s_unmeasured = von_neumann_entropy(theta.marginal(other(side)), tol);

  auto objective = [&](const RealVector& x) {
    return conditional_entropy_of_vectors(rho, dims, side, unitary_from_parameters(x, d), tol);
  };

  struct Local {
    double value = 0.0;
    RealVector x;
  };
  std::vector<Local> results(static_cast<std::size_t>(cfg.restarts));
  parallel_for(results.size(), cfg.threads, [&](std::size_t r) {
    std::mt19937_64 rng(restart_seed(cfg.seed, static_cast<int>(r)));
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    RealVector x(d * d);
    for (Index i = 0; i < x.size(); ++i) x(i) = angle(rng);

    NelderMeadOptions options;
    options.max_evaluations = cfg.max_iters;
    options.f_tol = cfg.step_tol * 1e-2;
    options.x_tol = cfg.step_tol;
    NelderMeadResult best = nelder_mead(objective, x, options);
    // Re-simplex around the incumbent at shrinking scales.
    for (double step : {0.1, 0.01, 1e-3}) {
      options.initial_step = step;
      NelderMeadResult next = nelder_mead(objective, best.x, options);
      if (next.value < best.value) best = std::move(next);
    }
    results[r] = {best.value, std::move(best.x)};
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (results[r].value < results[best].value) best = r;
  return {s_unmeasured - results[best].value,
          MeasurementBasis::from_unitary(side, unitary_from_parameters(results[best].x, d), tol),
          static_cast<int>(best)};
}

DiscordResult discord(const DensityMatrix& theta, Side side, const OptimizerConfig& cfg, const Tolerances& tol) {
  DiscordResult out;
  out.mutual = mutual_entropy(theta, tol);
  out.classical = classical_correlation(theta, side, cfg, tol).value;
  out.raw = out.mutual - out.classical;
  out.value = (out.raw < 0.0 && out.raw >= -kDiscordClampBand) ? 0.0 : out.raw;
  return out;
}

SymmetricDiscord symmetric_discord(const DensityMatrix& theta, const OptimizerConfig& cfg, const Tolerances& tol) {
  SymmetricDiscord out;
  out.h = discord(theta, Side::H, cfg, tol);
  out.k = discord(theta, Side::K, cfg, tol);
  out.value = 0.5 * (out.h.value + out.k.value);
  return out;
}

}  // namespace qcorr
