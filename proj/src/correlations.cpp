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

#include "qcorr/correlations.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qcorr/operator_core.hpp"

namespace qcorr {
namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double entropy_of_spectrum(const RealVector& spectrum, double psd_tol) {
  double s = 0.0;
  for (Index i = 0; i < spectrum.size(); ++i) {
    const double v = spectrum(i);
    if (v < -psd_tol) {
      std::ostringstream msg;
      msg << "spectrum has eigenvalue " << v << " below -" << psd_tol;
      throw ValidationError(msg.str());
    }
    s -= xlogx(v);
  }
  return s;
}

double von_neumann_entropy(const Matrix& rho, const Tolerances& tol) {
  return entropy_of_spectrum(eigenvalues_hermitian(rho, tol.herm), tol.psd);
}

double relative_entropy(const Matrix& theta, const Matrix& omega, const Tolerances& tol) {
  if (theta.rows() != omega.rows() || theta.cols() != omega.cols())
    throw ValidationError("relative_entropy: dimension mismatch");
  const auto t = hermitian_eig(theta, tol.herm);
  const auto w = hermitian_eig(omega, tol.herm);

  Eigen::Array<bool, Eigen::Dynamic, 1> in_support = w.values.array() > tol.supp;
  for (Index i = 0; i < t.values.size(); ++i) {
    if (t.values(i) <= tol.supp) continue;
    double outside = 0.0;
    for (Index j = 0; j < w.values.size(); ++j)
      if (!in_support(j)) outside += std::norm(w.vectors.col(j).dot(t.vectors.col(i)));
    if (outside > tol.supp) return std::numeric_limits<double>::infinity();
  }

  double cross = 0.0;
  for (Index j = 0; j < w.values.size(); ++j) {
    if (!in_support(j)) continue;
    const double weight = (w.vectors.col(j).adjoint() * theta * w.vectors.col(j)).value().real();
    cross += weight * std::log(w.values(j));
  }
  const double value = -entropy_of_spectrum(t.values, tol.psd) - cross;
  return std::max(value, 0.0);
}

double mutual_entropy(const DensityMatrix& theta, const Tolerances& tol) {
  return von_neumann_entropy(theta.marginal_h(), tol) + von_neumann_entropy(theta.marginal_k(), tol) -
         von_neumann_entropy(theta, tol);
}

double conditional_entropy(const DensityMatrix& theta, Side conditioned_on, const Tolerances& tol) {
  return von_neumann_entropy(theta, tol) - von_neumann_entropy(theta.marginal(conditioned_on), tol);
}

double d_correlation(const DensityMatrix& theta, const Tolerances& tol) {
  return 0.5 * (von_neumann_entropy(theta.marginal_h(), tol) + von_neumann_entropy(theta.marginal_k(), tol)) -
         von_neumann_entropy(theta, tol);
}

PptResult is_ppt(const DensityMatrix& theta, const Tolerances& tol) {
  const PsdResult r = is_psd(partial_transpose(theta.matrix(), theta.dims(), Side::K), tol.psd, tol.herm);
  return {r.psd, r.min_eigenvalue};
}

CorrelationReport correlation_report(const DensityMatrix& theta, const Tolerances& tol) {
  CorrelationReport r;
  r.s_theta = von_neumann_entropy(theta, tol);
  r.s_rho = von_neumann_entropy(theta.marginal_h(), tol);
  r.s_sigma = von_neumann_entropy(theta.marginal_k(), tol);
  r.mutual = r.s_rho + r.s_sigma - r.s_theta;
  r.s_k_given_h = r.s_theta - r.s_rho;
  r.s_h_given_k = r.s_theta - r.s_sigma;
  r.d = 0.5 * (r.s_rho + r.s_sigma) - r.s_theta;
  const PptResult ppt = is_ppt(theta, tol);
  r.ppt = ppt.ppt;
  r.ppt_margin = ppt.margin;
  return r;
}

double analytic_d(Family family, double param, Index d) {
  if (family == Family::bell_eps) {
    if (d != 3) throw DomainError("bell-eps family is defined for d = 3 only");
    if (!(param > 0.0) || !std::isfinite(param)) throw DomainError("bell-eps family: epsilon must be positive");
    const double eps = param;
    const double big_lambda = 1.0 + eps + 1.0 / eps;
    return (std::log(1.0 / big_lambda) + (1.0 / eps) * std::log(1.0 / (eps * big_lambda)) +
            eps * std::log(eps / big_lambda) + std::log(3.0)) /
           big_lambda;
  }
  const std::vector<double> lambda = horodecki_weights(d, param);  // domain check
  if (d == 3) {
    const double a = param;
    return std::log(3.0) + xlogx(2.0 / 7.0) + (a / 7.0) * (a > 0.0 ? std::log(a / 21.0) : 0.0) +
           ((5.0 - a) / 7.0) * (a < 5.0 ? std::log((5.0 - a) / 21.0) : 0.0);
  }
  // Spectrum: lambda_d once, lambda_i / d with multiplicity d, zeros.
  const double dd = static_cast<double>(d);
  double value = std::log(dd) + xlogx(lambda.back());
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i) value += dd * xlogx(lambda[i] / dd);
  return value;
}

std::string_view to_string(SeparabilityLabel label) {
  switch (label) {
    case SeparabilityLabel::sep: return "SEP";
    case SeparabilityLabel::ppt_ent: return "PPT_ENT";
    case SeparabilityLabel::npt: return "NPT";
  }
  return "?";
}

SeparabilityLabel classify_family(Family family, Index d, double param, double eq_tol) {
  if (family == Family::bell_eps) {
    if (d != 3) throw DomainError("bell-eps family is defined for d = 3 only");
    if (!(param > 0.0) || !std::isfinite(param)) throw DomainError("bell-eps family: epsilon must be positive");
    return std::abs(param - 1.0) <= eq_tol ? SeparabilityLabel::sep : SeparabilityLabel::ppt_ent;
  }
  horodecki_weights(d, param);  // domain check
  const double dm1 = static_cast<double>(d - 1);
  const double sep_lo = dm1;
  const double sep_hi = dm1 * (dm1 - 1.0) + 1.0;
  const double ppt_hi = dm1 * dm1;
  if (param < 1.0 || param > ppt_hi) return SeparabilityLabel::npt;
  if (param >= sep_lo && param <= sep_hi) return SeparabilityLabel::sep;
  return SeparabilityLabel::ppt_ent;
}

std::string_view to_string(DOrdering ordering) {
  switch (ordering) {
    case DOrdering::a_stronger: return "A stronger";
    case DOrdering::b_stronger: return "B stronger";
    case DOrdering::equal: return "equal";
  }
  return "?";
}

DComparison compare_d(const DensityMatrix& a, const DensityMatrix& b, const Tolerances& tol) {
  if (!(a.dims() == b.dims())) throw ValidationError("compare_d: states have different dimensions");
  const double dev = std::max(max_abs_diff(a.marginal_h(), b.marginal_h()), max_abs_diff(a.marginal_k(), b.marginal_k()));
  if (dev > tol.marg) {
    std::ostringstream msg;
    msg << "compare_d: marginals differ (max deviation " << dev << " exceeds " << tol.marg << ")";
    throw ValidationError(msg.str());
  }
  DComparison c;
  c.d_a = d_correlation(a, tol);
  c.d_b = d_correlation(b, tol);
  if (std::abs(c.d_a - c.d_b) <= tol.eq_band)
    c.ordering = DOrdering::equal;
  else
    c.ordering = c.d_a > c.d_b ? DOrdering::a_stronger : DOrdering::b_stronger;
  return c;
}

}  // namespace qcorr
