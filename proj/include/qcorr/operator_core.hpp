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

// Dense operator primitives on H (x) K.
//
// Basis convention used everywhere in qcorr: the product vector e_i (x) f_a
// sits at flat index i * d_K + a (the H index varies slowest). Nothing
// outside this header computes bipartite flat indices by hand.

#ifndef QCORR_OPERATOR_CORE_HPP
#define QCORR_OPERATOR_CORE_HPP

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

#include <Eigen/Dense>

#include "qcorr/types.hpp"

namespace qcorr {

template <typename Derived>
using PlainMatrixOf = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

/// Local dimensions of a bipartite space.
struct Dims {
  Index h = 0;
  Index k = 0;

  constexpr Index total() const { return h * k; }
  constexpr Index of(Side s) const { return s == Side::H ? h : k; }
  constexpr Index flat(Index i, Index a) const { return i * k + a; }
  friend constexpr bool operator==(const Dims&, const Dims&) = default;
};

/// An operator on H (x) K together with its factor dimensions.
struct BipartiteOperator {
  BipartiteOperator() = default;
  BipartiteOperator(Dims d, Matrix m) : dims(d), matrix(std::move(m)) {
    if (dims.h < 1 || dims.k < 1 || matrix.rows() != dims.total() || matrix.cols() != dims.total()) {
      std::ostringstream msg;
      msg << "bipartite operator of size " << matrix.rows() << "x" << matrix.cols()
          << " does not match dims (" << dims.h << ", " << dims.k << ")";
      throw ValidationError(msg.str());
    }
  }

  Dims dims;
  Matrix matrix;
};

/// Kronecker product: (A (x) B)(i*rB + k, j*cB + l) = A(i,j) B(k,l).
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Partial trace over `traced`. Tracing K leaves a d_H x d_H matrix with
/// M(i,j) = sum_a X((i,a),(j,a)).
template <typename Derived>
PlainMatrixOf<Derived> partial_trace(const Eigen::MatrixBase<Derived>& x, Dims dims, Side traced) {
  eigen_assert(x.rows() == dims.total() && x.cols() == dims.total());
  if (traced == Side::K) {
    PlainMatrixOf<Derived> out = PlainMatrixOf<Derived>::Zero(dims.h, dims.h);
    for (Index i = 0; i < dims.h; ++i)
      for (Index j = 0; j < dims.h; ++j)
        for (Index a = 0; a < dims.k; ++a) out(i, j) += x(dims.flat(i, a), dims.flat(j, a));
    return out;
  }
  PlainMatrixOf<Derived> out = PlainMatrixOf<Derived>::Zero(dims.k, dims.k);
  for (Index a = 0; a < dims.k; ++a)
    for (Index b = 0; b < dims.k; ++b)
      for (Index i = 0; i < dims.h; ++i) out(a, b) += x(dims.flat(i, a), dims.flat(i, b));
  return out;
}

inline Matrix partial_trace(const BipartiteOperator& x, Side traced) {
  return partial_trace(x.matrix, x.dims, traced);
}

/// Transpose on one factor. For side K: out((i,a),(j,b)) = X((i,b),(j,a)).
template <typename Derived>
PlainMatrixOf<Derived> partial_transpose(const Eigen::MatrixBase<Derived>& x, Dims dims, Side side) {
  eigen_assert(x.rows() == dims.total() && x.cols() == dims.total());
  PlainMatrixOf<Derived> out(x.rows(), x.cols());
  for (Index i = 0; i < dims.h; ++i)
    for (Index j = 0; j < dims.h; ++j)
      for (Index a = 0; a < dims.k; ++a)
        for (Index b = 0; b < dims.k; ++b) {
          const Index r = dims.flat(i, a);
          const Index c = dims.flat(j, b);
          out(r, c) = side == Side::K ? x(dims.flat(i, b), dims.flat(j, a))
                                      : x(dims.flat(j, a), dims.flat(i, b));
        }
  return out;
}

inline BipartiteOperator partial_transpose(const BipartiteOperator& x, Side side) {
  return {x.dims, partial_transpose(x.matrix, x.dims, side)};
}

/// Location and size of the worst Hermiticity violation.
struct HermiticityDefect {
  Index row = 0;
  Index col = 0;
  double deviation = 0.0;
};

template <typename Derived>
HermiticityDefect hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  HermiticityDefect worst;
  if (a.rows() != a.cols()) {
    worst.deviation = std::numeric_limits<double>::infinity();
    return worst;
  }
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = i; j < a.cols(); ++j) {
      const double dev = static_cast<double>(std::abs(a(i, j) - Eigen::numext::conj(a(j, i))));
      if (dev > worst.deviation) worst = {i, j, dev};
    }
  return worst;
}

/// Throws ValidationError naming the violating entry pair.
template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& a, double herm_tol) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << "matrix is not square (" << a.rows() << "x" << a.cols() << ")";
    throw ValidationError(msg.str());
  }
  const HermiticityDefect d = hermiticity_defect(a);
  if (d.deviation > herm_tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: |A(" << d.row << "," << d.col << ") - conj(A(" << d.col << ","
        << d.row << "))| = " << d.deviation << " exceeds " << herm_tol;
    throw ValidationError(msg.str());
  }
}

/// Eigenvalues in ascending order; eigenvectors are the matching columns.
template <typename Scalar>
struct HermitianEigen {
  Eigen::Matrix<typename Eigen::NumTraits<Scalar>::Real, Eigen::Dynamic, 1> values;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
};

template <typename Derived>
HermitianEigen<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& a,
                                                       double herm_tol = Tolerances{}.herm) {
  require_hermitian(a, herm_tol);
  // Only the lower triangle is read; symmetrize so that sub-tolerance noise
  // in the upper triangle is not silently dropped.
  const PlainMatrixOf<Derived> sym = (a + a.adjoint()) / RealOf<Derived>(2);
  Eigen::SelfAdjointEigenSolver<PlainMatrixOf<Derived>> solver(sym);
  if (solver.info() != Eigen::Success) throw ValidationError("Hermitian eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <typename Derived>
auto eigenvalues_hermitian(const Eigen::MatrixBase<Derived>& a, double herm_tol = Tolerances{}.herm) {
  require_hermitian(a, herm_tol);
  const PlainMatrixOf<Derived> sym = (a + a.adjoint()) / RealOf<Derived>(2);
  Eigen::SelfAdjointEigenSolver<PlainMatrixOf<Derived>> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ValidationError("Hermitian eigensolver did not converge");
  return Eigen::Matrix<RealOf<Derived>, Eigen::Dynamic, 1>(solver.eigenvalues());
}

struct PsdResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

template <typename Derived>
PsdResult is_psd(const Eigen::MatrixBase<Derived>& a, double tol, double herm_tol = Tolerances{}.herm) {
  const auto values = eigenvalues_hermitian(a, herm_tol);
  const double lo = static_cast<double>(values.minCoeff());
  return {lo >= -tol, lo};
}

/// f(A) = V f(Lambda) V^dagger for Hermitian A.
template <typename Derived, typename F>
PlainMatrixOf<Derived> hermitian_function(const Eigen::MatrixBase<Derived>& a, F&& f,
                                          double herm_tol = Tolerances{}.herm) {
  const auto eig = hermitian_eig(a, herm_tol);
  const auto mapped = eig.values.unaryExpr(std::forward<F>(f)).template cast<typename Derived::Scalar>();
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

/// Operator embedded on one factor: X (x) 1_K or 1_H (x) X.
template <typename Derived>
PlainMatrixOf<Derived> embed(const Eigen::MatrixBase<Derived>& x, Dims dims, Side side) {
  using Plain = PlainMatrixOf<Derived>;
  return side == Side::H ? kron(x, Plain::Identity(dims.k, dims.k)) : kron(Plain::Identity(dims.h, dims.h), x);
}

/// Matrix unit e_ij of size n.
inline Matrix matrix_unit(Index n, Index i, Index j) {
  Matrix e = Matrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

/// Largest absolute entry of A - B.
template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return static_cast<double>((a - b).cwiseAbs().maxCoeff());
}

}  // namespace qcorr

#endif  // QCORR_OPERATOR_CORE_HPP
