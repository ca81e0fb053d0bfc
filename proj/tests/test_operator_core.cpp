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

#include "qcorr/operator_core.hpp"
#include "support/random_states.hpp"

namespace qcorr {
namespace {

using testing::Rng;
using testing::random_ginibre;
using testing::random_hermitian;

Matrix kron_by_loops(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

TEST(Kron, MatchesElementwiseDefinition) {
  Rng rng(1);
  const Matrix a = random_ginibre(2, 3, rng);
  const Matrix b = random_ginibre(4, 2, rng);
  EXPECT_LE(max_abs_diff(kron(a, b), kron_by_loops(a, b)), 1e-15);
}

TEST(Kron, AssociativeAndMixedProduct) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_ginibre(2, 2, rng), b = random_ginibre(3, 3, rng);
    const Matrix c = random_ginibre(2, 2, rng), d = random_ginibre(3, 3, rng);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    EXPECT_LE(max_abs_diff(kron(a, b) * kron(c, d), kron(Matrix(a * c), Matrix(b * d))), 1e-12);
  }
}

TEST(Kron, RealTimesComplexPromotes) {
  const RealMatrix a = RealMatrix::Identity(2, 2);
  const Matrix b = Matrix::Constant(1, 1, Complex(0, 1));
  const Matrix out = kron(a, b);
  EXPECT_EQ(out(1, 1), Complex(0, 1));
}

TEST(Dims, FlatIndexIsHMajor) {
  const Dims dims{2, 3};
  EXPECT_EQ(dims.total(), 6);
  EXPECT_EQ(dims.flat(1, 2), 5);
  EXPECT_EQ(dims.flat(0, 2), 2);
  EXPECT_EQ(dims.of(Side::K), 3);
}

TEST(PartialTrace, ProductOperandsFactorize) {
  Rng rng(3);
  const Matrix a = random_ginibre(2, 2, rng), b = random_ginibre(3, 3, rng);
  const Dims dims{2, 3};
  EXPECT_LE(max_abs_diff(partial_trace(kron(a, b), dims, Side::K), b.trace() * a), 1e-12);
  EXPECT_LE(max_abs_diff(partial_trace(kron(a, b), dims, Side::H), a.trace() * b), 1e-12);
}

TEST(PartialTrace, PreservesTrace) {
  Rng rng(4);
  for (const Dims dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 2}, Dims{3, 4}}) {
    const Matrix x = random_ginibre(dims.total(), dims.total(), rng);
    EXPECT_NEAR(std::abs(partial_trace(x, dims, Side::K).trace() - x.trace()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(partial_trace(x, dims, Side::H).trace() - x.trace()), 0.0, 1e-12);
  }
}

TEST(PartialTranspose, InvolutionAndProductRule) {
  Rng rng(5);
  const Dims dims{2, 3};
  const Matrix a = random_ginibre(2, 2, rng), b = random_ginibre(3, 3, rng);
  EXPECT_LE(max_abs_diff(partial_transpose(kron(a, b), dims, Side::K), kron(a, Matrix(b.transpose()))), 1e-15);
  EXPECT_LE(max_abs_diff(partial_transpose(kron(a, b), dims, Side::H), kron(Matrix(a.transpose()), b)), 1e-15);
  const Matrix x = random_ginibre(6, 6, rng);
  EXPECT_LE(max_abs_diff(partial_transpose(partial_transpose(x, dims, Side::K), dims, Side::K), x), 0.0);
}

TEST(PartialTranspose, BothSidesIsFullTranspose) {
  Rng rng(6);
  const Dims dims{3, 2};
  const Matrix x = random_ginibre(6, 6, rng);
  const Matrix both = partial_transpose(partial_transpose(x, dims, Side::K), dims, Side::H);
  EXPECT_LE(max_abs_diff(both, x.transpose()), 0.0);
}

TEST(PartialTranspose, TraceOfOtherFactorTransposes) {
  Rng rng(7);
  for (const Dims dims : {Dims{2, 3}, Dims{3, 3}, Dims{4, 2}}) {
    const Matrix x = random_ginibre(dims.total(), dims.total(), rng);
    const Matrix lhs = partial_trace(partial_transpose(x, dims, Side::K), dims, Side::H);
    EXPECT_LE(max_abs_diff(lhs, partial_trace(x, dims, Side::H).transpose()), 1e-12);
  }
}

TEST(BipartiteOperator, RejectsMismatchedSize) {
  EXPECT_THROW(BipartiteOperator(Dims{2, 3}, Matrix::Zero(5, 5)), ValidationError);
  EXPECT_THROW(BipartiteOperator(Dims{0, 3}, Matrix::Zero(0, 0)), ValidationError);
}

TEST(HermitianEig, ReconstructionUpToSixteen) {
  Rng rng(8);
  for (Index n = 1; n <= 16; ++n) {
    const Matrix a = random_hermitian(n, rng);
    const auto eig = hermitian_eig(a);
    const Matrix back = eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    EXPECT_LE(max_abs_diff(back, a), 1e-10) << "n=" << n;
    EXPECT_LE(max_abs_diff(Matrix(eig.vectors.adjoint() * eig.vectors), Matrix::Identity(n, n)), 1e-10);
    for (Index i = 1; i < n; ++i) EXPECT_LE(eig.values(i - 1), eig.values(i));
  }
}

TEST(HermitianEig, RejectsNonHermitianNamingEntries) {
  Matrix a = Matrix::Identity(3, 3);
  a(0, 2) = 0.5;
  try {
    hermitian_eig(a);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("A(0,2)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(hermitian_eig(Matrix::Zero(2, 3)), ValidationError);
}

TEST(HermitianEig, AcceptsSubToleranceNoise) {
  Matrix a = Matrix::Identity(2, 2);
  a(0, 1) = 1e-12;
  EXPECT_NO_THROW(hermitian_eig(a));
}

TEST(IsPsd, ReportsMinimumEigenvalue) {
  RealMatrix diag = RealVector::LinSpaced(4, -0.5, 1.0).asDiagonal();
  const PsdResult r = is_psd(Matrix(diag.cast<Complex>()), 1e-10);
  EXPECT_FALSE(r.psd);
  EXPECT_NEAR(r.min_eigenvalue, -0.5, 1e-14);
  EXPECT_TRUE(is_psd(Matrix(Matrix::Identity(3, 3)), 1e-10).psd);
}

TEST(HermitianFunction, SquareRootSquares) {
  Rng rng(9);
  const Matrix g = random_ginibre(4, 4, rng);
  const Matrix a = g * g.adjoint();
  const Matrix s = hermitian_function(a, [](double x) { return std::sqrt(std::max(x, 0.0)); });
  EXPECT_LE(max_abs_diff(Matrix(s * s), a), 1e-10);
}

TEST(Embed, PlacesOperatorOnFactor) {
  Rng rng(10);
  const Matrix x = random_ginibre(2, 2, rng);
  const Dims dims{2, 3};
  EXPECT_LE(max_abs_diff(embed(x, dims, Side::H), kron(x, Matrix(Matrix::Identity(3, 3)))), 0.0);
  EXPECT_LE(max_abs_diff(embed(Matrix(Matrix::Identity(3, 3)), dims, Side::K), Matrix(Matrix::Identity(6, 6))), 0.0);
}

}  // namespace
}  // namespace qcorr
