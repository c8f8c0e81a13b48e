// Copyright 2026 The cuntzsys Authors
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

#include "cuntzsys/fock.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "cuntzsys/errors.hpp"
#include "test_support.hpp"

namespace cuntzsys {
namespace {

using testing::Rng;

Eigen::MatrixXd dense(const SparseRealMatrix& m) { return Eigen::MatrixXd(m); }

TEST(TruncatedFock, Dimensions) {
  EXPECT_EQ(make_fock(2, 1).dim(), 3);
  EXPECT_EQ(make_fock(1, 5).dim(), 6);
  EXPECT_EQ(make_fock(3, 2).dim(), 13);
  EXPECT_EQ(make_fock(2, 0).dim(), 1);
  EXPECT_THROW(make_fock(3, 20), CapacityError);
  EXPECT_THROW(make_fock(0, 2), InputError);
}

TEST(TruncatedFock, LevelsAreContiguous) {
  const TruncatedFock f(3, 4);
  for (int l = 0; l <= 4; ++l) {
    for (Index k = f.level_begin(l); k < f.level_begin(l + 1); ++k) {
      EXPECT_EQ(f.level(k), l);
    }
  }
  EXPECT_EQ(f.child(0, 1), 1);
  EXPECT_EQ(f.child(2, 3), 9);
}

TEST(CuntzIsometries, SingleEntryAtDepthOne) {
  const CuntzIsometries iso(make_fock(2, 1));
  Eigen::MatrixXd s1 = Eigen::MatrixXd::Zero(3, 3);
  s1(1, 0) = 1.0;
  EXPECT_EQ(dense(iso.isometry(1)), s1);
}

TEST(CuntzIsometries, ExactRelations) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 5; ++d) {
      const TruncatedFock f(n, d);
      const CuntzIsometries iso(f);
      const Eigen::MatrixXd inner = dense(inner_projection(f));
      Eigen::MatrixXd range_sum = Eigen::MatrixXd::Zero(f.dim(), f.dim());
      for (int i = 1; i <= n; ++i) {
        const Eigen::MatrixXd si = dense(iso.isometry(i));
        range_sum += si * si.transpose();
        for (int j = 1; j <= n; ++j) {
          const Eigen::MatrixXd g = si.transpose() * dense(iso.isometry(j));
          if (i == j) {
            EXPECT_EQ(g, inner);
          } else {
            EXPECT_EQ(g, Eigen::MatrixXd::Zero(f.dim(), f.dim()));
          }
        }
      }
      Eigen::MatrixXd off_vacuum = Eigen::MatrixXd::Identity(f.dim(), f.dim());
      off_vacuum(0, 0) = 0.0;
      EXPECT_EQ(range_sum, off_vacuum);
    }
  }
}

TEST(BandOperator, ZeroTupleIsIdentity) {
  const TruncatedFock f(2, 3);
  const HermitianMatrix band =
      band_operator(CuntzIsometries(f), MatrixTuple::zeros(2, 2));
  EXPECT_EQ(band.matrix(), ComplexMatrix::Identity(f.dim() * 2, f.dim() * 2));
}

TEST(BandOperator, DepthOneScalarPattern) {
  const Complex alpha(0.3, 0.2);
  const Complex beta(-0.1, 0.5);
  const HermitianMatrix band = band_operator(
      CuntzIsometries(make_fock(2, 1)), MatrixTuple::scalars({alpha, beta}));
  ComplexMatrix expected(3, 3);
  expected << 1.0, alpha, beta, std::conj(alpha), 1.0, 0.0, std::conj(beta),
      0.0, 1.0;
  EXPECT_EQ(band.matrix(), expected);
}

TEST(BandOperator, MatchesKroneckerDefinition) {
  Rng rng(21);
  const MatrixTuple t = testing::random_tuple(2, 2, rng);
  const TruncatedFock f(2, 3);
  const CuntzIsometries iso(f);
  ComplexMatrix expected = ComplexMatrix::Identity(f.dim() * 2, f.dim() * 2);
  for (int j = 1; j <= 2; ++j) {
    const ComplexMatrix s = dense(iso.isometry(j)).cast<Complex>();
    expected += linalg::kron(s, t[j - 1].adjoint());
    expected += linalg::kron(s.adjoint(), t[j - 1]);
  }
  EXPECT_LE((band_operator(iso, t).matrix() - expected).norm(), 1e-15);
  EXPECT_EQ(ComplexMatrix(band_operator_sparse(f, t)),
            band_operator(iso, t).matrix());
}

TEST(Compress, Consistency) {
  Rng rng(22);
  const MatrixTuple t = testing::random_tuple(3, 2, rng);
  const TruncatedFock big(3, 4);
  const ComplexMatrix band = band_operator(CuntzIsometries(big), t);
  for (int d = 0; d < 4; ++d) {
    const TruncatedFock small(3, d);
    EXPECT_EQ(compress(band, big, 2, d),
              band_operator(CuntzIsometries(small), t).matrix());
  }
  EXPECT_EQ(compress(band, big, 2, 0), ComplexMatrix::Identity(2, 2));
  const ComplexMatrix id = ComplexMatrix::Identity(big.dim() * 2, big.dim() * 2);
  EXPECT_EQ(compress(id, big, 2, 2), ComplexMatrix::Identity(26, 26));
  EXPECT_THROW(compress(band, big, 2, 4), InputError);
  EXPECT_THROW(compress(band, big, 3, 1), InputError);
}

TEST(BandMinEigenvalue, BracketsDenseOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::uniform_int(1, 3, rng);
    const Index p = testing::uniform_int(1, 3, rng);
    const MatrixTuple t = testing::with_row_norm(
        testing::random_tuple(n, p, rng), testing::uniform(0.2, 1.5, rng));
    const int d = testing::uniform_int(0, 4, rng);
    const EigenBracket b = band_min_eigenvalue(t, d);
    const double oracle = testing::dense_band_min(t, d);
    EXPECT_LE(b.upper - b.lower, 1e-13);
    EXPECT_NEAR(b.mid(), oracle, 1e-10);
  }
}

TEST(BandMinEigenvalue, NonincreasingInDepth) {
  Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixTuple t = testing::with_row_norm(
        testing::random_tuple(2, 2, rng), testing::uniform(0.3, 1.2, rng));
    double previous = 1.0;
    for (int d = 0; d <= 6; ++d) {
      const double oracle = testing::dense_band_min(t, d);
      EXPECT_LE(oracle, previous + 1e-12);
      previous = oracle;
    }
  }
}

TEST(BandPivots, NegativeAtFirstFailingHeight) {
  const BandPivots p = band_pivots(MatrixTuple::scalars({1.0}), 2, 0.0);
  EXPECT_FALSE(p.positive_definite);
  const BandPivots q = band_pivots(MatrixTuple::scalars({0.4}), 50, 0.0);
  EXPECT_TRUE(q.positive_definite);
}

}  // namespace
}  // namespace cuntzsys
