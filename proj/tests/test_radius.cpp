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

#include "cuntzsys/radius.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cuntzsys/errors.hpp"
#include "test_support.hpp"

namespace cuntzsys {
namespace {

using testing::Rng;

ComplexMatrix nilpotent() {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 1) = 1.0;
  return t;
}

TEST(NumericalRadius, Identity) {
  const RadiusEstimate r = numerical_radius(ComplexMatrix::Identity(3, 3));
  EXPECT_NEAR(r.lower, 1.0, 1e-15);
  EXPECT_NEAR(r.upper, 1.0 + std::numbers::pi / 720, 1e-12);
}

TEST(NumericalRadius, HermitianIsSpectralRadius) {
  Rng rng(31);
  const HermitianMatrix h = testing::random_hermitian(5, rng);
  const Eigen::VectorXd ev = linalg::herm_eigenvalues(h);
  const double expected = std::max(std::abs(ev(0)), std::abs(ev(4)));
  EXPECT_NEAR(numerical_radius(h.matrix()).lower, expected, 1e-12);
}

TEST(NumericalRadius, Nilpotent) {
  const RadiusEstimate r = numerical_radius(nilpotent());
  EXPECT_NEAR(r.lower, 0.5, 1e-12);
  EXPECT_LE(r.lower, r.upper);
}

TEST(NumericalRadius, WithinDoubledGridBounds) {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix t = testing::random_matrix(4, 4, rng);
    const RadiusEstimate coarse = numerical_radius(t, 90);
    const RadiusEstimate fine = numerical_radius(t, 1440);
    EXPECT_LE(coarse.lower, fine.upper + 1e-12);
    EXPECT_LE(fine.lower, coarse.upper + 1e-12);
    EXPECT_NEAR(coarse.lower, fine.lower, 1e-8);
  }
}

TEST(JointRadius, ZeroTuple) {
  for (int d = 0; d <= 5; ++d) {
    EXPECT_EQ(joint_numerical_radius(MatrixTuple::zeros(2, 2), d).lower, 0.0);
  }
}

TEST(JointRadius, UnitScalarChainLaw) {
  Rng rng(33);
  for (int n = 1; n <= 3; ++n) {
    std::vector<Complex> c;
    for (int i = 0; i < n; ++i) {
      c.emplace_back(testing::uniform(-1, 1, rng), testing::uniform(-1, 1, rng));
    }
    const MatrixTuple t = testing::with_row_norm(MatrixTuple::scalars(c), 1.0);
    for (int d = 1; d <= 6; ++d) {
      const double expected = std::cos(std::numbers::pi / (d + 2));
      EXPECT_NEAR(joint_numerical_radius(t, d).lower, expected, 1e-12);
      if (TruncatedFock(n, d).dim() > 100) continue;
      EXPECT_NEAR(joint_numerical_radius(t, d, 720, RadiusMethod::kDenseGrid)
                      .lower,
                  expected, 1e-9);
    }
  }
}

TEST(JointRadius, StructuredMatchesDenseGrid) {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixTuple t =
        testing::random_tuple(testing::uniform_int(1, 3, rng),
                              testing::uniform_int(1, 2, rng), rng);
    const int d = testing::uniform_int(1, 3, rng);
    const RadiusEstimate s = joint_numerical_radius(t, d);
    const RadiusEstimate g =
        joint_numerical_radius(t, d, 720, RadiusMethod::kDenseGrid);
    EXPECT_NEAR(s.lower, g.lower, 1e-9 * std::max(1.0, s.lower));
  }
}

TEST(JointRadius, MonotoneAndHomogeneous) {
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixTuple t = testing::random_tuple(2, 2, rng);
    const Complex lambda(testing::uniform(-2, 2, rng), testing::uniform(-2, 2, rng));
    double previous = 0.0;
    for (int d = 0; d <= 6; ++d) {
      const double w = joint_numerical_radius(t, d).lower;
      EXPECT_GE(w, previous - 1e-12);
      previous = w;
      EXPECT_NEAR(joint_numerical_radius(t.scaled(lambda), d).lower,
                  std::abs(lambda) * w, 1e-9 * std::abs(lambda) * w + 1e-15);
    }
  }
}

TEST(JointRadius, NilpotentApproachesHalfFromBelow) {
  const MatrixTuple t({nilpotent()});
  double previous = 0.0;
  for (int d = 1; d <= 40; d += 3) {
    const double w = joint_numerical_radius(t, d).lower;
    EXPECT_LE(w, 0.5 + 1e-12);
    EXPECT_GE(w, previous - 1e-12);
    previous = w;
  }
  EXPECT_GT(previous, 0.49);
}

TEST(JointRadius, BoundaryEquivalence) {
  Rng rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixTuple base = testing::random_tuple(2, 1, rng);
    const int d = testing::uniform_int(1, 4, rng);
    const double w = joint_numerical_radius(base, d, 720,
                                            RadiusMethod::kDenseGrid).lower;
    for (double factor : {0.98, 1.02}) {
      const MatrixTuple t = base.scaled(factor * 0.5 / w);
      const double band = testing::dense_band_min(t, d);
      EXPECT_EQ(band >= 0.0, factor < 1.0);
    }
  }
}

TEST(RowContraction, Examples) {
  const ContractionVerdict zero = is_row_contraction(MatrixTuple::zeros(2, 2));
  EXPECT_EQ(zero.status, VerdictStatus::kCertifiedYes);
  EXPECT_EQ(zero.margin, 1.0);
  const ContractionVerdict edge = is_row_contraction(MatrixTuple::scalars({0.6, 0.8}));
  EXPECT_EQ(edge.status, VerdictStatus::kCertifiedYes);
  EXPECT_NEAR(edge.margin, 0.0, 1e-15);
  const ContractionVerdict over = is_row_contraction(MatrixTuple::scalars({1.0, 1.0}));
  EXPECT_EQ(over.status, VerdictStatus::kCertifiedNo);
  EXPECT_NEAR(over.margin, -1.0, 1e-15);
}

TEST(DualRowContraction, ZeroTuple) {
  const ContractionVerdict v = is_dual_row_contraction(MatrixTuple::zeros(2, 1));
  EXPECT_EQ(v.status, VerdictStatus::kCertifiedYes);
  EXPECT_EQ(v.margin, 1.0);
  ASSERT_TRUE(v.certificate.has_value());
}

TEST(DualRowContraction, ScalarOneIsRefuted) {
  const ContractionVerdict v = is_dual_row_contraction(MatrixTuple::scalars({1.0}));
  EXPECT_EQ(v.status, VerdictStatus::kCertifiedNo);
  // The first negative truncation is the 3 x 3 band [[1,1,0],[1,1,1],[0,1,1]].
  EXPECT_EQ(v.depth, 2);
  ASSERT_TRUE(v.witness_eigenvalue.has_value());
  EXPECT_NEAR(*v.witness_eigenvalue, 1.0 - std::sqrt(2.0), 1e-10);
}

TEST(DualRowContraction, BoundaryScalarsAreCertified) {
  const ContractionVerdict v = is_dual_row_contraction(MatrixTuple::scalars({0.3, 0.4}));
  EXPECT_EQ(v.status, VerdictStatus::kCertifiedYes);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_TRUE(v.certificate->valid(1e-8));
}

TEST(DualRowContraction, OverNormScalarsRefutedByDepthEight) {
  Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = testing::uniform_int(1, 3, rng);
    std::vector<Complex> c;
    for (int i = 0; i < n; ++i) {
      c.emplace_back(testing::uniform(-1, 1, rng), testing::uniform(-1, 1, rng));
    }
    const MatrixTuple t = testing::with_row_norm(
        MatrixTuple::scalars(c), testing::uniform(1.05, 2.0, rng));
    DualRowOptions o;
    o.max_depth = 8;
    const ContractionVerdict v = is_dual_row_contraction(t, o);
    EXPECT_EQ(v.status, VerdictStatus::kCertifiedNo);
    EXPECT_LE(v.depth, 8);
  }
}

TEST(DualImpliesRow, Examples) {
  for (const auto& t : {MatrixTuple::zeros(2, 1), MatrixTuple::scalars({0.3, 0.4})}) {
    const ImplicationReport r = dual_implies_row(t);
    EXPECT_EQ(r.row.status, VerdictStatus::kCertifiedYes);
    EXPECT_EQ(r.dual.status, VerdictStatus::kCertifiedYes);
    EXPECT_TRUE(r.implication_holds);
  }
  const ImplicationReport r = dual_implies_row(MatrixTuple::scalars({0.9, 0.1}));
  EXPECT_EQ(r.row.status, VerdictStatus::kCertifiedYes);
  EXPECT_NEAR(r.row.margin, 1.0 - 0.82, 1e-14);
  EXPECT_TRUE(r.implication_holds);
}

TEST(DualImpliesRow, RandomTuples) {
  Rng rng(38);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixTuple t = testing::with_row_norm(
        testing::random_tuple(testing::uniform_int(1, 3, rng), 2, rng),
        testing::uniform(0.3, 1.6, rng));
    EXPECT_TRUE(dual_implies_row(t).implication_holds);
  }
}

TEST(DepthSweep, ColumnsAreMonotone) {
  const std::vector<SweepRow> zero = depth_sweep(MatrixTuple::zeros(2, 1), 0, 5);
  for (const SweepRow& row : zero) {
    EXPECT_EQ(row.radius_lower, 0.0);
    EXPECT_EQ(row.band_min_eig, 1.0);
  }
  const std::vector<SweepRow> unit =
      depth_sweep(MatrixTuple::scalars({0.6, 0.8}), 1, 6);
  for (const SweepRow& row : unit) {
    EXPECT_NEAR(row.radius_lower, std::cos(std::numbers::pi / (row.depth + 2)),
                1e-12);
  }
  const std::vector<SweepRow> over =
      depth_sweep(MatrixTuple::scalars({0.8, 0.8}), 0, 6);
  EXPECT_GT(over.front().band_min_eig, 0.0);
  EXPECT_LT(over.back().band_min_eig, 0.0);
  EXPECT_THROW(depth_sweep(MatrixTuple::scalars({0.8, 0.8}), 0, 30), CapacityError);
}

}  // namespace
}  // namespace cuntzsys
