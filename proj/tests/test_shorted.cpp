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

#include "cuntzsys/shorted.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "cuntzsys/errors.hpp"
#include "test_support.hpp"

namespace cuntzsys {
namespace {

using testing::Rng;

HermitianMatrix real2(double a, double b, double d) {
  ComplexMatrix m(2, 2);
  m << a, b, b, d;
  return HermitianMatrix(m);
}

// a - b as a psd margin: smallest eigenvalue of a - b.
double loewner_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  return linalg::herm_eigenvalues(HermitianMatrix(a - b))(0);
}

TEST(ShortOperator, Examples) {
  const ShortResult id = short_operator(BlockSplit(HermitianMatrix::identity(5), 2));
  EXPECT_EQ(id.shorted.matrix(), ComplexMatrix::Identity(2, 2));
  const ShortResult s = short_operator(BlockSplit(real2(2, 1, 1), 1));
  EXPECT_NEAR(s.shorted.matrix()(0, 0).real(), 1.0, 1e-15);
  EXPECT_FALSE(s.used_pinv);
  const ShortResult flat = short_operator(BlockSplit(real2(1, 1, 1), 1));
  EXPECT_NEAR(flat.shorted.matrix()(0, 0).real(), 0.0, 1e-15);
}

TEST(ShortOperator, SingularTailUsesPseudoInverse) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 2.0;
  m(0, 1) = m(1, 0) = 1.0;
  m(1, 1) = 1.0;
  const ShortResult s = short_operator(BlockSplit(HermitianMatrix(m), 1));
  EXPECT_TRUE(s.used_pinv);
  EXPECT_NEAR(s.shorted.matrix()(0, 0).real(), 1.0, 1e-12);
}

TEST(ShortOperator, RejectsIndefinite) {
  EXPECT_THROW(short_operator(BlockSplit(real2(1, 2, 1), 1)), DomainError);
  EXPECT_THROW(BlockSplit(HermitianMatrix::identity(2), 2), InputError);
}

TEST(ShortOperator, DominatedByLeadingBlockAndMonotone) {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Index dim = testing::uniform_int(2, 8, rng);
    const Index cut = testing::uniform_int(1, static_cast<int>(dim) - 1, rng);
    const HermitianMatrix a(testing::random_psd(dim, dim, rng));
    const HermitianMatrix bigger(a.matrix() + testing::random_psd(dim, 2, rng));
    const ComplexMatrix sa = short_operator(BlockSplit(a, cut)).shorted;
    const ComplexMatrix sb = short_operator(BlockSplit(bigger, cut)).shorted;
    const double scale = std::max(1.0, bigger.matrix().norm());
    EXPECT_GE(loewner_gap(a.matrix().topLeftCorner(cut, cut), sa), -1e-9 * scale);
    EXPECT_GE(loewner_gap(sb, sa), -1e-9 * scale);
    EXPECT_GE(linalg::herm_eigenvalues(HermitianMatrix(sa))(0), -1e-9 * scale);
  }
}

TEST(ShortOperator, Maximality) {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Index dim = 6;
    const Index cut = 3;
    const HermitianMatrix a(testing::random_psd(dim, dim, rng));
    const ComplexMatrix s = short_operator(BlockSplit(a, cut)).shorted;
    // T = s^{1/2} U s^{1/2} scaled below 1 is supported on the block and
    // T <= A; a random contraction keeps it below s.
    const ComplexMatrix root = linalg::psd_sqrt(HermitianMatrix(s));
    const ComplexMatrix g = testing::random_matrix(cut, cut, rng);
    const ComplexMatrix c = g / linalg::op_norm(g);
    ComplexMatrix t = ComplexMatrix::Zero(dim, dim);
    t.topLeftCorner(cut, cut) = root * c * c.adjoint() * root;
    ASSERT_GE(loewner_gap(a.matrix(), t), -1e-9 * a.matrix().norm());
    EXPECT_GE(loewner_gap(s, t.topLeftCorner(cut, cut)), -1e-9 * a.matrix().norm());
  }
}

TEST(VariationalCheck, Examples) {
  ComplexVector x(2);
  x << 1.0, Complex(0.0, 2.0);
  const VariationalReport id =
      variational_check(BlockSplit(HermitianMatrix::identity(4), 2), x, 100);
  EXPECT_NEAR(id.infimum_value, 5.0, 1e-14);
  EXPECT_LE(id.minimizer.norm(), 1e-15);

  ComplexVector one(1);
  one << 1.0;
  const VariationalReport s = variational_check(BlockSplit(real2(2, 1, 1), 1), one, 100);
  EXPECT_NEAR(s.infimum_value, 1.0, 1e-14);
  EXPECT_NEAR(s.minimizer(0).real(), -1.0, 1e-14);
  EXPECT_EQ(s.undercut, 0.0);
}

TEST(VariationalCheck, RandomPsdSampling) {
  Rng rng(43);
  const HermitianMatrix a(testing::random_psd(6, 6, rng));
  const ComplexVector x = testing::random_matrix(3, 1, rng);
  const VariationalReport r = variational_check(BlockSplit(a, 3), x, 10000, 7);
  EXPECT_LE(r.relative_error, 1e-8);
  EXPECT_LE(r.undercut, 1e-8 * std::max(1.0, std::abs(r.shorted_value)));
}

TEST(Arrowhead, Layout) {
  const HermitianMatrix h =
      arrowhead(ComplexMatrix::Constant(1, 1, 0.5), ComplexMatrix::Constant(1, 1, 0.7),
                MatrixTuple::scalars({Complex(0.1, 0.2), 0.3}));
  ComplexMatrix expected(3, 3);
  expected << 0.5, Complex(0.1, 0.2), 0.3, Complex(0.1, -0.2), 0.7, 0.0, 0.3, 0.0, 0.7;
  EXPECT_EQ(h.matrix(), expected);
}

TEST(AndoComplete, ZeroTuple) {
  AndoOptions o;
  o.epsilon = 0.1;
  const AndoCertificate c = ando_complete(MatrixTuple::zeros(2, 2), o);
  EXPECT_LE((c.b.matrix() - 0.9 * ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_LE((c.a.matrix() - 0.1 * ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_TRUE(c.valid(1e-8));
}

TEST(AndoComplete, ScalarFeasibilityInterval) {
  const AndoCertificate c = ando_complete(MatrixTuple::scalars({0.4}));
  const double b = c.b.matrix()(0, 0).real();
  EXPECT_GE(b, 0.2 - 1e-6);
  EXPECT_LE(b, 0.8 + 1e-6);
  EXPECT_GE(b * (1.0 - b), 0.16 - 1e-6);
  EXPECT_TRUE(c.valid(1e-8));
}

TEST(AndoComplete, RandomTupleAtRadiusPointFour) {
  Rng rng(44);
  for (int trial = 0; trial < 5; ++trial) {
    const MatrixTuple t =
        testing::with_joint_radius(testing::random_tuple(2, 2, rng), 0.4, 6);
    const AndoCertificate c = ando_complete(t);
    EXPECT_GT(c.margin, 0.0);
    EXPECT_EQ(c.a.matrix() + c.b.matrix(), ComplexMatrix::Identity(2, 2));
    const CertificateCheck chk = verify_ando_certificate(t, c.a, c.b, 1e-8);
    EXPECT_TRUE(chk.ok);
    EXPECT_GE(chk.schur_margin, -1e-8);
    EXPECT_LE(chk.range_defect, 1e-10);
  }
}

TEST(AndoComplete, MethodsAgree) {
  Rng rng(45);
  const MatrixTuple t =
      testing::with_joint_radius(testing::random_tuple(3, 2, rng), 0.35, 5);
  AndoOptions o;
  o.depth = 5;
  o.epsilon = 0.01;
  o.method = ShortMethod::kGlobalSolve;
  const AndoCertificate g = ando_complete(t, o);
  o.method = ShortMethod::kNeumann;
  const AndoCertificate n = ando_complete(t, o);
  o.method = ShortMethod::kRecursion;
  const AndoCertificate r = ando_complete(t, o);
  EXPECT_LE((g.b.matrix() - n.b.matrix()).norm(), 1e-10);
  EXPECT_LE((g.b.matrix() - r.b.matrix()).norm(), 1e-12);
  EXPECT_EQ(g.method, "global-solve");
  EXPECT_EQ(r.method, "recursion");
}

TEST(AndoComplete, Errors) {
  EXPECT_THROW(ando_complete(MatrixTuple::scalars({0.8, 0.8})), DomainError);
  AndoOptions o;
  o.epsilon = 0.5;
  EXPECT_THROW(ando_complete(MatrixTuple::scalars({0.4}), o), DomainError);
  o.depth = 0;
  EXPECT_THROW(ando_complete(MatrixTuple::scalars({0.4}), o), InputError);
}

TEST(AndoComplete, SoundnessRoundTrip) {
  Rng rng(46);
  for (int trial = 0; trial < 5; ++trial) {
    const MatrixTuple t =
        testing::with_joint_radius(testing::random_tuple(2, 2, rng), 0.4, 6);
    const AndoCertificate c = ando_complete(t);
    ASSERT_TRUE(c.strict(1e-8));
    for (int d = 0; d <= 8; ++d) {
      EXPECT_GE(band_min_eigenvalue(t, d).upper, 0.0);
    }
  }
}

TEST(VerifyCertificate, DetectsCorruption) {
  const AndoCertificate c = ando_complete(MatrixTuple::scalars({0.3, 0.2}));
  ComplexMatrix b = c.b.matrix();
  b(0, 0) += 1e-3;
  EXPECT_FALSE(verify_ando_certificate(c.arms, c.a, b, 1e-8).sums_to_identity);
  ComplexMatrix a = ComplexMatrix::Constant(1, 1, 0.01);
  ComplexMatrix bb = ComplexMatrix::Constant(1, 1, 0.99);
  EXPECT_FALSE(verify_ando_certificate(c.arms, a, bb, 1e-8).ok);
}

TEST(SelfSimilarity, ZeroTupleHasNoDrift) {
  const SelfSimilarityReport r = self_similarity_check(MatrixTuple::zeros(2, 1), 5);
  for (double d : r.drift) EXPECT_EQ(d, 0.0);
}

TEST(SelfSimilarity, ScalarFixedPoint) {
  const SelfSimilarityReport r = self_similarity_check(MatrixTuple::scalars({0.4}), 14);
  EXPECT_LT(r.drift[11], 1e-6);
  for (std::size_t l = 1; l < r.shorts.size(); ++l) {
    // Shorts decrease toward the fixed point 0.8 of B = 1 - 0.16 / B.
    EXPECT_LE(r.shorts[l].matrix()(0, 0).real(),
              r.shorts[l - 1].matrix()(0, 0).real() + 1e-12);
  }
  EXPECT_NEAR(r.shorts.back().matrix()(0, 0).real(), 0.8, 1e-7);
  for (double res : r.recursion_residual) EXPECT_LE(res, 1e-12);
}

TEST(SelfSimilarity, TwoScalarsDriftDecreases) {
  const SelfSimilarityReport r = self_similarity_check(MatrixTuple::scalars({0.3, 0.3}), 8);
  EXPECT_TRUE(r.drift_nonincreasing);
  for (std::size_t l = 2; l < r.drift.size(); ++l) {
    EXPECT_LT(r.drift[l], r.drift[l - 1]);
  }
}

TEST(CertifyDualRow, BoundaryNeedsDeepRecursion) {
  const CertifyResult r = certify_dual_row(MatrixTuple::scalars({0.3, 0.4}));
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->method, "recursion");
  EXPECT_TRUE(verify_ando_certificate(r.certificate->arms, r.certificate->a,
                                      r.certificate->b, 1e-8)
                  .ok);
}

}  // namespace
}  // namespace cuntzsys
