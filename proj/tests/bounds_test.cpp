// Copyright 2026 The hoffman Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hoffman/bounds.hpp"

#include <cmath>
#include <random>

#include "certificate_checker.hpp"
#include "enumeration_oracles.hpp"
#include "gtest/gtest.h"
#include "test_instances.hpp"

namespace hoffman {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// ------------------------------------------------------------------ case N

TEST(BoundCaseNTest, Examples) {
  auto b = BoundCaseN(-Matrix::Identity(4, 4), {});
  EXPECT_NEAR(b.value, 2.0, 1e-12);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(b.x_bar[j], -1.0, 1e-12);

  b = BoundCaseN(Matrix{{3.0, 4.0}}, {});
  EXPECT_NEAR(b.value, 0.2, 1e-12);

  b = BoundCaseN(Matrix::Identity(2, 2), {});
  EXPECT_NEAR(b.value, kSqrt2, 1e-12);
  EXPECT_GE(b.feasibility_margin, 0.0);
}

TEST(BoundCaseNTest, EmptyBlockRejected) {
  EXPECT_THROW(BoundCaseN(Matrix(0, 2), {}), Error);
}

// ------------------------------------------------------------------ case B

TEST(BoundCaseBTest, Examples) {
  for (const Matrix& a_b : {Matrix{{1.0}, {-1.0}}, Matrix{{1.0, 0.0}, {-1.0, 0.0}}}) {
    const auto b = BoundCaseB(a_b, {});
    EXPECT_NEAR(b.y_bar[0], 0.5, 1e-12);
    EXPECT_NEAR(b.y_bar[1], 0.5, 1e-12);
    ASSERT_TRUE(b.sigma.has_value());
    EXPECT_NEAR(*b.sigma, kSqrt2 / 2, 1e-12);
    EXPECT_NEAR(b.value, 2 * kSqrt2, 1e-12);
  }
}

TEST(BoundCaseBTest, ZeroBlockIsZero) {
  const auto b = BoundCaseB(Matrix::Zero(3, 2), {});
  EXPECT_EQ(b.value, 0.0);
  EXPECT_FALSE(b.sigma.has_value());
  EXPECT_NEAR(b.y_bar.sum(), 1.0, 1e-15);
}

// ------------------------------------------------------------------ stitch

TEST(BoundStitchTest, AxisExample) {
  const auto s = BoundStitch(Matrix{{1.0, 0.0}, {-1.0, 0.0}}, Matrix{{0.0, -1.0}}, {});
  EXPECT_EQ(s.basis.k, 1);
  EXPECT_NEAR(std::abs(s.basis.q(1, 0)), 1.0, 1e-14);
  EXPECT_NEAR(s.scaling.scales[0], 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s.z_bar[0]), 1.0, 1e-12);
  EXPECT_NEAR(s.value, 3.0, 1e-12);
}

TEST(BoundStitchTest, DiagonalLinealityExample) {
  // L = span{(1,1)}, K = nonpositive orthant of -I: M = -(1,1)' q with
  // |q| = 1/sqrt(2), so |z| = sqrt(2).
  const auto s = BoundStitch(Matrix{{1.0, -1.0}, {-1.0, 1.0}}, -Matrix::Identity(2, 2), {});
  EXPECT_NEAR(std::abs(s.z_bar[0]), kSqrt2, 1e-12);
  EXPECT_NEAR(s.value, 1 + 2 * kSqrt2, 1e-12);
}

TEST(BoundStitchTest, TrivialLinealityIsInfeasible) {
  EXPECT_THROW(BoundStitch(Matrix::Identity(2, 2), Matrix{{-1.0, 0.0}}, {}), Error);
}

TEST(BoundStitchTest, InvariantUnderChoiceOfNullBasis) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 5;
    const auto mixed = testing::ConstructMixed(n, 1 + trial % 2, 1 + trial % 4, rng);
    const Matrix a_b = SelectRows(mixed.a, mixed.b);
    const Matrix a_n = SelectRows(mixed.a, mixed.n);
    NullBasis basis = OrthonormalNullBasis(a_b);
    const double base = BoundStitchWithBasis(a_n, basis, {}).value;
    basis.q = basis.q * testing::RandomOrthogonal(basis.k, rng);
    const double rotated = BoundStitchWithBasis(a_n, basis, {}).value;
    EXPECT_NEAR(rotated, base, 1e-8 * base);
  }
}

// ------------------------------------------------------------------- total

TEST(BoundH0Test, ClosedFormInstances) {
  auto r = BoundH0(ProblemInstance(-Matrix::Identity(5, 5)));
  EXPECT_EQ(r.branch, Branch::kPointedOnly);
  EXPECT_NEAR(r.total, std::sqrt(5.0), 1e-6);

  r = BoundH0(ProblemInstance(Matrix{{3.0, 4.0}}));
  EXPECT_NEAR(r.total, 0.2, 1e-6);

  r = BoundH0(ProblemInstance(Matrix{{1.0}, {-1.0}}));
  EXPECT_EQ(r.branch, Branch::kLinealityOnly);
  EXPECT_NEAR(r.total, 2 * kSqrt2, 1e-6);

  r = BoundH0(ProblemInstance(Matrix{{1.0, 0.0}, {-1.0, 0.0}, {0.0, -1.0}}));
  EXPECT_EQ(r.branch, Branch::kGeneral);
  EXPECT_NEAR(r.case_n->value, 1.0, 1e-9);
  EXPECT_NEAR(r.case_b->value, 2 * kSqrt2, 1e-9);
  EXPECT_NEAR(r.stitch->value, 3.0, 1e-9);
  EXPECT_NEAR(r.total, 6 * kSqrt2, 1e-6);
}

TEST(BoundH0Test, ZeroMatrix) {
  const auto r = BoundH0(ProblemInstance(Matrix::Zero(3, 4)));
  EXPECT_EQ(r.branch, Branch::kZeroMatrix);
  EXPECT_EQ(r.total, 0.0);
  EXPECT_FALSE(r.partition.has_value());
}

TEST(BoundH0Test, BranchMatchesPartition) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const int pairs = trial % 3, strict = (trial / 3) % 3;
    if (pairs + strict == 0) continue;
    const auto mixed = testing::ConstructMixed(2 + trial % 5, pairs, strict, rng);
    const auto r = BoundH0(ProblemInstance(mixed.a));
    const Branch expected = pairs == 0    ? Branch::kPointedOnly
                            : strict == 0 ? Branch::kLinealityOnly
                                          : Branch::kGeneral;
    EXPECT_EQ(r.branch, expected) << "trial " << trial;
    EXPECT_EQ(r.case_n.has_value(), strict > 0);
    EXPECT_EQ(r.case_b.has_value(), pairs > 0);
    EXPECT_EQ(r.stitch.has_value(), expected == Branch::kGeneral);
  }
}

TEST(BoundH0Test, ScalingCovariance) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing::GaussianMatrix(1 + trial % 20, 1 + trial % 10, rng);
    const double base = BoundH0(ProblemInstance(a)).total;
    for (double alpha : {0.01, 1.0, 100.0}) {
      const double scaled = BoundH0(ProblemInstance(Matrix(alpha * a))).total;
      EXPECT_NEAR(scaled * alpha, base, 1e-6 * base) << "trial " << trial << " alpha " << alpha;
    }
  }
}

TEST(BoundH0Test, RowPermutationInvariance) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing::GaussianMatrix(2 + trial % 15, 1 + trial % 8, rng);
    const double base = BoundH0(ProblemInstance(a)).total;
    for (int rep = 0; rep < 5; ++rep) {
      const auto perm = testing::RandomPermutation(static_cast<int>(a.rows()), rng);
      const double permuted = BoundH0(ProblemInstance(testing::PermuteRows(a, perm))).total;
      EXPECT_NEAR(permuted, base, 1e-8 * base) << "trial " << trial;
    }
  }
}

// In the plane the true constant is approached from below by a dense sweep
// over the unit circle with exact face-enumeration distances.
TEST(BoundH0Test, UpperBoundsPlanarSweep) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix a = (trial % 3 == 2) ? testing::ConstructMixed(2, 1, 1 + trial % 2, rng).a
                                      : testing::GaussianMatrix(1 + trial % 5, 2, rng);
    const ProblemInstance inst(a);
    const double total = BoundH0(inst).total;
    const double sweep = testing::CircleSweepH0(a, 2000);
    EXPECT_LE(sweep, total * (1 + 1e-9)) << "trial " << trial;
  }
}

TEST(BoundH0Test, IndependentCertificateAudit) {
  for (const Matrix& a : testing::SandwichSuite(97)) {
    const ProblemInstance inst(a);
    const auto audit = testing::AuditCertificates(inst, BoundH0(inst));
    EXPECT_TRUE(audit.ok()) << (audit.failures.empty() ? "" : audit.failures.front());
  }
}

}  // namespace
}  // namespace hoffman
