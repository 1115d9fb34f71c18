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

#include "hoffman/numerics.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_instances.hpp"

namespace hoffman {
namespace {

// Singular values of a 2x2 matrix from the eigenvalues of M M'.
std::pair<double, double> SingularValues2x2(const Matrix& m) {
  const Matrix s = m * m.transpose();
  const double tr = s(0, 0) + s(1, 1);
  const double det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  return {std::sqrt(tr / 2 + disc), std::sqrt(std::max(0.0, tr / 2 - disc))};
}

TEST(OrthonormalNullBasisTest, AxisAligned) {
  const NullBasis nb = OrthonormalNullBasis(Matrix{{1.0, 0.0}});
  ASSERT_EQ(nb.k, 1);
  EXPECT_NEAR(std::abs(nb.q(1, 0)), 1.0, 1e-14);
  EXPECT_NEAR(nb.q(0, 0), 0.0, 1e-14);
}

TEST(OrthonormalNullBasisTest, NoRowsGivesIdentity) {
  const NullBasis nb = OrthonormalNullBasis(Matrix(0, 2));
  EXPECT_EQ(nb.k, 2);
  EXPECT_TRUE(nb.q.isApprox(Matrix::Identity(2, 2)));
}

TEST(OrthonormalNullBasisTest, OpposedRows) {
  const Matrix a{{1.0, 0.0}, {-1.0, 0.0}};
  const NullBasis nb = OrthonormalNullBasis(a);
  ASSERT_EQ(nb.k, 1);
  EXPECT_LE(MaxAbs(Matrix(a * nb.q)), 1e-14);
  EXPECT_NEAR((nb.q.transpose() * nb.q)(0, 0), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(nb.q(1, 0)), 1.0, 1e-14);
}

TEST(OrthonormalNullBasisTest, RandomInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 8;
    const int rows = trial % 7;
    const int rank = std::min(rows, 1 + trial % 4);
    const Matrix a = rows == 0 ? Matrix(0, n)
                               : Matrix(testing::RankDeficient(rows, n, rank, rng));
    const NullBasis nb = OrthonormalNullBasis(a);
    const int expected_rank = rows == 0 ? 0 : std::min(rank, n);
    EXPECT_EQ(nb.k, n - expected_rank);
    const double scale = std::max(1.0, FrobeniusNorm(a));
    if (nb.k > 0 && rows > 0) {
      EXPECT_LE(MaxAbs(Matrix(a * nb.q)), 1e-9 * scale);
    }
    EXPECT_LE(nb.residual, 1e-9 * scale);
    EXPECT_LE(MaxAbs(Matrix(nb.q.transpose() * nb.q - Matrix::Identity(nb.k, nb.k))), 1e-10);
  }
}

TEST(SmallestPositiveSingularValueTest, Examples) {
  const Matrix m{{0.5, -0.5}, {0.0, 0.0}};
  const auto [hi, lo] = SingularValues2x2(m);
  ASSERT_NEAR(lo, 0.0, 1e-15);
  ASSERT_NEAR(hi, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(*SmallestPositiveSingularValue(m), hi, 1e-14);

  EXPECT_NEAR(*SmallestPositiveSingularValue(Matrix::Identity(3, 3)), 1.0, 1e-15);
  EXPECT_FALSE(SmallestPositiveSingularValue(Matrix::Zero(2, 2)).has_value());
}

TEST(SmallestPositiveSingularValueTest, MatchesTwoByTwoOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = testing::GaussianMatrix(2, 2, rng);
    const auto [hi, lo] = SingularValues2x2(m);
    EXPECT_NEAR(*SmallestPositiveSingularValue(m), lo, 1e-10 * hi);
  }
}

TEST(SmallestPositiveSingularValueTest, PositivelyHomogeneous) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = testing::RankDeficient(5, 4, 1 + trial % 4, rng);
    const double base = *SmallestPositiveSingularValue(m);
    for (double alpha : {1e-3, 0.5, 7.0, 1e4}) {
      EXPECT_NEAR(*SmallestPositiveSingularValue(Matrix(alpha * m)), alpha * base,
                  1e-10 * alpha * base);
    }
  }
}

TEST(RowNormalizeTest, Examples) {
  RowScaling rs = RowNormalize(Matrix{{0.0, -2.0}});
  EXPECT_DOUBLE_EQ(rs.scales[0], 0.5);
  EXPECT_TRUE(rs.normalized_rows.isApprox(Matrix{{0.0, -1.0}}));

  rs = RowNormalize(Matrix{{3.0, 4.0}});
  EXPECT_DOUBLE_EQ(rs.scales[0], 0.2);
  EXPECT_NEAR(rs.normalized_rows(0, 0), 0.6, 1e-15);
  EXPECT_NEAR(rs.normalized_rows(0, 1), 0.8, 1e-15);

  rs = RowNormalize(Matrix{{1.0, 0.0}, {0.0, -5.0}});
  EXPECT_DOUBLE_EQ(rs.scales[0], 1.0);
  EXPECT_DOUBLE_EQ(rs.scales[1], 0.2);
}

TEST(RowNormalizeTest, UnitRowsOnRandomInput) {
  std::mt19937_64 rng(13);
  const Matrix a = testing::GaussianMatrix(12, 6, rng);
  const RowScaling rs = RowNormalize(a);
  for (int i = 0; i < a.rows(); ++i) {
    EXPECT_NEAR(rs.normalized_rows.row(i).norm(), 1.0, 1e-12);
    EXPECT_GT(rs.scales[i], 0.0);
  }
}

TEST(RowNormalizeTest, ZeroRowIsDegenerate) {
  try {
    RowNormalize(Matrix{{1.0, 2.0}, {0.0, 0.0}});
    FAIL() << "expected DegenerateRow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateRow);
  }
}

}  // namespace
}  // namespace hoffman
