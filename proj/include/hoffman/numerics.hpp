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

#ifndef HOFFMAN_NUMERICS_HPP_
#define HOFFMAN_NUMERICS_HPP_

#include <optional>
#include <string>

#include "Eigen/SVD"
#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"

namespace hoffman {

inline constexpr double kDefaultRankTol = 1e-9;

// Orthonormal basis of the subspace L = {x : A_B x = 0}.
struct NullBasis {
  Matrix q;               // n x k, orthonormal columns
  int k = 0;              // dim L
  double residual = 0.0;  // ||A_B Q||_max
};

// D = diag(scales), normalized_rows = D * A_N with unit Euclidean rows.
struct RowScaling {
  Vector scales;
  Matrix normalized_rows;
};

namespace internal {

inline Eigen::JacobiSVD<Eigen::MatrixXd> FullSvd(const Matrix& m, int options) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(m), options);
  if (!svd.singularValues().allFinite()) {
    throw Error(ErrorCode::kNumericalFailure, "SVD produced non-finite values");
  }
  return svd;
}

// Number of singular values strictly above rank_tol * sigma_max. A matrix
// whose largest singular value is below kZeroMatrixScale has rank 0.
inline int NumericalRank(const Vector& sigma, double rank_tol) {
  if (sigma.size() == 0 || sigma[0] <= kZeroMatrixScale) return 0;
  const double cutoff = rank_tol * sigma[0];
  int rank = 0;
  while (rank < sigma.size() && sigma[rank] > cutoff) ++rank;
  return rank;
}

}  // namespace internal

// Columns of Q span the right singular directions of `a` whose singular value
// is at most rank_tol * sigma_max. A matrix with no rows (or the zero matrix)
// yields the n x n identity.
inline NullBasis OrthonormalNullBasis(const Matrix& a, double rank_tol = kDefaultRankTol) {
  if (!(rank_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rank_tol must be positive");
  }
  const Eigen::Index n = a.cols();
  NullBasis out;
  if (a.rows() == 0 || FrobeniusNorm(a) <= kZeroMatrixScale) {
    out.q = Matrix::Identity(n, n);
    out.k = static_cast<int>(n);
    out.residual = MaxAbs(a);
    return out;
  }
  const auto svd = internal::FullSvd(a, Eigen::ComputeFullV);
  const Vector sigma = svd.singularValues();
  const int rank = internal::NumericalRank(sigma, rank_tol);
  out.k = static_cast<int>(n) - rank;
  out.q = svd.matrixV().rightCols(out.k);
  if (!out.q.allFinite()) {
    throw Error(ErrorCode::kNumericalFailure, "null-space basis is not finite");
  }
  out.residual = out.k == 0 ? 0.0 : MaxAbs(Matrix(a * out.q));
  return out;
}

// Smallest singular value above the rank cut, or nullopt when every singular
// value falls below it (the zero matrix).
inline std::optional<double> SmallestPositiveSingularValue(
    const Matrix& m, double rank_tol = kDefaultRankTol) {
  if (!(rank_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rank_tol must be positive");
  }
  if (m.size() == 0) return std::nullopt;
  const auto svd = internal::FullSvd(m, 0);
  const Vector sigma = svd.singularValues();
  const int rank = internal::NumericalRank(sigma, rank_tol);
  if (rank == 0) return std::nullopt;
  return sigma[rank - 1];
}

inline RowScaling RowNormalize(const Matrix& a_n) {
  RowScaling out;
  out.scales.resize(a_n.rows());
  out.normalized_rows.resize(a_n.rows(), a_n.cols());
  for (Eigen::Index i = 0; i < a_n.rows(); ++i) {
    const double norm = EuclideanNorm(a_n.row(i).transpose());
    if (norm <= kZeroMatrixScale) {
      throw Error(ErrorCode::kDegenerateRow,
                  "row " + std::to_string(i) + " has zero norm");
    }
    out.scales[i] = 1.0 / norm;
    out.normalized_rows.row(i) = a_n.row(i) / norm;
  }
  return out;
}

}  // namespace hoffman

#endif  // HOFFMAN_NUMERICS_HPP_
