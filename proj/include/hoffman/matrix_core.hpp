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

#ifndef HOFFMAN_MATRIX_CORE_HPP_
#define HOFFMAN_MATRIX_CORE_HPP_

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "Eigen/Dense"
#include "hoffman/error.hpp"

namespace hoffman {

// Dense storage throughout; row-major so that row subsets (A_B, A_N) and row
// normalization touch contiguous memory.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using IndexSet = std::vector<int>;

// Frobenius norms at or below this are treated as the zero matrix.
inline constexpr double kZeroMatrixScale = 1e-300;

// The only norm pair supported: l2 on the domain R^n and l-infinity on the
// image R^m. l-infinity satisfies componentwise compatibility, so
// dist(Au, R^m_-) = ||(Au)^+||_inf.
struct NormPair {
  enum class Domain { kEuclidean };
  enum class Image { kMaxNorm };

  static constexpr Domain domain_norm = Domain::kEuclidean;
  static constexpr Image image_norm = Image::kMaxNorm;
};

// ||v^+||_inf = max(0, max_i v_i).
inline double PosPartInfNorm(const Eigen::Ref<const Vector>& v) {
  double result = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) result = std::max(result, v[i]);
  return result;
}

// Overflow-safe l2 norm.
inline double EuclideanNorm(const Eigen::Ref<const Vector>& v) {
  if (v.size() == 0) return 0.0;
  return v.stableNorm();
}

// Largest absolute entry; 0 for an empty expression.
template <typename Derived>
double MaxAbs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double FrobeniusNorm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.stableNorm();
}

// Rows of `a` selected by `rows`, in the given order. An empty selection
// yields a 0 x n matrix.
inline Matrix SelectRows(const Matrix& a, const IndexSet& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), a.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) out.row(k) = a.row(rows[k]);
  return out;
}

inline Vector SelectEntries(const Vector& v, const IndexSet& idx) {
  Vector out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out[k] = v[idx[k]];
  return out;
}

// The matrix A defining P = {x : Ax <= 0}, with its cached Frobenius norm.
class ProblemInstance {
 public:
  explicit ProblemInstance(Matrix a) : a_(std::move(a)) {
    if (a_.rows() < 1 || a_.cols() < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "matrix must have at least one row and one column");
    }
    if (!a_.allFinite()) {
      throw Error(ErrorCode::kInvalidArgument, "matrix has non-finite entries");
    }
    frobenius_scale_ = FrobeniusNorm(a_);
  }

  const Matrix& a() const { return a_; }
  int m() const { return static_cast<int>(a_.rows()); }
  int n() const { return static_cast<int>(a_.cols()); }
  double frobenius_scale() const { return frobenius_scale_; }

  // max(1, ||A||_F): the reference scale for every relative tolerance.
  double tolerance_scale() const { return std::max(1.0, frobenius_scale_); }

  bool is_zero() const { return frobenius_scale_ <= kZeroMatrixScale; }

 private:
  Matrix a_;
  double frobenius_scale_ = 0.0;
};

}  // namespace hoffman

#endif  // HOFFMAN_MATRIX_CORE_HPP_
