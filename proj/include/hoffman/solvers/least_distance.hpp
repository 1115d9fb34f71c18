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

#ifndef HOFFMAN_SOLVERS_LEAST_DISTANCE_HPP_
#define HOFFMAN_SOLVERS_LEAST_DISTANCE_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "Eigen/QR"
#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"

namespace hoffman::internal {

struct NnlsResult {
  Vector x;
  Vector residual;  // E x - f
  int iterations = 0;
};

// Lawson-Hanson active-set method for min ||E x - f|| s.t. x >= 0.
inline NnlsResult SolveNnls(const Eigen::MatrixXd& e, const Vector& f, int max_iters) {
  const Eigen::Index q = e.cols();
  NnlsResult out;
  out.x = Vector::Zero(q);
  std::vector<bool> passive(q, false);
  std::vector<bool> blocked(q, false);
  const double w_tol =
      1e-13 * std::max(1.0, e.size() == 0 ? 0.0 : e.norm()) * std::max(1.0, f.norm());

  auto solve_passive = [&](Vector& z) {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < q; ++j) {
      if (passive[j]) cols.push_back(j);
    }
    Eigen::MatrixXd sub(e.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) sub.col(k) = e.col(cols[k]);
    const Vector zp = sub.colPivHouseholderQr().solve(f);
    z = Vector::Zero(q);
    for (std::size_t k = 0; k < cols.size(); ++k) z[cols[k]] = zp[k];
  };

  int iter = 0;
  while (true) {
    const Vector w = e.transpose() * (f - e * out.x);
    Eigen::Index enter = -1;
    double best = w_tol;
    for (Eigen::Index j = 0; j < q; ++j) {
      if (!passive[j] && !blocked[j] && w[j] > best) {
        best = w[j];
        enter = j;
      }
    }
    if (enter < 0) break;
    if (++iter > max_iters) {
      throw Error(ErrorCode::kSolverStall, "NNLS iteration cap reached");
    }
    passive[enter] = true;
    Vector z;
    solve_passive(z);
    if (!(z[enter] > 0.0)) {
      // Roundoff made the entering direction useless; skip it until the
      // iterate moves.
      passive[enter] = false;
      blocked[enter] = true;
      continue;
    }
    std::fill(blocked.begin(), blocked.end(), false);
    int inner = 0;
    while (true) {
      bool all_positive = true;
      for (Eigen::Index j = 0; j < q; ++j) {
        if (passive[j] && z[j] <= 0.0) all_positive = false;
      }
      if (all_positive) break;
      if (++inner > 3 * q + 10) {
        throw Error(ErrorCode::kSolverStall, "NNLS inner loop did not settle");
      }
      double alpha = 1.0;
      for (Eigen::Index j = 0; j < q; ++j) {
        if (passive[j] && z[j] <= 0.0) {
          alpha = std::min(alpha, out.x[j] / (out.x[j] - z[j]));
        }
      }
      out.x += alpha * (z - out.x);
      for (Eigen::Index j = 0; j < q; ++j) {
        if (passive[j] && out.x[j] <= 1e-15 * std::max(1.0, out.x.lpNorm<Eigen::Infinity>())) {
          passive[j] = false;
          out.x[j] = 0.0;
        }
      }
      solve_passive(z);
    }
    out.x = z;
  }
  out.iterations = iter;
  out.residual = e * out.x - f;
  return out;
}

struct LeastDistanceResult {
  Vector x;
  Vector multipliers;  // x = G' * multipliers at the optimum
  int iterations = 0;
};

// min ||x||_2 s.t. G x >= h, through the NNLS dual: with E = [G'; h'] and
// f = e_{n+1}, the NNLS residual r gives x = -r_{1:n} / r_{n+1}. A zero
// residual certifies infeasibility.
inline LeastDistanceResult SolveLeastDistance(const Matrix& g, const Vector& h, int max_iters) {
  const Eigen::Index n = g.cols();
  const Eigen::Index k = g.rows();
  LeastDistanceResult out;
  if (k == 0 || PosPartInfNorm(h) == 0.0) {
    // x = 0 is feasible and has the smallest possible norm.
    out.x = Vector::Zero(n);
    out.multipliers = Vector::Zero(k);
    return out;
  }
  Eigen::MatrixXd e(n + 1, k);
  e.topRows(n) = g.transpose();
  e.row(n) = h.transpose();
  Vector f = Vector::Zero(n + 1);
  f[n] = 1.0;

  const NnlsResult nnls = SolveNnls(e, f, std::max(max_iters, 3 * static_cast<int>(k)));
  const double last = nnls.residual[n];
  if (!(last < -1e-14) || nnls.residual.norm() <= 1e-14) {
    throw Error(ErrorCode::kInfeasibleQP, "constraints G x >= h admit no solution");
  }
  out.x = -nnls.residual.head(n) / last;
  out.multipliers = nnls.x / (-last);
  out.iterations = nnls.iterations;

  // Polish: the optimum is the min-norm solution of the active rows at
  // equality. Accept it only if it does not worsen feasibility.
  std::vector<Eigen::Index> active;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (out.multipliers[i] > 0.0) active.push_back(i);
  }
  if (!active.empty()) {
    Eigen::MatrixXd ga(static_cast<Eigen::Index>(active.size()), n);
    Vector ha(static_cast<Eigen::Index>(active.size()));
    for (std::size_t r = 0; r < active.size(); ++r) {
      ga.row(r) = g.row(active[r]);
      ha[r] = h[active[r]];
    }
    const Vector polished = ga.completeOrthogonalDecomposition().solve(ha);
    const double raw_violation = PosPartInfNorm(h - g * out.x);
    const double polished_violation = PosPartInfNorm(h - g * polished);
    if (polished.allFinite() && polished_violation <= raw_violation) out.x = polished;
  }
  return out;
}

}  // namespace hoffman::internal

#endif  // HOFFMAN_SOLVERS_LEAST_DISTANCE_HPP_
