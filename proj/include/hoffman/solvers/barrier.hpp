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

#ifndef HOFFMAN_SOLVERS_BARRIER_HPP_
#define HOFFMAN_SOLVERS_BARRIER_HPP_

#include <algorithm>
#include <cmath>
#include <limits>

#include "Eigen/Cholesky"
#include "Eigen/QR"
#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"
#include "hoffman/numerics.hpp"
#include "hoffman/solvers/program.hpp"
#include "hoffman/solvers/simplex.hpp"

namespace hoffman::internal {

// Least-norm correction of `y` onto {v : E v = f}.
inline Vector ProjectOntoAffine(const Matrix& e, const Vector& f, const Vector& y) {
  if (e.rows() == 0) return y;
  const Eigen::MatrixXd dense = e;
  const Vector correction = dense.completeOrthogonalDecomposition().solve(Vector(e * y - f));
  return y - correction;
}

// A strictly positive point of {v : E v = f} found by max tau s.t.
// E v = f, v >= tau 1, v >= 0, tau <= 1.
inline Vector FindInteriorPoint(const Matrix& e, const Vector& f, const SolverConfig& cfg) {
  const Eigen::Index nv = e.cols();
  StandardFormProgram lp;
  lp.objective = ObjectiveKind::kLinear;
  lp.c = Vector::Zero(nv + 1);
  lp.c[nv] = -1.0;
  lp.e = Matrix::Zero(e.rows(), nv + 1);
  lp.e.leftCols(nv) = e;
  lp.f = f;
  lp.g = Matrix::Zero(nv + 1, nv + 1);
  lp.h = Vector::Zero(nv + 1);
  for (Eigen::Index j = 0; j < nv; ++j) {
    lp.g(j, j) = 1.0;
    lp.g(j, nv) = -1.0;
  }
  lp.g(nv, nv) = -1.0;
  lp.h[nv] = -1.0;
  lp.nonnegative.assign(static_cast<std::size_t>(nv + 1), true);
  PrimalPoint pt;
  try {
    pt = SolveLinearProgram(lp, cfg);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInfeasibleProgram) {
      throw Error(ErrorCode::kNoInteriorPoint, "affine slice does not meet the positive orthant");
    }
    throw;
  }
  const Vector v = pt.v.head(nv);
  if (!(v.minCoeff() > cfg.feas_tol * std::max(1.0, MaxAbs(v)))) {
    throw Error(ErrorCode::kNoInteriorPoint, "affine slice has no strictly positive point");
  }
  return v;
}

struct BarrierOutcome {
  Vector v;
  double newton_decrement = 0.0;
  double reduced_gradient_norm = 0.0;
  int iterations = 0;
};

// Minimizes -sum log v_i over {E v = f, v > 0} by damped Newton in the
// parametrization v = v0 + W w, W an orthonormal basis of null(E). Every
// iterate keeps E v = f up to the accuracy of W.
inline BarrierOutcome MinimizeLogBarrier(const StandardFormProgram& p, const SolverConfig& cfg) {
  const Eigen::Index nv = p.num_vars();
  Vector v0;
  bool have_start = false;
  if (p.interior_hint && p.interior_hint->size() == nv) {
    v0 = ProjectOntoAffine(p.e, p.f, *p.interior_hint);
    have_start = v0.allFinite() && v0.minCoeff() > 0.0;
  }
  if (!have_start) v0 = ProjectOntoAffine(p.e, p.f, FindInteriorPoint(p.e, p.f, cfg));
  if (!(v0.minCoeff() > 0.0)) {
    throw Error(ErrorCode::kNoInteriorPoint, "starting point lost positivity");
  }

  BarrierOutcome out;
  const NullBasis basis = OrthonormalNullBasis(p.e);
  if (basis.k == 0) {
    out.v = v0;
    return out;
  }
  const Eigen::MatrixXd w_basis = basis.q;
  Vector w = Vector::Zero(basis.k);
  Vector v = v0;

  auto barrier = [](const Vector& y) { return -y.array().log().sum(); };

  double previous = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const Vector inv = v.cwiseInverse();
    const Vector grad = -w_basis.transpose() * inv;
    const Eigen::MatrixXd hess =
        w_basis.transpose() * inv.cwiseAbs2().asDiagonal() * w_basis;
    const Vector step = hess.ldlt().solve(-grad);
    const double decrement = std::sqrt(std::max(0.0, -grad.dot(step)));
    out.newton_decrement = decrement;
    out.reduced_gradient_norm = grad.norm();
    out.iterations = iter;
    // Once in the quadratic regime, stop when the decrement no longer
    // shrinks: the iterate is at working precision.
    if (decrement < 1e-15 || (decrement < cfg.opt_tol && decrement >= 0.5 * previous)) break;
    previous = decrement;

    const Vector dv = w_basis * step;
    double alpha = 1.0;
    for (Eigen::Index i = 0; i < nv; ++i) {
      if (dv[i] < 0.0) alpha = std::min(alpha, -0.99 * v[i] / dv[i]);
    }
    const double f0 = barrier(v);
    while (alpha > 1e-16) {
      const Vector trial = v + alpha * dv;
      if (trial.minCoeff() > 0.0 &&
          barrier(trial) <= f0 - 0.25 * alpha * decrement * decrement + 1e-15 * std::abs(f0)) {
        break;
      }
      alpha *= 0.5;
    }
    if (alpha <= 1e-16) break;
    w += alpha * step;
    v = v0 + w_basis * w;
  }
  if (out.newton_decrement > cfg.opt_tol) {
    throw Error(ErrorCode::kSolverStall, "analytic-center Newton iteration did not converge");
  }
  out.v = v;
  return out;
}

}  // namespace hoffman::internal

#endif  // HOFFMAN_SOLVERS_BARRIER_HPP_
