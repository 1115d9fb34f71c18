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

#ifndef HOFFMAN_CONVEX_SOLVERS_HPP_
#define HOFFMAN_CONVEX_SOLVERS_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"
#include "hoffman/numerics.hpp"
#include "hoffman/solvers/builtin_backend.hpp"
#include "hoffman/solvers/least_distance.hpp"
#include "hoffman/solvers/program.hpp"

namespace hoffman {

// Smallest t accepted from the partition LP.
inline constexpr double kPartitionMinT = 1e-9;

// A point of
//   A'y = 0,  Ax + s = 0,  y + s - t1 >= 0,  1'y + 1's = 1,  y, s >= 0
// with t maximal.
struct PartitionLPSolution {
  Vector x;
  Vector y;
  Vector s;
  double t = 0.0;
  double residual_dual = 0.0;    // ||A'y||_inf
  double residual_primal = 0.0;  // ||Ax + s||_inf
  double residual_sum = 0.0;     // |1'y + 1's - 1|
  double residual_cover = 0.0;   // max(0, max_i t - y_i - s_i)
  double residual_sign = 0.0;    // max(0, max_i -y_i, max_i -s_i)
  int iterations = 0;
};

inline PartitionLPSolution SolvePartitionLp(const ProblemInstance& instance,
                                            const SolverConfig& cfg) {
  cfg.Validate();
  if (instance.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "partition LP requires A != 0");
  }
  const int m = instance.m();
  const int n = instance.n();
  // The LP is homogeneous in A apart from x, so solve it for A / ||A||_F and
  // rescale x afterwards.
  const double scale = instance.frobenius_scale();
  const Matrix a = instance.a() / scale;

  // Variables: [x (free, n) | y (m) | s (m) | t].
  const int nv = n + 2 * m + 1;
  const int ix = 0, iy = n, is = n + m, it = n + 2 * m;
  StandardFormProgram lp;
  lp.objective = ObjectiveKind::kLinear;
  lp.c = Vector::Zero(nv);
  lp.c[it] = -1.0;
  lp.e = Matrix::Zero(n + m + 1, nv);
  lp.f = Vector::Zero(n + m + 1);
  lp.e.block(0, iy, n, m) = a.transpose();
  lp.e.block(n, ix, m, n) = a;
  lp.e.block(n, is, m, m).setIdentity();
  lp.e.block(n + m, iy, 1, 2 * m).setOnes();
  lp.f[n + m] = 1.0;
  lp.g = Matrix::Zero(m, nv);
  lp.h = Vector::Zero(m);
  lp.g.block(0, iy, m, m).setIdentity();
  lp.g.block(0, is, m, m).setIdentity();
  lp.g.col(it).setConstant(-1.0);
  lp.nonnegative.assign(static_cast<std::size_t>(nv), true);
  for (int j = 0; j < n; ++j) lp.nonnegative[j] = false;

  const PrimalPoint pt = ResolveBackend(cfg.solver_id)->Solve(lp, cfg);
  if (pt.v.size() != nv || !pt.v.allFinite()) {
    throw Error(ErrorCode::kNumericalFailure, "partition LP returned a malformed point");
  }

  PartitionLPSolution out;
  out.x = pt.v.segment(ix, n) / scale;
  out.y = pt.v.segment(iy, m).cwiseMax(0.0);
  out.s = pt.v.segment(is, m).cwiseMax(0.0);
  out.iterations = pt.iterations;
  // Every constraint but the normalization is homogeneous, so clipping the
  // signs and rescaling by the sum keeps the point feasible; t is then the
  // largest value the cover rows allow.
  const double total = out.y.sum() + out.s.sum();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kNumericalFailure, "partition LP returned y = s = 0");
  }
  out.x /= total;
  out.y /= total;
  out.s /= total;
  out.t = std::min(pt.v[it] / total, (out.y + out.s).minCoeff());

  const Matrix& A = instance.a();
  out.residual_dual = MaxAbs(Vector(A.transpose() * out.y));
  out.residual_primal = MaxAbs(Vector(A * out.x + out.s));
  out.residual_sum = std::abs(out.y.sum() + out.s.sum() - 1.0);
  out.residual_cover = PosPartInfNorm((out.t - out.y.array() - out.s.array()).matrix());
  out.residual_sign = std::max(PosPartInfNorm(-out.y), PosPartInfNorm(-out.s));

  const double abs_tol = cfg.feas_tol * instance.tolerance_scale();
  if (out.residual_dual > abs_tol || out.residual_primal > abs_tol ||
      out.residual_sum > cfg.feas_tol || out.residual_cover > cfg.feas_tol ||
      out.residual_sign > cfg.feas_tol) {
    throw Error(ErrorCode::kSolverStall, "partition LP point violates feasibility tolerances");
  }
  if (!(out.t >= kPartitionMinT)) {
    throw Error(ErrorCode::kSolverStall, "partition LP did not reach t > 0");
  }
  return out;
}

struct MinNormQpSolution {
  Vector z;
  double norm = 0.0;
  double restoration_factor = 1.0;  // z was multiplied by this after the solve
  double min_constraint = 0.0;      // min_i (G z)_i after restoration
  int iterations = 0;
};

namespace internal {

// Bound on the roundoff of any summation order of (G z)_i.
inline double DotProductSlack(const Matrix& g, const Vector& z) {
  if (g.rows() == 0) return 0.0;
  const double worst = (g.cwiseAbs() * z.cwiseAbs()).maxCoeff();
  return 2.0 * static_cast<double>(g.cols() + 2) * std::numeric_limits<double>::epsilon() * worst;
}

}  // namespace internal

// min ||z||^2 s.t. G z >= 1, followed by feasibility restoration: if
// delta = min_i (G z)_i falls short of 1 the point is rescaled by 1/delta,
// with a margin covering dot-product roundoff, so G z >= 1 holds for any
// summation order. delta <= 0 is a stall.
inline MinNormQpSolution SolveMinNormQp(const Matrix& g, const SolverConfig& cfg) {
  cfg.Validate();
  MinNormQpSolution out;
  if (g.rows() == 0) {
    out.z = Vector::Zero(g.cols());
    out.min_constraint = std::numeric_limits<double>::infinity();
    return out;
  }
  StandardFormProgram qp;
  qp.objective = ObjectiveKind::kSquaredNorm;
  qp.c = Vector::Zero(g.cols());
  qp.g = g;
  qp.h = Vector::Ones(g.rows());
  const PrimalPoint pt = ResolveBackend(cfg.solver_id)->Solve(qp, cfg);
  if (pt.v.size() != g.cols() || !pt.v.allFinite()) {
    throw Error(ErrorCode::kNumericalFailure, "min-norm QP returned a malformed point");
  }
  out.z = pt.v;
  out.iterations = pt.iterations;

  double delta = (g * out.z).minCoeff();
  if (!(delta > 0.0)) {
    throw Error(ErrorCode::kSolverStall, "min-norm QP point has no positive constraint margin");
  }
  for (int round = 0; round < 8; ++round) {
    const double target = 1.0 + internal::DotProductSlack(g, out.z);
    if (delta >= target) break;
    const double factor = target / delta * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
    out.z *= factor;
    out.restoration_factor *= factor;
    delta = (g * out.z).minCoeff();
  }
  if (delta < 1.0) {
    throw Error(ErrorCode::kNumericalFailure, "feasibility restoration failed");
  }
  out.min_constraint = delta;
  out.norm = EuclideanNorm(out.z);
  return out;
}

struct AnalyticCenterSolution {
  Vector y;
  double residual = 0.0;          // ||A_B' y||_inf
  double newton_decrement = 0.0;  // at the returned point, in the reduced space
  int iterations = 0;
};

// argmin -sum log y_i over {y > 0 : A_B' y = 0, 1'y = 1}. `interior_hint`,
// when given, seeds the affine parametrization; otherwise a phase-1 LP finds
// a positive point.
inline AnalyticCenterSolution SolveAnalyticCenter(const Matrix& a_b, const SolverConfig& cfg,
                                                  const std::optional<Vector>& interior_hint = {}) {
  cfg.Validate();
  const Eigen::Index k = a_b.rows();
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "analytic center needs |B| >= 1");
  const double scale = FrobeniusNorm(a_b);
  const Matrix a_scaled = scale > kZeroMatrixScale ? Matrix(a_b / scale) : a_b;

  StandardFormProgram prog;
  prog.objective = ObjectiveKind::kLogBarrier;
  prog.c = Vector::Zero(k);
  prog.e.resize(a_b.cols() + 1, k);
  prog.e.topRows(a_b.cols()) = a_scaled.transpose();
  prog.e.row(a_b.cols()).setOnes();
  prog.f = Vector::Zero(a_b.cols() + 1);
  prog.f[a_b.cols()] = 1.0;
  if (interior_hint && interior_hint->size() == k) prog.interior_hint = *interior_hint;

  PrimalPoint pt;
  try {
    pt = ResolveBackend(cfg.solver_id)->Solve(prog, cfg);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInfeasibleProgram) {
      throw Error(ErrorCode::kNoInteriorPoint, err.what());
    }
    throw;
  }
  if (pt.v.size() != k || !pt.v.allFinite() || !(pt.v.minCoeff() > 0.0)) {
    throw Error(ErrorCode::kNoInteriorPoint, "analytic center is not strictly positive");
  }
  AnalyticCenterSolution out;
  out.y = pt.v / pt.v.sum();
  out.iterations = pt.iterations;
  out.residual = MaxAbs(Vector(a_b.transpose() * out.y));
  if (out.residual > 1e-9 * std::max(1.0, scale)) {
    throw Error(ErrorCode::kNumericalFailure, "analytic center violates A_B' y = 0");
  }
  const NullBasis w = OrthonormalNullBasis(prog.e);
  if (w.k > 0) {
    const Eigen::MatrixXd wq = w.q;
    const Vector inv = out.y.cwiseInverse();
    const Vector grad = -wq.transpose() * inv;
    const Eigen::MatrixXd hess = wq.transpose() * inv.cwiseAbs2().asDiagonal() * wq;
    const Vector step = hess.ldlt().solve(-grad);
    out.newton_decrement = std::sqrt(std::max(0.0, -grad.dot(step)));
  }
  if (out.newton_decrement > cfg.opt_tol) {
    throw Error(ErrorCode::kSolverStall, "analytic center not reached to opt_tol");
  }
  return out;
}

struct ConeProjection {
  Vector x;
  Vector multipliers;  // u - x = A' multipliers
  double feasibility = 0.0;  // ||(A x)^+||_inf
  double kkt_residual = 0.0;  // for the unit-norm rescaled problem
};

// Euclidean projection of u onto P = {x : Ax <= 0}.
inline ConeProjection ProjectOntoCone(const ProblemInstance& instance, const Vector& u,
                                      const SolverConfig& cfg = {}) {
  cfg.Validate();
  if (u.size() != instance.n() || !u.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "projection point has wrong size or is not finite");
  }
  const Matrix& a = instance.a();
  ConeProjection out;
  if (PosPartInfNorm(a * u) == 0.0) {
    out.x = u;
    out.multipliers = Vector::Zero(a.rows());
    return out;
  }
  // Projection onto a cone is positively homogeneous: solve for the unit
  // vector w = u / ||u|| so that every tolerance below is scale free.
  const double u_norm = EuclideanNorm(u);
  const Vector w = u / u_norm;
  StandardFormProgram qp;
  qp.objective = ObjectiveKind::kSquaredNorm;
  qp.c = -w;
  qp.g = -a;
  qp.h = Vector::Zero(a.rows());
  const PrimalPoint pt = ResolveBackend(cfg.solver_id)->Solve(qp, cfg);
  if (pt.v.size() != u.size() || !pt.v.allFinite()) {
    throw Error(ErrorCode::kNumericalFailure, "projection returned a malformed point");
  }
  const Vector& xw = pt.v;
  const Vector ax = a * xw;
  Vector lambda;
  if (pt.multipliers.size() == a.rows()) {
    lambda = pt.multipliers;
  } else {
    // Backend gave no multipliers: fit them by NNLS on u - x = A' lambda.
    const auto fit = internal::SolveNnls(Eigen::MatrixXd(a.transpose()), Vector(w - xw),
                                         std::max(cfg.max_iters, 3 * static_cast<int>(a.rows())));
    lambda = fit.x;
  }
  out.feasibility = PosPartInfNorm(ax);
  const double stationarity = MaxAbs(Vector(w - xw - a.transpose() * lambda));
  const double complementarity = MaxAbs(Vector(lambda.cwiseProduct(ax)));
  const double dual_sign = PosPartInfNorm(-lambda);
  out.kkt_residual = std::max({stationarity, complementarity, dual_sign});
  if (out.feasibility > cfg.feas_tol * instance.tolerance_scale()) {
    throw Error(ErrorCode::kSolverStall, "projection is not feasible to tolerance");
  }
  if (out.kkt_residual > cfg.opt_tol) {
    throw Error(ErrorCode::kSolverStall, "projection KKT residual above opt_tol");
  }
  out.x = u_norm * xw;
  out.multipliers = u_norm * lambda;
  out.feasibility *= u_norm;
  return out;
}

}  // namespace hoffman

#endif  // HOFFMAN_CONVEX_SOLVERS_HPP_
