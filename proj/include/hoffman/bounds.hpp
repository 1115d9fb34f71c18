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

#ifndef HOFFMAN_BOUNDS_HPP_
#define HOFFMAN_BOUNDS_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hoffman/convex_solvers.hpp"
#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"
#include "hoffman/numerics.hpp"
#include "hoffman/partition.hpp"

namespace hoffman {

// Bound on H0(A_N) from any x with A_N x >= 1: H0(A_N) <= ||x||_2.
struct CaseNBound {
  Vector x_bar;
  double value = 0.0;
  double feasibility_margin = 0.0;  // min_i (A_N x_bar)_i - 1
  double restoration_factor = 1.0;
};

// Bound on H0(A_B) from a positive y with 1'y = 1, A_B'y = 0:
// H0(A_B) <= 2 / sigma_min^+(A_B' diag(y)). A_B = 0 gives 0 by convention
// and leaves sigma unset.
struct CaseBBound {
  Vector y_bar;
  std::optional<double> sigma;
  double value = 0.0;
  double dual_residual = 0.0;  // ||A_B' y_bar||_inf
  double newton_decrement = 0.0;
};

// Bound on the stitching constant of L = null(A_B) and K = {A_N x <= 0}:
// with Q an orthonormal basis of L, D the row normalizer of A_N and
// M = D A_N Q, any z with M z >= 1 gives H(L, K) <= 1 + 2 ||z||_2.
struct StitchData {
  NullBasis basis;
  RowScaling scaling;
  Matrix m;
  Vector z_bar;
  double value = 1.0;
  double restoration_factor = 1.0;
};

enum class Branch { kZeroMatrix, kLinealityOnly, kPointedOnly, kGeneral };

constexpr std::string_view BranchName(Branch b) {
  switch (b) {
    case Branch::kZeroMatrix: return "zero-matrix";
    case Branch::kLinealityOnly: return "N-empty";
    case Branch::kPointedOnly: return "B-empty";
    case Branch::kGeneral: return "general";
  }
  return "unknown";
}

struct BoundDiagnostics {
  double rank_tol = kDefaultRankTol;
  double partition_min_t = kPartitionMinT;
  std::vector<std::pair<std::string, double>> timings_ms;
};

struct BoundReport {
  Branch branch = Branch::kZeroMatrix;
  std::optional<PartitionCertificate> partition;
  std::optional<CaseNBound> case_n;
  std::optional<CaseBBound> case_b;
  std::optional<StitchData> stitch;
  double total = 0.0;
  BoundDiagnostics diagnostics;
};

inline CaseNBound BoundCaseN(const Matrix& a_n, const SolverConfig& cfg) {
  if (a_n.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "case N needs |N| >= 1");
  const MinNormQpSolution qp = SolveMinNormQp(a_n, cfg);
  CaseNBound out;
  out.x_bar = qp.z;
  out.value = EuclideanNorm(qp.z);
  out.feasibility_margin = (a_n * qp.z).minCoeff() - 1.0;
  out.restoration_factor = qp.restoration_factor;
  return out;
}

inline CaseBBound BoundCaseB(const Matrix& a_b, const SolverConfig& cfg,
                             const std::optional<Vector>& interior_hint = {},
                             double rank_tol = kDefaultRankTol) {
  if (a_b.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "case B needs |B| >= 1");
  CaseBBound out;
  if (FrobeniusNorm(a_b) <= kZeroMatrixScale) {
    out.y_bar = Vector::Constant(a_b.rows(), 1.0 / static_cast<double>(a_b.rows()));
    return out;
  }
  const AnalyticCenterSolution center = SolveAnalyticCenter(a_b, cfg, interior_hint);
  out.y_bar = center.y;
  out.dual_residual = center.residual;
  out.newton_decrement = center.newton_decrement;
  // A_B' diag(y): column i of A_B' scaled by y_i.
  const Matrix scaled = a_b.transpose() * center.y.asDiagonal();
  out.sigma = SmallestPositiveSingularValue(scaled, rank_tol);
  out.value = out.sigma ? 2.0 / *out.sigma : 0.0;
  return out;
}

// Stitching bound for a caller-supplied orthonormal basis of null(A_B).
inline StitchData BoundStitchWithBasis(const Matrix& a_n, NullBasis basis,
                                       const SolverConfig& cfg) {
  if (a_n.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "stitch needs |N| >= 1");
  if (basis.k == 0) {
    throw Error(ErrorCode::kInfeasibleQP, "L = {0} cannot meet the interior of K");
  }
  StitchData out;
  out.scaling = RowNormalize(a_n);
  out.m = out.scaling.normalized_rows * basis.q;
  out.basis = std::move(basis);
  const MinNormQpSolution qp = SolveMinNormQp(out.m, cfg);
  out.z_bar = qp.z;
  out.restoration_factor = qp.restoration_factor;
  out.value = 1.0 + 2.0 * EuclideanNorm(qp.z);
  return out;
}

inline StitchData BoundStitch(const Matrix& a_b, const Matrix& a_n, const SolverConfig& cfg,
                              double rank_tol = kDefaultRankTol) {
  if (a_b.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "stitch needs |B| >= 1");
  return BoundStitchWithBasis(a_n, OrthonormalNullBasis(a_b, rank_tol), cfg);
}

namespace internal {

class StageTimer {
 public:
  explicit StageTimer(BoundDiagnostics& diag) : diag_(diag) {}

  template <typename Fn>
  auto Run(const char* stage, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    diag_.timings_ms.emplace_back(stage, elapsed.count());
    return result;
  }

 private:
  BoundDiagnostics& diag_;
};

// Independent re-check of the certificates behind a report. Any failure means
// the number must not be published.
inline void AuditReport(const ProblemInstance& instance, const BoundReport& r) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kCertificateFailure, what);
  };
  if (!r.partition) fail("missing partition");
  const auto diag = VerifyPartition(instance, *r.partition, kCertificateTol);
  if (!diag.passed) fail("partition: " + diag.failures.front());
  const Matrix a_b = SelectRows(instance.a(), r.partition->b);
  const Matrix a_n = SelectRows(instance.a(), r.partition->n);
  if (r.case_n && (a_n * r.case_n->x_bar).minCoeff() < 1.0) fail("A_N x_bar >= 1 violated");
  if (r.case_b && r.case_b->sigma) {
    const Vector& y = r.case_b->y_bar;
    if (!(y.minCoeff() > 0.0)) fail("y_bar not positive");
    if (MaxAbs(Vector(a_b.transpose() * y)) > 1e-9 * std::max(1.0, FrobeniusNorm(a_b))) {
      fail("A_B' y_bar = 0 violated");
    }
  }
  if (r.stitch) {
    if ((r.stitch->m * r.stitch->z_bar).minCoeff() < 1.0) fail("M z_bar >= 1 violated");
    if (r.stitch->value < 1.0) fail("stitch value below 1");
  }
  if (!(r.total >= 0.0) || !std::isfinite(r.total)) fail("total is not a finite nonnegative number");
}

}  // namespace internal

// Upper bound on H0(A):
//   A = 0      -> 0
//   N empty    -> case-B bound
//   B empty    -> case-N bound
//   otherwise  -> stitch * max(case N, case B)
// Throws rather than return a number whose certificates do not check out.
inline BoundReport BoundH0(const ProblemInstance& instance, const SolverConfig& cfg = {},
                           double rank_tol = kDefaultRankTol) {
  cfg.Validate();
  BoundReport report;
  report.diagnostics.rank_tol = rank_tol;
  if (instance.is_zero()) {
    report.branch = Branch::kZeroMatrix;
    report.total = 0.0;
    return report;
  }
  internal::StageTimer timer(report.diagnostics);
  report.partition = timer.Run("partition", [&] { return ComputePartition(instance, cfg); });
  const PartitionCertificate& cert = *report.partition;
  const Matrix a_b = SelectRows(instance.a(), cert.b);
  const Matrix a_n = SelectRows(instance.a(), cert.n);

  if (!cert.n.empty()) {
    report.case_n = timer.Run("case_n", [&] { return BoundCaseN(a_n, cfg); });
  }
  if (!cert.b.empty()) {
    report.case_b = timer.Run("case_b", [&] {
      return BoundCaseB(a_b, cfg, std::optional<Vector>(cert.y_hat), rank_tol);
    });
  }
  if (cert.n.empty()) {
    report.branch = Branch::kLinealityOnly;
    report.total = report.case_b->value;
  } else if (cert.b.empty()) {
    report.branch = Branch::kPointedOnly;
    report.total = report.case_n->value;
  } else {
    report.branch = Branch::kGeneral;
    report.stitch = timer.Run("stitch", [&] { return BoundStitch(a_b, a_n, cfg, rank_tol); });
    report.total = report.stitch->value * std::max(report.case_n->value, report.case_b->value);
  }
  internal::AuditReport(instance, report);
  return report;
}

}  // namespace hoffman

#endif  // HOFFMAN_BOUNDS_HPP_
