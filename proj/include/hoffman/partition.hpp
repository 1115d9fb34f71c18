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

#ifndef HOFFMAN_PARTITION_HPP_
#define HOFFMAN_PARTITION_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hoffman/convex_solvers.hpp"
#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"
#include "hoffman/numerics.hpp"
#include "hoffman/solvers/barrier.hpp"

namespace hoffman {

// Tolerance used when a freshly computed certificate is checked.
inline constexpr double kCertificateTol = 1e-8;

// The canonical split of the rows of A: B holds the rows that are tight on
// all of P (A_B' y_B = 0 for some y_B > 0), N the rows that admit strict
// slack (A_B x = 0, A_N x < 0 for some x).
struct PartitionCertificate {
  IndexSet b;
  IndexSet n;
  Vector x_hat;  // ||x_hat||_2 = 1 when N is nonempty
  Vector y_hat;  // indexed like b, 1'y_hat = 1
  double residual_b_eq = 0.0;    // ||A_B x_hat||_inf
  double residual_b_dual = 0.0;  // ||A_B' y_hat||_inf
  double min_slack_n = 0.0;      // min_{i in N} -(A x_hat)_i
  double min_y_hat = 0.0;
  // LP provenance.
  double lp_t = 0.0;
  double max_support_overlap = 0.0;  // max_i min(y_i, s_i)
  int lp_iterations = 0;
  bool retried = false;
};

struct PartitionDiagnostics {
  bool passed = false;
  double residual_b_eq = 0.0;
  double residual_b_dual = 0.0;
  double min_slack_n = 0.0;
  double min_y_hat = 0.0;
  double y_hat_sum_error = 0.0;
  std::vector<std::string> failures;
};

// Recomputes every certificate quantity from A and the witnesses alone.
inline PartitionDiagnostics VerifyPartition(const ProblemInstance& instance,
                                            const PartitionCertificate& cert, double tol) {
  PartitionDiagnostics d;
  const int m = instance.m();
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  bool indices_ok = true;
  for (const IndexSet* set : {&cert.b, &cert.n}) {
    for (int i : *set) {
      if (i < 0 || i >= m) {
        indices_ok = false;
      } else {
        ++seen[static_cast<std::size_t>(i)];
      }
    }
  }
  if (!indices_ok) d.failures.push_back("index out of range");
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    d.failures.push_back("B and N do not partition the rows");
  }
  if (cert.x_hat.size() != instance.n()) d.failures.push_back("x_hat has wrong length");
  if (cert.y_hat.size() != static_cast<Eigen::Index>(cert.b.size())) {
    d.failures.push_back("y_hat has wrong length");
  }
  if (!d.failures.empty()) return d;

  const Matrix a_b = SelectRows(instance.a(), cert.b);
  const Matrix a_n = SelectRows(instance.a(), cert.n);
  const double scale = instance.tolerance_scale();
  if (!cert.b.empty()) {
    d.residual_b_eq = MaxAbs(Vector(a_b * cert.x_hat));
    d.residual_b_dual = MaxAbs(Vector(a_b.transpose() * cert.y_hat));
    d.min_y_hat = cert.y_hat.minCoeff();
    d.y_hat_sum_error = std::abs(cert.y_hat.sum() - 1.0);
    if (d.residual_b_eq > tol * scale * EuclideanNorm(cert.x_hat)) {
      d.failures.push_back("A_B x_hat != 0");
    }
    if (d.residual_b_dual > tol * scale) d.failures.push_back("A_B' y_hat != 0");
    if (!(d.min_y_hat > 0.0)) d.failures.push_back("y_hat not strictly positive");
    if (d.y_hat_sum_error > tol * static_cast<double>(cert.b.size())) {
      d.failures.push_back("1'y_hat != 1");
    }
  }
  if (!cert.n.empty()) {
    d.min_slack_n = (-(a_n * cert.x_hat)).minCoeff();
    if (!(d.min_slack_n > 0.0)) d.failures.push_back("A_N x_hat not strictly negative");
  }
  d.passed = d.failures.empty();
  return d;
}

namespace internal {

inline PartitionCertificate ExtractPartition(const ProblemInstance& instance,
                                             const SolverConfig& cfg) {
  const PartitionLPSolution lp = SolvePartitionLp(instance, cfg);
  const int m = instance.m();
  const double threshold = 0.5 * lp.t;

  PartitionCertificate cert;
  cert.lp_t = lp.t;
  cert.lp_iterations = lp.iterations;
  for (int i = 0; i < m; ++i) {
    const bool in_b = lp.y[i] >= threshold;
    const bool in_n = lp.s[i] >= threshold;
    if (in_b == in_n) {
      throw Error(ErrorCode::kAmbiguousIndex,
                  "row " + std::to_string(i) + " has y = " + std::to_string(lp.y[i]) +
                      ", s = " + std::to_string(lp.s[i]) + " at t = " + std::to_string(lp.t));
    }
    (in_b ? cert.b : cert.n).push_back(i);
    cert.max_support_overlap = std::max(cert.max_support_overlap, std::min(lp.y[i], lp.s[i]));
  }

  const Matrix a_b = SelectRows(instance.a(), cert.b);
  const Matrix a_n = SelectRows(instance.a(), cert.n);

  // x_hat: the LP's x, cleaned onto L = null(A_B) when that keeps A_N x < 0.
  Vector x = lp.x;
  if (!cert.b.empty() && !cert.n.empty()) {
    const NullBasis l = OrthonormalNullBasis(a_b);
    const Vector projected = l.q * (l.q.transpose() * x);
    if ((a_n * projected).maxCoeff() < 0.0) x = projected;
  }
  const double x_norm = EuclideanNorm(x);
  if (cert.n.empty()) {
    cert.x_hat = Vector::Zero(instance.n());
  } else {
    cert.x_hat = x / x_norm;
  }

  // y_hat: y on B, corrected onto {A_B' y = 0, 1'y = 1} when that keeps it
  // positive.
  if (!cert.b.empty()) {
    Vector y = SelectEntries(lp.y, cert.b);
    y /= y.sum();
    const double ab_scale = FrobeniusNorm(a_b);
    Matrix c(instance.n() + 1, static_cast<Eigen::Index>(cert.b.size()));
    c.topRows(instance.n()) =
        ab_scale > kZeroMatrixScale ? Matrix(a_b.transpose() / ab_scale) : Matrix(a_b.transpose());
    c.row(instance.n()).setOnes();
    Vector rhs = Vector::Zero(instance.n() + 1);
    rhs[instance.n()] = 1.0;
    const Vector corrected = ProjectOntoAffine(c, rhs, y);
    if (corrected.allFinite() && corrected.minCoeff() > 0.0 &&
        MaxAbs(Vector(a_b.transpose() * corrected)) <= MaxAbs(Vector(a_b.transpose() * y))) {
      y = corrected / corrected.sum();
    }
    cert.y_hat = y;
  }

  const auto diag = VerifyPartition(instance, cert, kCertificateTol);
  cert.residual_b_eq = diag.residual_b_eq;
  cert.residual_b_dual = diag.residual_b_dual;
  cert.min_slack_n = diag.min_slack_n;
  cert.min_y_hat = diag.min_y_hat;
  if (!diag.passed) {
    throw Error(ErrorCode::kAmbiguousIndex, "partition certificate rejected: " + diag.failures.front());
  }
  return cert;
}

}  // namespace internal

// Canonical partition from one solve of the partition LP, classifying row i
// into B iff y_i >= t/2 and into N iff s_i >= t/2. On an ambiguous row the
// solve is repeated once with feas_tol tightened 100x.
inline PartitionCertificate ComputePartition(const ProblemInstance& instance,
                                             const SolverConfig& cfg) {
  cfg.Validate();
  if (instance.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "partition requires A != 0");
  }
  try {
    return internal::ExtractPartition(instance, cfg);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kAmbiguousIndex) throw;
  }
  SolverConfig tight = cfg;
  tight.feas_tol = cfg.feas_tol / 100.0;
  PartitionCertificate cert = internal::ExtractPartition(instance, tight);
  cert.retried = true;
  return cert;
}

}  // namespace hoffman

#endif  // HOFFMAN_PARTITION_HPP_
