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

#ifndef HOFFMAN_ORACLE_HPP_
#define HOFFMAN_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "hoffman/convex_solvers.hpp"
#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"

namespace hoffman {

// dist_2(u, P) / ||(Au)^+||_inf, or 0 when u is (numerically) in P.
inline double RatioAt(const ProblemInstance& instance, const Vector& u,
                      const SolverConfig& cfg = {}) {
  if (u.size() != instance.n() || !u.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "sample has wrong size or is not finite");
  }
  const double violation = PosPartInfNorm(instance.a() * u);
  if (violation <= 1e-12 * instance.tolerance_scale() * EuclideanNorm(u)) return 0.0;
  const ConeProjection proj = ProjectOntoCone(instance, u, cfg);
  return EuclideanNorm(u - proj.x) / violation;
}

struct OracleOptions {
  int threads = 1;
  // Extra deterministic directions, e.g. x_hat from a partition certificate.
  // Both signs are sampled.
  std::vector<Vector> hints;
  // Pairwise sums of normalized rows are added when m is at most this.
  int max_rows_for_pairs = 64;
  SolverConfig solver;
};

struct OracleResult {
  double lower_bound = 0.0;
  Vector best_u;
  std::int64_t best_index = -1;
  std::int64_t samples_used = 0;
  std::int64_t directed_samples = 0;
  std::int64_t skipped = 0;  // samples whose projection failed
  std::uint64_t seed = 0;
};

namespace internal {

inline std::uint64_t SplitMix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Gaussian sample number `index` of stream `seed`; depends on nothing else,
// so samples can be drawn in any order or on any thread.
inline Vector GaussianSample(std::uint64_t seed, std::uint64_t index, int n) {
  std::mt19937_64 engine(SplitMix64(seed ^ SplitMix64(index)));
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector u(n);
  for (int j = 0; j < n; ++j) u[j] = normal(engine);
  return u;
}

// Directions that tend to sit near the supremum: each row (with sign) of the
// row-normalized A, the sum of all normalized rows, pairwise sums, and the
// caller's hints with both signs.
inline std::vector<Vector> DirectedSamples(const ProblemInstance& instance,
                                           const OracleOptions& opts) {
  std::vector<Vector> rows;
  for (int i = 0; i < instance.m(); ++i) {
    const Vector r = instance.a().row(i).transpose();
    const double norm = EuclideanNorm(r);
    if (norm > kZeroMatrixScale) rows.push_back(r / norm);
  }
  std::vector<Vector> out;
  for (const Vector& r : rows) {
    out.push_back(r);
    out.push_back(-r);
  }
  if (!rows.empty()) {
    Vector sum = Vector::Zero(instance.n());
    for (const Vector& r : rows) sum += r;
    out.push_back(sum);
  }
  if (static_cast<int>(rows.size()) <= opts.max_rows_for_pairs) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) out.push_back(rows[i] + rows[j]);
    }
  }
  for (const Vector& h : opts.hints) {
    if (h.size() != instance.n() || EuclideanNorm(h) <= kZeroMatrixScale) continue;
    out.push_back(h);
    out.push_back(-h);
  }
  return out;
}

}  // namespace internal

// Lower bound on H0(A) as the largest sampled ratio. Directed samples come
// first, then num_samples Gaussian draws; ties go to the lowest sample index,
// so the result does not depend on opts.threads.
inline OracleResult LowerBoundMonteCarlo(const ProblemInstance& instance, int num_samples,
                                         std::uint64_t seed, const OracleOptions& opts = {}) {
  if (num_samples < 1) throw Error(ErrorCode::kInvalidArgument, "num_samples must be >= 1");
  const std::vector<Vector> directed = internal::DirectedSamples(instance, opts);
  const std::int64_t num_directed = static_cast<std::int64_t>(directed.size());
  const std::int64_t total = num_directed + num_samples;

  auto sample = [&](std::int64_t idx) {
    return idx < num_directed
               ? directed[static_cast<std::size_t>(idx)]
               : internal::GaussianSample(seed, static_cast<std::uint64_t>(idx - num_directed),
                                          instance.n());
  };

  std::vector<double> ratios(static_cast<std::size_t>(total), 0.0);
  std::vector<char> failed(static_cast<std::size_t>(total), 0);
  auto work = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t idx = begin; idx < end; ++idx) {
      try {
        ratios[idx] = RatioAt(instance, sample(idx), opts.solver);
      } catch (const Error&) {
        failed[idx] = 1;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(total)));
  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::int64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t begin = t * chunk;
      const std::int64_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  OracleResult out;
  out.seed = seed;
  out.directed_samples = num_directed;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (failed[idx]) {
      ++out.skipped;
      continue;
    }
    ++out.samples_used;
    if (out.best_index < 0 || ratios[idx] > out.lower_bound) {
      out.lower_bound = ratios[idx];
      out.best_index = idx;
    }
  }
  out.best_u = out.best_index >= 0 ? sample(out.best_index) : Vector::Zero(instance.n());
  return out;
}

// Exact H0 for a few recognized families: A = 0, a single nonzero row a
// (1 / ||a||_2), and A = -diag(d) with d > 0 (sqrt(sum 1/d_i^2), which is
// sqrt(n) for A = -I).
inline std::optional<double> ClosedFormH0(const ProblemInstance& instance) {
  const Matrix& a = instance.a();
  if (instance.is_zero()) return 0.0;
  int nonzero_rows = 0;
  Eigen::Index last = -1;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (a.row(i).cwiseAbs().maxCoeff() > 0.0) {
      ++nonzero_rows;
      last = i;
    }
  }
  if (nonzero_rows == 1) return 1.0 / EuclideanNorm(a.row(last).transpose());
  if (a.rows() == a.cols()) {
    const Vector d = -a.diagonal();
    const Matrix off = a - Matrix(a.diagonal().asDiagonal());
    if (d.minCoeff() > 0.0 && MaxAbs(off) == 0.0) {
      return EuclideanNorm(d.cwiseInverse());
    }
  }
  return std::nullopt;
}

}  // namespace hoffman

#endif  // HOFFMAN_ORACLE_HPP_
