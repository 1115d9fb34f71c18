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

#ifndef HOFFMAN_SOLVERS_PROGRAM_HPP_
#define HOFFMAN_SOLVERS_PROGRAM_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"

namespace hoffman {

enum class SolverId { kBuiltin, kExternalPlugin };

constexpr std::string_view SolverIdName(SolverId id) {
  return id == SolverId::kBuiltin ? "builtin" : "external-plugin";
}

struct SolverConfig {
  double feas_tol = 1e-9;
  double opt_tol = 1e-8;
  int max_iters = 500;
  SolverId solver_id = SolverId::kBuiltin;

  void Validate() const {
    if (!(feas_tol > 0.0 && feas_tol < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "feas_tol must lie in (0, 1)");
    }
    if (!(opt_tol > 0.0 && opt_tol < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "opt_tol must lie in (0, 1)");
    }
    if (max_iters < 1) {
      throw Error(ErrorCode::kInvalidArgument, "max_iters must be at least 1");
    }
  }
};

enum class ObjectiveKind {
  kLinear,       // min c'v
  kSquaredNorm,  // min 1/2 ||v||^2 + c'v
  kLogBarrier,   // min -sum_i log v_i   (v > 0 implicit)
};

// min objective(v)  s.t.  E v = f,  G v >= h,  v_j >= 0 for flagged j.
// Variables without a flag are free.
struct StandardFormProgram {
  ObjectiveKind objective = ObjectiveKind::kLinear;
  Vector c;
  Matrix e;
  Vector f;
  Matrix g;
  Vector h;
  std::vector<bool> nonnegative;
  // Optional strictly positive starting point for kLogBarrier.
  std::optional<Vector> interior_hint;

  Eigen::Index num_vars() const { return c.size(); }

  void Validate() const {
    const Eigen::Index nv = num_vars();
    if (e.rows() > 0 && e.cols() != nv) {
      throw Error(ErrorCode::kInvalidArgument, "equality block has wrong width");
    }
    if (g.rows() > 0 && g.cols() != nv) {
      throw Error(ErrorCode::kInvalidArgument, "inequality block has wrong width");
    }
    if (e.rows() != f.size() || g.rows() != h.size()) {
      throw Error(ErrorCode::kInvalidArgument, "right-hand side size mismatch");
    }
    if (!nonnegative.empty() && static_cast<Eigen::Index>(nonnegative.size()) != nv) {
      throw Error(ErrorCode::kInvalidArgument, "nonnegativity mask size mismatch");
    }
  }

  bool is_nonnegative(Eigen::Index j) const {
    return !nonnegative.empty() && nonnegative[static_cast<std::size_t>(j)];
  }
};

// Primal point returned by a backend. Residuals are measured against the
// program as posed: eq_residual = ||Ev - f||_inf, ineq_residual =
// max(0, max(h - Gv), max over flagged j of -v_j).
struct PrimalPoint {
  Vector v;
  Vector multipliers;  // for the G rows, when the method produces them
  double eq_residual = 0.0;
  double ineq_residual = 0.0;
  int iterations = 0;
  std::string method;
};

inline void ComputeResiduals(const StandardFormProgram& p, PrimalPoint& pt) {
  pt.eq_residual = p.e.rows() > 0 ? MaxAbs(Vector(p.e * pt.v - p.f)) : 0.0;
  double worst = 0.0;
  if (p.g.rows() > 0) worst = std::max(worst, PosPartInfNorm(p.h - p.g * pt.v));
  for (Eigen::Index j = 0; j < pt.v.size(); ++j) {
    if (p.is_nonnegative(j)) worst = std::max(worst, -pt.v[j]);
  }
  pt.ineq_residual = worst;
}

class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual std::string name() const = 0;
  virtual PrimalPoint Solve(const StandardFormProgram& program,
                            const SolverConfig& cfg) const = 0;
};

// Process-wide table of backends keyed by SolverId. The builtin entry is
// installed on first use (see solvers/builtin_backend.hpp).
class SolverRegistry {
 public:
  static SolverRegistry& Global() {
    static SolverRegistry registry;
    return registry;
  }

  void Register(SolverId id, std::shared_ptr<const SolverBackend> backend) {
    std::lock_guard<std::mutex> lock(mu_);
    backends_[id] = std::move(backend);
  }

  void Unregister(SolverId id) {
    std::lock_guard<std::mutex> lock(mu_);
    backends_.erase(id);
  }

  std::shared_ptr<const SolverBackend> Find(SolverId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = backends_.find(id);
    return it == backends_.end() ? nullptr : it->second;
  }

 private:
  mutable std::mutex mu_;
  std::map<SolverId, std::shared_ptr<const SolverBackend>> backends_;
};

}  // namespace hoffman

#endif  // HOFFMAN_SOLVERS_PROGRAM_HPP_
