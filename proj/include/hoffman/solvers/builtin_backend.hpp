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

#ifndef HOFFMAN_SOLVERS_BUILTIN_BACKEND_HPP_
#define HOFFMAN_SOLVERS_BUILTIN_BACKEND_HPP_

#include <memory>
#include <string>

#include "hoffman/error.hpp"
#include "hoffman/solvers/barrier.hpp"
#include "hoffman/solvers/least_distance.hpp"
#include "hoffman/solvers/program.hpp"
#include "hoffman/solvers/simplex.hpp"

namespace hoffman {

// Reference implementations: dense simplex for kLinear, NNLS-based least
// distance for kSquaredNorm, damped Newton for kLogBarrier.
class BuiltinBackend : public SolverBackend {
 public:
  std::string name() const override { return "builtin"; }

  PrimalPoint Solve(const StandardFormProgram& p, const SolverConfig& cfg) const override {
    p.Validate();
    switch (p.objective) {
      case ObjectiveKind::kLinear:
        return internal::SolveLinearProgram(p, cfg);
      case ObjectiveKind::kSquaredNorm:
        return SolveSquaredNorm(p, cfg);
      case ObjectiveKind::kLogBarrier:
        return SolveLogBarrier(p, cfg);
    }
    throw Error(ErrorCode::kUnsupportedProgram, "unknown objective kind");
  }

 private:
  // 1/2 ||v||^2 + c'v = 1/2 ||v + c||^2 - const, so w = v + c solves the
  // least-distance problem G w >= h + G c. Sign bounds become extra G rows.
  static PrimalPoint SolveSquaredNorm(const StandardFormProgram& p, const SolverConfig& cfg) {
    if (p.e.rows() > 0) {
      throw Error(ErrorCode::kUnsupportedProgram,
                  "builtin squared-norm solver takes inequality constraints only");
    }
    const Eigen::Index nv = p.num_vars();
    Eigen::Index extra = 0;
    for (Eigen::Index j = 0; j < nv; ++j) extra += p.is_nonnegative(j) ? 1 : 0;
    Matrix g(p.g.rows() + extra, nv);
    Vector h(p.g.rows() + extra);
    if (p.g.rows() > 0) {
      g.topRows(p.g.rows()) = p.g;
      h.head(p.g.rows()) = p.h;
    }
    Eigen::Index row = p.g.rows();
    for (Eigen::Index j = 0; j < nv; ++j) {
      if (!p.is_nonnegative(j)) continue;
      g.row(row).setZero();
      g(row, j) = 1.0;
      h[row] = 0.0;
      ++row;
    }
    const Vector shifted_h = g.rows() > 0 ? Vector(h + g * p.c) : h;
    const auto ld = internal::SolveLeastDistance(g, shifted_h, cfg.max_iters);
    PrimalPoint out;
    out.v = ld.x - p.c;
    out.multipliers = ld.multipliers.head(p.g.rows());
    out.iterations = ld.iterations;
    out.method = "nnls-least-distance";
    ComputeResiduals(p, out);
    return out;
  }

  static PrimalPoint SolveLogBarrier(const StandardFormProgram& p, const SolverConfig& cfg) {
    if (p.g.rows() > 0) {
      throw Error(ErrorCode::kUnsupportedProgram,
                  "builtin log-barrier solver takes equality constraints only");
    }
    const auto outcome = internal::MinimizeLogBarrier(p, cfg);
    PrimalPoint out;
    out.v = outcome.v;
    out.iterations = outcome.iterations;
    out.method = "damped-newton";
    ComputeResiduals(p, out);
    return out;
  }
};

// Backend for cfg.solver_id; the builtin one is installed lazily.
inline std::shared_ptr<const SolverBackend> ResolveBackend(SolverId id) {
  auto& registry = SolverRegistry::Global();
  if (auto found = registry.Find(id)) return found;
  if (id == SolverId::kBuiltin) {
    auto builtin = std::make_shared<const BuiltinBackend>();
    registry.Register(SolverId::kBuiltin, builtin);
    return builtin;
  }
  throw Error(ErrorCode::kUnknownSolver,
              "no solver registered under '" + std::string(SolverIdName(id)) + "'");
}

}  // namespace hoffman

#endif  // HOFFMAN_SOLVERS_BUILTIN_BACKEND_HPP_
