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

#ifndef HOFFMAN_SOLVERS_SIMPLEX_HPP_
#define HOFFMAN_SOLVERS_SIMPLEX_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "Eigen/LU"
#include "hoffman/error.hpp"
#include "hoffman/matrix_core.hpp"
#include "hoffman/solvers/program.hpp"

namespace hoffman::internal {

// Dense two-phase tableau simplex for the kLinear form of StandardFormProgram.
//
// Free variables are split as v = v+ - v-, every G row gets a surplus column,
// and every row gets an artificial column for phase 1. Entering columns are
// chosen by Dantzig's rule until a run of degenerate pivots, after which the
// method switches permanently to Bland's rule so that it terminates. The
// tableau is rebuilt from an LU of the basis matrix every kReinvertEvery
// pivots and before optimality is declared, so roundoff does not accumulate
// across long pivot sequences.
class DenseSimplex {
 public:
  DenseSimplex(const StandardFormProgram& p, const SolverConfig& cfg)
      : program_(p),
        pivot_tol_(std::min(1e-9, cfg.feas_tol)),
        cost_tol_(std::min(1e-9, cfg.opt_tol)),
        phase1_tol_(cfg.feas_tol) {
    Build();
    pivot_budget_ = cfg.max_iters + 20 * (rows_ + structural_);
  }

  PrimalPoint Solve() {
    phase_ = 1;
    RunPhase(/*allow_artificial=*/true);
    if (-tableau_(rows_, rhs_col_) > phase1_tol_ * std::max(1.0, rhs_scale_)) {
      throw Error(ErrorCode::kInfeasibleProgram, "linear program has no feasible point");
    }
    DriveOutArtificials();
    phase_ = 2;
    std::fill(blocked_.begin(), blocked_.end(), false);
    LoadPhase2Costs();
    RunPhase(/*allow_artificial=*/false);
    return Extract();
  }

  int pivots() const { return pivots_; }

 private:
  static constexpr int kReinvertEvery = 40;
  static constexpr double kNoiseCost = 1e-7;

  void Build() {
    const Eigen::Index nv = program_.num_vars();
    plus_col_.assign(nv, -1);
    minus_col_.assign(nv, -1);
    int col = 0;
    for (Eigen::Index j = 0; j < nv; ++j) {
      plus_col_[j] = col++;
      if (!program_.is_nonnegative(j)) minus_col_[j] = col++;
    }
    const int me = static_cast<int>(program_.e.rows());
    const int mg = static_cast<int>(program_.g.rows());
    const int first_surplus = col;
    structural_ = col + mg;
    rows_ = me + mg;
    artificial_ = structural_;
    rhs_col_ = structural_ + rows_;

    constraints_ = Eigen::MatrixXd::Zero(rows_, structural_);
    rhs_ = Vector::Zero(rows_);
    auto fill = [&](int row, const auto& coeffs, double b) {
      for (Eigen::Index j = 0; j < nv; ++j) {
        constraints_(row, plus_col_[j]) = coeffs(j);
        if (minus_col_[j] >= 0) constraints_(row, minus_col_[j]) = -coeffs(j);
      }
      rhs_[row] = b;
    };
    for (int i = 0; i < me; ++i) fill(i, program_.e.row(i), program_.f[i]);
    for (int r = 0; r < mg; ++r) {
      fill(me + r, program_.g.row(r), program_.h[r]);
      constraints_(me + r, first_surplus + r) = -1.0;
    }
    for (int i = 0; i < rows_; ++i) {
      if (rhs_[i] < 0.0) {
        constraints_.row(i) *= -1.0;
        rhs_[i] = -rhs_[i];
      }
    }
    rhs_scale_ = rows_ > 0 ? rhs_.lpNorm<Eigen::Infinity>() : 0.0;

    costs_ = Vector::Zero(structural_);
    for (Eigen::Index j = 0; j < nv; ++j) {
      costs_[plus_col_[j]] = program_.c[j];
      if (minus_col_[j] >= 0) costs_[minus_col_[j]] = -program_.c[j];
    }

    tableau_ = Matrix::Zero(rows_ + 1, rhs_col_ + 1);
    tableau_.block(0, 0, rows_, structural_) = constraints_;
    tableau_.block(0, artificial_, rows_, rows_).setIdentity();
    tableau_.block(0, rhs_col_, rows_, 1) = rhs_;
    basis_.resize(rows_);
    dropped_.assign(rows_, false);
    blocked_.assign(rhs_col_, false);
    for (int i = 0; i < rows_; ++i) basis_[i] = artificial_ + i;
    // Phase-1 reduced costs: minimize the sum of artificials.
    for (int i = 0; i < rows_; ++i) {
      tableau_.row(rows_).head(structural_) -= tableau_.row(i).head(structural_);
      tableau_(rows_, rhs_col_) -= tableau_(i, rhs_col_);
    }
  }

  void Pivot(int row, int col) {
    tableau_.row(row) /= tableau_(row, col);
    for (int i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const double factor = tableau_(i, col);
      if (factor != 0.0) tableau_.row(i) -= factor * tableau_.row(row);
    }
    for (int i = 0; i < rows_; ++i) {
      if (tableau_(i, rhs_col_) < 0.0) tableau_(i, rhs_col_) = 0.0;
    }
    basis_[row] = col;
    std::fill(blocked_.begin(), blocked_.end(), false);
    ++pivots_;
    ++since_reinvert_;
  }

  // Recomputes the tableau rows as B^{-1} [constraints | I] and the cost row
  // from the current phase's costs. Leaves the tableau untouched when the
  // basis matrix is numerically singular.
  void Reinvert() {
    std::vector<int> kept;
    for (int i = 0; i < rows_; ++i) {
      if (!dropped_[i]) kept.push_back(i);
    }
    const int k = static_cast<int>(kept.size());
    since_reinvert_ = 0;
    if (k == 0) return;
    Eigen::MatrixXd full(k, rhs_col_ + 1);
    full.setZero();
    for (int r = 0; r < k; ++r) {
      full.row(r).head(structural_) = constraints_.row(kept[r]);
      full(r, artificial_ + kept[r]) = 1.0;
      full(r, rhs_col_) = rhs_[kept[r]];
    }
    Eigen::MatrixXd basis_matrix(k, k);
    for (int c = 0; c < k; ++c) basis_matrix.col(c) = full.col(basis_[kept[c]]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (!lu.isInvertible()) return;
    const Eigen::MatrixXd rebuilt = lu.solve(full);
    if (!rebuilt.allFinite()) return;
    for (int r = 0; r < k; ++r) {
      tableau_.row(kept[r]).head(rhs_col_ + 1) = rebuilt.row(r);
      if (tableau_(kept[r], rhs_col_) < 0.0) tableau_(kept[r], rhs_col_) = 0.0;
    }
    for (int i = 0; i < rows_; ++i) {
      if (dropped_[i]) tableau_.row(i).head(rhs_col_ + 1).setZero();
    }
    if (phase_ == 1) {
      LoadPhase1Costs();
    } else {
      LoadPhase2Costs();
    }
  }

  void LoadPhase1Costs() {
    tableau_.row(rows_).setZero();
    tableau_.row(rows_).segment(artificial_, rows_).setOnes();
    for (int i = 0; i < rows_; ++i) {
      if (dropped_[i]) continue;
      if (basis_[i] >= artificial_) tableau_.row(rows_) -= tableau_.row(i);
    }
  }

  int ChooseEntering(bool allow_artificial) const {
    const int limit = allow_artificial ? rhs_col_ : structural_;
    int best = -1;
    double best_cost = -cost_tol_;
    for (int j = 0; j < limit; ++j) {
      if (blocked_[j]) continue;
      const double d = tableau_(rows_, j);
      if (bland_) {
        if (d < -cost_tol_) return j;
      } else if (d < best_cost) {
        best_cost = d;
        best = j;
      }
    }
    return best;
  }

  int ChooseLeaving(int col) const {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows_; ++i) {
      if (dropped_[i]) continue;
      const double a = tableau_(i, col);
      if (a <= pivot_tol_) continue;
      const double ratio = tableau_(i, rhs_col_) / a;
      if (best < 0 || ratio < best_ratio - 1e-12 * (1.0 + std::abs(best_ratio))) {
        best = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + 1e-12 * (1.0 + std::abs(best_ratio))) {
        const bool prefer = bland_ ? basis_[i] < basis_[best]
                                   : a > tableau_(best, col);
        if (prefer) {
          best = i;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
    }
    return best;
  }

  void RunPhase(bool allow_artificial) {
    int degenerate_run = 0;
    while (true) {
      if (since_reinvert_ >= kReinvertEvery) Reinvert();
      int enter = ChooseEntering(allow_artificial);
      if (enter < 0 && since_reinvert_ > 0) {
        Reinvert();
        enter = ChooseEntering(allow_artificial);
      }
      if (enter < 0) return;
      const int leave = ChooseLeaving(enter);
      if (leave < 0) {
        // A column with no usable pivot and a reduced cost at roundoff level
        // is noise, not a ray.
        if (tableau_(rows_, enter) > -kNoiseCost) {
          blocked_[enter] = true;
          continue;
        }
        throw Error(ErrorCode::kInfeasibleProgram, "linear program is unbounded");
      }
      if (pivots_ >= pivot_budget_) {
        throw Error(ErrorCode::kSolverStall, "simplex pivot budget exhausted");
      }
      degenerate_run = tableau_(leave, rhs_col_) <= pivot_tol_ ? degenerate_run + 1 : 0;
      if (degenerate_run > 50) bland_ = true;
      Pivot(leave, enter);
    }
  }

  void DriveOutArtificials() {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < artificial_) continue;
      int best = -1;
      double best_abs = pivot_tol_;
      for (int j = 0; j < structural_; ++j) {
        const double a = std::abs(tableau_(i, j));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      if (best >= 0) {
        tableau_(i, rhs_col_) = 0.0;
        Pivot(i, best);
      } else {
        dropped_[i] = true;  // redundant equality
      }
    }
  }

  void LoadPhase2Costs() {
    tableau_.row(rows_).setZero();
    tableau_.row(rows_).head(structural_) = costs_.transpose();
    for (int i = 0; i < rows_; ++i) {
      if (dropped_[i]) continue;
      const double cb = costs_[basis_[i]];
      if (cb != 0.0) tableau_.row(rows_) -= cb * tableau_.row(i);
    }
    // Artificial columns are never allowed to re-enter.
    tableau_.row(rows_).segment(artificial_, rows_).setZero();
  }

  PrimalPoint Extract() const {
    std::vector<int> kept;
    for (int i = 0; i < rows_; ++i) {
      if (!dropped_[i]) kept.push_back(i);
    }
    const int k = static_cast<int>(kept.size());
    Vector basic_values(k);
    for (int r = 0; r < k; ++r) basic_values[r] = tableau_(kept[r], rhs_col_);

    if (k > 0) {
      // The basis matrix lives on the original constraint rows; dropped rows
      // are linear combinations of the kept ones.
      Eigen::MatrixXd basis_matrix(k, k);
      Vector b(k);
      for (int r = 0; r < k; ++r) {
        b[r] = rhs_[kept[r]];
        for (int c = 0; c < k; ++c) {
          basis_matrix(r, c) = constraints_(kept[r], basis_[kept[c]]);
        }
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix);
      if (lu.isInvertible()) {
        const Vector refined = lu.solve(b);
        const double tableau_err = MaxAbs(Vector(basis_matrix * basic_values - b));
        const double refined_err = MaxAbs(Vector(basis_matrix * refined - b));
        if (refined.allFinite() && refined_err <= tableau_err &&
            refined.minCoeff() >= -std::sqrt(pivot_tol_)) {
          basic_values = refined;
        }
      }
    }

    Vector columns = Vector::Zero(structural_);
    for (int r = 0; r < k; ++r) columns[basis_[kept[r]]] = std::max(0.0, basic_values[r]);

    PrimalPoint out;
    out.v.resize(program_.num_vars());
    for (Eigen::Index j = 0; j < program_.num_vars(); ++j) {
      out.v[j] = columns[plus_col_[j]];
      if (minus_col_[j] >= 0) out.v[j] -= columns[minus_col_[j]];
    }
    out.iterations = pivots_;
    out.method = "dense-simplex";
    ComputeResiduals(program_, out);
    return out;
  }

  const StandardFormProgram& program_;
  double pivot_tol_;
  double cost_tol_;
  double phase1_tol_;
  int pivot_budget_ = 0;
  int pivots_ = 0;
  int since_reinvert_ = 0;
  int phase_ = 1;
  bool bland_ = false;

  std::vector<int> plus_col_;
  std::vector<int> minus_col_;
  int structural_ = 0;
  int rows_ = 0;
  int artificial_ = 0;
  int rhs_col_ = 0;
  double rhs_scale_ = 0.0;
  Eigen::MatrixXd constraints_;
  Vector rhs_;
  Vector costs_;
  Matrix tableau_;
  std::vector<int> basis_;
  std::vector<bool> dropped_;
  std::vector<bool> blocked_;  // cleared on every pivot
};

inline PrimalPoint SolveLinearProgram(const StandardFormProgram& p, const SolverConfig& cfg) {
  DenseSimplex simplex(p, cfg);
  return simplex.Solve();
}

}  // namespace hoffman::internal

#endif  // HOFFMAN_SOLVERS_SIMPLEX_HPP_
