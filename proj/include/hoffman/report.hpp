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

#ifndef HOFFMAN_REPORT_HPP_
#define HOFFMAN_REPORT_HPP_

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hoffman/bounds.hpp"
#include "hoffman/matrix_core.hpp"
#include "hoffman/oracle.hpp"
#include "json.hpp"

namespace hoffman {

inline constexpr const char* kToolName = "hoffman";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "hoffman-report/1";

namespace internal {

inline nlohmann::json ToJson(const Vector& v) {
  return nlohmann::json(std::vector<double>(v.data(), v.data() + v.size()));
}

inline nlohmann::json ToJson(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(ToJson(Vector(m.row(i).transpose())));
  return rows;
}

}  // namespace internal

// Machine-readable report; the layout is described by
// schema/report.schema.json. Indices are 0-based.
inline nlohmann::json ReportToJson(const ProblemInstance& instance, const BoundReport& r,
                                   const std::optional<OracleResult>& oracle,
                                   const SolverConfig& cfg) {
  using nlohmann::json;
  using internal::ToJson;
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["input"] = {{"m", instance.m()}, {"n", instance.n()},
                {"frobenius_norm", instance.frobenius_scale()}};
  j["branch"] = std::string(BranchName(r.branch));

  if (r.partition) {
    const auto& p = *r.partition;
    j["partition"] = {
        {"B", p.b},
        {"N", p.n},
        {"x_hat", ToJson(p.x_hat)},
        {"y_hat", ToJson(p.y_hat)},
        {"residuals",
         {{"B_eq", p.residual_b_eq},
          {"B_dual", p.residual_b_dual},
          {"min_slack_N", p.min_slack_n},
          {"min_y_hat", p.min_y_hat},
          {"lp_t", p.lp_t},
          {"support_overlap", p.max_support_overlap}}},
    };
  } else {
    j["partition"] = nullptr;
  }

  json bounds;
  if (r.case_n) {
    bounds["case_N"] = {{"value", r.case_n->value},
                        {"x_bar", ToJson(r.case_n->x_bar)},
                        {"feasibility_margin", r.case_n->feasibility_margin},
                        {"restoration_factor", r.case_n->restoration_factor}};
  } else {
    bounds["case_N"] = nullptr;
  }
  if (r.case_b) {
    bounds["case_B"] = {{"value", r.case_b->value},
                        {"y_bar", ToJson(r.case_b->y_bar)},
                        {"sigma", r.case_b->sigma ? json(*r.case_b->sigma) : json(nullptr)},
                        {"dual_residual", r.case_b->dual_residual},
                        {"newton_decrement", r.case_b->newton_decrement}};
  } else {
    bounds["case_B"] = nullptr;
  }
  if (r.stitch) {
    bounds["stitch"] = {{"value", r.stitch->value},
                        {"z_bar", ToJson(r.stitch->z_bar)},
                        {"Q", ToJson(r.stitch->basis.q)},
                        {"D", ToJson(r.stitch->scaling.scales)},
                        {"null_basis_residual", r.stitch->basis.residual},
                        {"restoration_factor", r.stitch->restoration_factor}};
  } else {
    bounds["stitch"] = nullptr;
  }
  bounds["total"] = r.total;
  j["bounds"] = bounds;

  if (oracle) {
    j["oracle"] = {{"lower_bound", oracle->lower_bound},
                   {"best_u", ToJson(oracle->best_u)},
                   {"seed", oracle->seed},
                   {"samples_used", oracle->samples_used},
                   {"directed_samples", oracle->directed_samples},
                   {"skipped", oracle->skipped}};
  } else {
    j["oracle"] = nullptr;
  }

  json timings = json::object();
  for (const auto& [stage, ms] : r.diagnostics.timings_ms) timings[stage] = ms;
  j["diagnostics"] = {{"rank_tol", r.diagnostics.rank_tol},
                      {"partition_min_t", r.diagnostics.partition_min_t},
                      {"feas_tol", cfg.feas_tol},
                      {"opt_tol", cfg.opt_tol},
                      {"max_iters", cfg.max_iters},
                      {"solver", std::string(SolverIdName(cfg.solver_id))},
                      {"partition_retried", r.partition ? r.partition->retried : false},
                      {"timings_ms", timings}};
  return j;
}

namespace internal {

inline std::string FormatIndices(const IndexSet& idx) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? ", " : "") << idx[k];
  out << '}';
  return out.str();
}

}  // namespace internal

inline void WriteTextReport(std::ostream& out, const ProblemInstance& instance,
                            const BoundReport& r, const std::optional<OracleResult>& oracle) {
  out << std::setprecision(10);
  out << "A: " << instance.m() << " x " << instance.n()
      << ", ||A||_F = " << instance.frobenius_scale() << '\n';
  out << "branch: " << BranchName(r.branch) << '\n';
  if (r.partition) {
    out << "partition (0-based): B = " << internal::FormatIndices(r.partition->b)
        << ", N = " << internal::FormatIndices(r.partition->n) << '\n';
  }
  if (r.case_n) out << "H0(A_N) <= ||x_bar||_2            = " << r.case_n->value << '\n';
  if (r.case_b) {
    out << "H0(A_B) <= 2 / sigma_min^+(A_B'Y)  = " << r.case_b->value;
    if (r.case_b->sigma) out << "   (sigma = " << *r.case_b->sigma << ')';
    out << '\n';
  }
  if (r.stitch) out << "H(L,K)  <= 1 + 2 ||z_bar||_2       = " << r.stitch->value << '\n';
  switch (r.branch) {
    case Branch::kZeroMatrix:
      out << "H0(A) = 0 (A = 0)\n";
      break;
    case Branch::kLinealityOnly:
      out << "H0(A) <= H0(A_B) bound = " << r.total << '\n';
      break;
    case Branch::kPointedOnly:
      out << "H0(A) <= H0(A_N) bound = " << r.total << '\n';
      break;
    case Branch::kGeneral:
      out << "H0(A) <= H(L,K) * max(H0(A_N), H0(A_B)) = " << r.stitch->value << " * max("
          << r.case_n->value << ", " << r.case_b->value << ") = " << r.total << '\n';
      break;
  }
  if (oracle) {
    out << "sampled lower bound = " << oracle->lower_bound << " (" << oracle->samples_used
        << " samples, seed " << oracle->seed << ")\n";
  }
}

}  // namespace hoffman

#endif  // HOFFMAN_REPORT_HPP_
