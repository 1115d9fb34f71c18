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

#ifndef HOFFMAN_CLI_HPP_
#define HOFFMAN_CLI_HPP_

#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>

#include "hoffman/bounds.hpp"
#include "hoffman/io.hpp"
#include "hoffman/oracle.hpp"
#include "hoffman/report.hpp"

namespace hoffman {

enum class OutputFormat { kText, kJson };

struct RunConfig {
  std::string input_path;
  InputFormat input_format = InputFormat::kAuto;
  OutputFormat output_format = OutputFormat::kText;
  int num_samples = 0;  // 0 disables the oracle
  std::uint64_t seed = 0;
  int threads = 1;
  SolverConfig solver;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitSandwichViolation = 2;

// lower <= upper + 1e-6 (1 + upper)
inline bool SandwichHolds(double lower, double upper) {
  return lower <= upper + 1e-6 * (1.0 + upper);
}

// Loads A, bounds H0(A), optionally samples a lower bound and writes the
// report to `out`. Errors go to `err`. Exit codes: 0 ok, 1 input or solver
// failure, 2 when the sampled lower bound exceeds the upper bound.
inline int RunCompute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.input_path.empty()) throw Error(ErrorCode::kInvalidArgument, "no input path");
    if (config.num_samples < 0) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 0");
    config.solver.Validate();
    const ProblemInstance instance = LoadMatrix(config.input_path, config.input_format);
    const BoundReport report = BoundH0(instance, config.solver);

    std::optional<OracleResult> oracle;
    if (config.num_samples > 0) {
      OracleOptions opts;
      opts.threads = config.threads;
      opts.solver = config.solver;
      if (report.partition && !report.partition->n.empty()) {
        opts.hints.push_back(report.partition->x_hat);
      }
      if (report.case_n) opts.hints.push_back(report.case_n->x_bar);
      if (report.stitch) opts.hints.push_back(report.stitch->basis.q * report.stitch->z_bar);
      oracle = LowerBoundMonteCarlo(instance, config.num_samples, config.seed, opts);
    }

    if (config.output_format == OutputFormat::kJson) {
      out << ReportToJson(instance, report, oracle, config.solver).dump(2) << '\n';
    } else {
      WriteTextReport(out, instance, report, oracle);
    }
    if (oracle && !SandwichHolds(oracle->lower_bound, report.total)) {
      err << "sandwich violation: sampled lower bound " << oracle->lower_bound
          << " exceeds upper bound " << report.total << '\n';
      return kExitSandwichViolation;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace hoffman

#endif  // HOFFMAN_CLI_HPP_
