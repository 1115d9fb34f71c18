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

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hoffman/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Certified upper bounds on the homogeneous Hoffman constant of {x : Ax <= 0}"};
  app.require_subcommand(1);

  hoffman::RunConfig config;
  std::string format = "auto";
  std::string output = "text";

  CLI::App* compute = app.add_subcommand("compute", "Bound H0(A) for a matrix file");
  compute->add_option("--input", config.input_path, "Matrix file (.csv or .mtx)")->required();
  compute->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"csv", "mtx", "auto"}));
  compute->add_option("--samples", config.num_samples, "Oracle samples (0 disables)")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--seed", config.seed, "Oracle seed");
  compute->add_option("--threads", config.threads, "Oracle worker threads")
      ->check(CLI::PositiveNumber);
  compute->add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--feas-tol", config.solver.feas_tol, "Feasibility tolerance");
  compute->add_option("--opt-tol", config.solver.opt_tol, "Optimality tolerance");
  compute->add_option("--max-iters", config.solver.max_iters, "Iteration cap per solve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hoffman::kExitError;
  }

  static const std::map<std::string, hoffman::InputFormat> kFormats = {
      {"csv", hoffman::InputFormat::kCsv},
      {"mtx", hoffman::InputFormat::kMatrixMarket},
      {"auto", hoffman::InputFormat::kAuto}};
  config.input_format = kFormats.at(format);
  config.output_format =
      output == "json" ? hoffman::OutputFormat::kJson : hoffman::OutputFormat::kText;
  return hoffman::RunCompute(config, std::cout, std::cerr);
}
