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

// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "certificate_checker.hpp"
#include "hoffman/cli.hpp"
#include "hoffman/hoffman.hpp"
#include "hoffman/report.hpp"
#include "nlohmann/json.hpp"
#include "test_instances.hpp"

namespace hoffman {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr std::uint64_t kSuiteSeed = 20260;
constexpr std::uint64_t kOracleSeed = 7;
constexpr int kSuiteSamples = 1000;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

double RelErr(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

class Gate {
 public:
  void Report(int id, bool ok, const std::string& what) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    all_ok_ = all_ok_ && ok;
  }
  bool all_ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

// Every report produced by criteria 1-7 is kept for the audit.
struct Audited {
  ProblemInstance instance;
  BoundReport report;
};

OracleResult Sample(const ProblemInstance& inst, const BoundReport& r, int samples,
                    std::uint64_t seed) {
  OracleOptions opts;
  if (r.partition && !r.partition->n.empty()) opts.hints.push_back(r.partition->x_hat);
  if (r.case_n) opts.hints.push_back(r.case_n->x_bar);
  if (r.stitch) opts.hints.push_back(r.stitch->basis.q * r.stitch->z_bar);
  return LowerBoundMonteCarlo(inst, samples, seed, opts);
}

// The deterministic part of a report: everything except stage timings.
std::string Fingerprint(const ProblemInstance& inst, const BoundReport& r,
                        const OracleResult& o) {
  nlohmann::json j = ReportToJson(inst, r, o, SolverConfig{});
  j["diagnostics"].erase("timings_ms");
  return j.dump();
}

int Main() {
  Gate gate;
  std::vector<Audited> audited;
  auto bound = [&](const Matrix& a) {
    ProblemInstance inst(a);
    BoundReport r = BoundH0(inst);
    audited.push_back({inst, r});
    return r;
  };
  auto guarded = [&](int id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      gate.Report(id, false, std::string("exception: ") + e.what());
    }
  };

  guarded(1, [&] {
    const auto start = Clock::now();
    const ProblemInstance inst(-Matrix::Identity(5, 5));
    const BoundReport r = bound(inst.a());
    const OracleResult o = Sample(inst, r, 100, kOracleSeed);
    const double elapsed = Seconds(start);
    const double root5 = std::sqrt(5.0);
    const bool ok = std::abs(r.total - root5) <= 1e-6 && std::abs(o.lower_bound - root5) <= 1e-6 &&
                    r.total / o.lower_bound <= 1 + 1e-6 && elapsed < 1.0;
    gate.Report(1, ok,
                Fmt("A = -I5: total %.12g, lower bound %.12g, time %.3f s", r.total,
                    o.lower_bound, elapsed));
  });

  guarded(2, [&] {
    const ProblemInstance inst(Matrix{{3.0, 4.0}});
    const BoundReport r = bound(inst.a());
    const auto closed = ClosedFormH0(inst);
    const bool ok = std::abs(r.total - 0.2) <= 1e-6 && closed && std::abs(r.total - *closed) <= 1e-6;
    gate.Report(2, ok, Fmt("A = [[3,4]]: total %.12g, closed form %.12g", r.total,
                           closed.value_or(NAN)));
  });

  guarded(3, [&] {
    const ProblemInstance inst(Matrix{{1.0}, {-1.0}});
    const BoundReport r = bound(inst.a());
    const OracleResult o = Sample(inst, r, 100, kOracleSeed);
    const bool partition_ok = r.partition && r.partition->b == IndexSet{0, 1} && r.partition->n.empty();
    const bool ok = partition_ok && std::abs(r.total - 2 * kSqrt2) <= 1e-6 &&
                    std::abs(o.lower_bound - 1.0) <= 1e-6 && SandwichHolds(o.lower_bound, r.total);
    gate.Report(3, ok, Fmt("A = [[1],[-1]]: partition ok %.0f, total %.12g, lower bound %.12g",
                           partition_ok, r.total, o.lower_bound));
  });

  guarded(4, [&] {
    const ProblemInstance inst(Matrix{{1.0, 0.0}, {-1.0, 0.0}, {0.0, -1.0}});
    const BoundReport r = bound(inst.a());
    const OracleResult o = Sample(inst, r, 100, kOracleSeed);
    const bool partition_ok =
        r.partition && r.partition->b == IndexSet{0, 1} && r.partition->n == IndexSet{2};
    const bool parts_ok = r.case_n && r.case_b && r.stitch &&
                          std::abs(r.case_n->value - 1.0) <= 1e-6 &&
                          std::abs(r.case_b->value - 2 * kSqrt2) <= 1e-6 &&
                          std::abs(r.stitch->value - 3.0) <= 1e-6;
    const bool ok = partition_ok && parts_ok && std::abs(r.total - 6 * kSqrt2) <= 1e-3 &&
                    o.lower_bound >= kSqrt2 - 1e-3 && SandwichHolds(o.lower_bound, r.total);
    gate.Report(4, ok,
                Fmt("mixed 3x2: components ok %.0f, total %.12g, lower bound %.12g",
                    partition_ok && parts_ok, r.total, o.lower_bound));
  });

  std::vector<std::string> first_run;
  guarded(5, [&] {
    const auto start = Clock::now();
    const auto suite = testing::SandwichSuite(kSuiteSeed);
    int violations = 0;
    double worst_ratio = 0.0;
    for (std::size_t k = 0; k < suite.size(); ++k) {
      const ProblemInstance inst(suite[k]);
      const BoundReport r = bound(suite[k]);
      const OracleResult o = Sample(inst, r, kSuiteSamples, kOracleSeed + k);
      if (!SandwichHolds(o.lower_bound, r.total)) ++violations;
      if (r.total > 0) worst_ratio = std::max(worst_ratio, o.lower_bound / r.total);
      first_run.push_back(Fingerprint(inst, r, o));
    }
    const double elapsed = Seconds(start);
    gate.Report(5, violations == 0 && elapsed < 60.0,
                Fmt("%.0f instances, %.0f sandwich violations, max lower/upper %.6f", suite.size(),
                    violations, worst_ratio) +
                    Fmt(", time %.2f s", elapsed));
  });

  guarded(6, [&] {
    std::mt19937_64 rng(kSuiteSeed + 6);
    std::uniform_int_distribution<int> rows(1, 20), cols(1, 10);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Matrix a = testing::GaussianMatrix(rows(rng), cols(rng), rng);
      const double base = bound(a).total;
      for (double alpha : {0.01, 1.0, 100.0}) {
        const double scaled = bound(Matrix(alpha * a)).total;
        worst = std::max(worst, RelErr(scaled * alpha, base));
      }
    }
    gate.Report(6, worst <= 1e-6, Fmt("20 instances x 3 scalings, max relative error %.3g", worst));
  });

  guarded(7, [&] {
    std::mt19937_64 rng(kSuiteSeed + 7);
    std::uniform_int_distribution<int> rows(1, 20), cols(1, 10);
    double worst = 0.0;
    int partition_mismatches = 0;
    for (int k = 0; k < 20; ++k) {
      const Matrix a = testing::GaussianMatrix(rows(rng), cols(rng), rng);
      const BoundReport base = bound(a);
      for (int rep = 0; rep < 5; ++rep) {
        const auto perm = testing::RandomPermutation(static_cast<int>(a.rows()), rng);
        const BoundReport r = bound(testing::PermuteRows(a, perm));
        IndexSet b, n;
        for (int i : r.partition->b) b.push_back(perm[i]);
        for (int i : r.partition->n) n.push_back(perm[i]);
        std::sort(b.begin(), b.end());
        std::sort(n.begin(), n.end());
        if (b != base.partition->b || n != base.partition->n) ++partition_mismatches;
        worst = std::max(worst, RelErr(r.total, base.total));
      }
    }
    gate.Report(7, partition_mismatches == 0 && worst <= 1e-8,
                Fmt("20 instances x 5 permutations, %.0f partition mismatches, max relative "
                    "error %.3g",
                    partition_mismatches, worst));
  });

  guarded(8, [&] {
    int failed = 0;
    std::string first_failure;
    for (const Audited& item : audited) {
      const auto audit = testing::AuditCertificates(item.instance, item.report);
      if (!audit.ok()) {
        if (failed++ == 0) first_failure = audit.failures.front();
      }
    }
    gate.Report(8, failed == 0 && !audited.empty(),
                Fmt("%.0f reports audited, %.0f failed", audited.size(), failed) +
                    (first_failure.empty() ? "" : " (" + first_failure + ")"));
  });

  guarded(9, [&] {
    const auto suite = testing::SandwichSuite(kSuiteSeed);
    int differing = 0;
    for (std::size_t k = 0; k < suite.size(); ++k) {
      const ProblemInstance inst(suite[k]);
      const BoundReport r = BoundH0(inst);
      const OracleResult o = Sample(inst, r, kSuiteSamples, kOracleSeed + k);
      if (k >= first_run.size() || Fingerprint(inst, r, o) != first_run[k]) ++differing;
    }
    gate.Report(9, differing == 0 && first_run.size() == suite.size(),
                Fmt("%.0f reports recomputed, %.0f differ", suite.size(), differing));
  });

  std::printf("%s\n", gate.all_ok() ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return gate.all_ok() ? 0 : 1;
}

}  // namespace
}  // namespace hoffman

int main() { return hoffman::Main(); }
