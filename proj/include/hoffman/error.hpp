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

#ifndef HOFFMAN_ERROR_HPP_
#define HOFFMAN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hoffman {

enum class ErrorCode {
  kInvalidArgument,
  kNumericalFailure,
  kDegenerateRow,
  kSolverStall,
  kInfeasibleProgram,
  kInfeasibleQP,
  kNoInteriorPoint,
  kAmbiguousIndex,
  kCertificateFailure,
  kUnsupportedProgram,
  kUnknownSolver,
  kParseError,
  kDimensionError,
  kUnsupportedFormat,
  kIoError,
};

constexpr std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kDegenerateRow: return "DegenerateRow";
    case ErrorCode::kSolverStall: return "SolverStall";
    case ErrorCode::kInfeasibleProgram: return "InfeasibleProgram";
    case ErrorCode::kInfeasibleQP: return "InfeasibleQP";
    case ErrorCode::kNoInteriorPoint: return "NoInteriorPoint";
    case ErrorCode::kAmbiguousIndex: return "AmbiguousIndex";
    case ErrorCode::kCertificateFailure: return "CertificateFailure";
    case ErrorCode::kUnsupportedProgram: return "UnsupportedProgram";
    case ErrorCode::kUnknownSolver: return "UnknownSolver";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDimensionError: return "DimensionError";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

// Every failure in the library is reported through this exception; callers
// branch on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hoffman

#endif  // HOFFMAN_ERROR_HPP_
