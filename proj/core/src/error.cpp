// Copyright 2026 The bohreq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bohr/error.hpp"

namespace bohr {

std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::NonIncreasingExponents: return "NonIncreasingExponents";
    case ErrorCode::DuplicateExponent: return "DuplicateExponent";
    case ErrorCode::NonpositiveSigma: return "NonpositiveSigma";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ExponentMismatch: return "ExponentMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::EmptyCloud: return "EmptyCloud";
    case ErrorCode::BoundaryTooClose: return "BoundaryTooClose";
    case ErrorCode::NonconvergentSubdivision: return "NonconvergentSubdivision";
    case ErrorCode::DegenerateTarget: return "DegenerateTarget";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(errorName(code)) + ": " + what), code_(code), index_(index) {}

}  // namespace bohr
