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

#ifndef BOHR_ERROR_HPP
#define BOHR_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bohr {

enum class ErrorCode {
  DivisionByZero,
  UnknownSymbol,
  BadSymbol,
  NonIncreasingExponents,
  DuplicateExponent,
  NonpositiveSigma,
  EmptyInput,
  IndexOutOfRange,
  DimensionMismatch,
  ExponentMismatch,
  ModulusMismatch,
  SupportMismatch,
  BadRange,
  EmptyCloud,
  BoundaryTooClose,
  NonconvergentSubdivision,
  DegenerateTarget,
  BadIndex,
  InvariantViolation,
};

std::string_view errorName(ErrorCode code);

// Every failure raised by the library. `index()` is a 1-based term index when
// the failure concerns a specific term of a series.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace bohr

#endif  // BOHR_ERROR_HPP
