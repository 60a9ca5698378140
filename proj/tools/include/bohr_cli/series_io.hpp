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

#ifndef BOHR_CLI_SERIES_IO_HPP
#define BOHR_CLI_SERIES_IO_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bohr/error.hpp"
#include "bohr/series.hpp"

namespace bohr::cli {

// Malformed series document. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A well-formed document whose series fails validateSeries.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const Error& cause);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

// Series document:
//
//   {
//     "symbols": [{"name": "L2", "value": 0.6931471805599453}],
//     "terms": [{"exponent": {"L2": "1"}, "coeff": {"re": 1, "im": 0}}],
//     "abscissa": 0,
//     "tail": {"lambdaNext": {"L2": "2"}, "coeffBound": 1, "minGap": 0.5}
//   }
//
// Exponent coordinates are strings "p" or "p/q" with q > 0. `abscissa` and
// `tail` are optional; a non-finite abscissa is written as "inf" or "-inf".
SeriesSpec parseSeries(std::string_view text);
SeriesSpec parseSeriesFile(const std::filesystem::path& path);

// Canonical form: keys in the order above, doubles in shortest round-trip
// notation, trailing newline.
std::string emitSeries(const SeriesSpec& spec);

}  // namespace bohr::cli

#endif  // BOHR_CLI_SERIES_IO_HPP
