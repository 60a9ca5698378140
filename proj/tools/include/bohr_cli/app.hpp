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

#ifndef BOHR_CLI_APP_HPP
#define BOHR_CLI_APP_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>

#include "bohr/valuesets.hpp"

namespace bohr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitUsage = 64;

// Runs `bohr <subcommand> ...`. Results go to `out` unless --out is given;
// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Writes to a sibling temporary file, then renames it over `path`.
void writeFileAtomically(const std::filesystem::path& path, std::string_view data);

// "re,im" header, one point per line, shortest round-trip decimals.
std::string cloudCsv(std::span<const Complex> points);

}  // namespace bohr::cli

#endif  // BOHR_CLI_APP_HPP
