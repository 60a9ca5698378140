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

#ifndef BOHR_CLI_VERDICT_HPP
#define BOHR_CLI_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bohr_cli/json_util.hpp"

namespace bohr::cli {

// Lowercase hex SHA-256.
std::string sha256Hex(std::string_view data);

// Accumulates the inputs of a command into a digest.
class InputDigest {
 public:
  void add(std::string_view label, std::string_view data);
  std::string hex() const { return sha256Hex(buffer_); }

 private:
  std::string buffer_;
};

struct Verdict {
  std::string command;
  std::string inputs;  // InputDigest::hex()
  Json result = Json::object();
  Json witnesses = Json::object();
  Json residuals = Json::object();
  std::optional<std::uint64_t> seed;

  std::string dump() const;
};

}  // namespace bohr::cli

#endif  // BOHR_CLI_VERDICT_HPP
