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

#include "bohr_cli/verdict.hpp"

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

namespace bohr::cli {

std::string sha256Hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

void InputDigest::add(std::string_view label, std::string_view data) {
  // label:length:data\n
  buffer_ += label;
  buffer_ += ':';
  buffer_ += std::to_string(data.size());
  buffer_ += ':';
  buffer_ += data;
  buffer_ += '\n';
}

std::string Verdict::dump() const {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["result"] = result;
  doc["witnesses"] = witnesses;
  doc["residuals"] = residuals;
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  return doc.dump(2) + "\n";
}

}  // namespace bohr::cli
