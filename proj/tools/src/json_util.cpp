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

#include "bohr_cli/json_util.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace bohr::cli {

Json numberJson(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::optional<double> parseNonFinite(std::string_view s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return std::nullopt;
}

Json complexJson(Complex z) { return {{"re", numberJson(z.real())}, {"im", numberJson(z.imag())}}; }

Json exponentJson(const ExponentVector& e) {
  Json out = Json::object();
  for (const auto& [name, q] : e.coords()) out[name] = q.str();
  return out;
}

Json rationalJson(const Rational& r) { return r.str(); }

Json matrixJson(const BohrMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.ncols; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json integerJson(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

Json intVectorJson(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integerJson(x));
  return out;
}

}  // namespace bohr::cli
