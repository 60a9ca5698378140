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

#ifndef BOHR_CLI_JSON_UTIL_HPP
#define BOHR_CLI_JSON_UTIL_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bohr/basis.hpp"
#include "bohr/lattice.hpp"
#include "bohr/series.hpp"

namespace bohr::cli {

using Json = nlohmann::ordered_json;

// Finite values as JSON numbers; ±∞ and NaN as the strings "inf", "-inf", "nan".
Json numberJson(double x);
std::optional<double> parseNonFinite(std::string_view s);

Json complexJson(Complex z);
Json exponentJson(const ExponentVector& e);
Json rationalJson(const Rational& r);
// Dense rows of rational strings.
Json matrixJson(const BohrMatrix& m);
Json integerJson(const Integer& n);
Json intVectorJson(const IntVector& v);

}  // namespace bohr::cli

#endif  // BOHR_CLI_JSON_UTIL_HPP
