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

#include "bohr/basis.hpp"

#include <set>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

namespace {

using DenseRow = std::vector<Rational>;

// A reduced row of the echelon form together with its expression in terms of
// the basis elements chosen so far.
struct EchelonRow {
  DenseRow coords;
  std::size_t pivot;
  BohrMatrix::Row combination;
};

void addScaled(BohrMatrix::Row& target, const BohrMatrix::Row& source, const Rational& scale) {
  for (const auto& [j, q] : source) {
    auto& slot = target[j];
    slot += scale * q;
    if (slot.isZero()) target.erase(j);
  }
}

}  // namespace

std::vector<double> Basis::values(const SymbolTable& syms) const {
  std::vector<double> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(numericValue(e, syms));
  return out;
}

Rational BohrMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows.size() || j >= ncols) {
    throw Error(ErrorCode::IndexOutOfRange, "matrix entry out of range");
  }
  auto it = rows[i].find(j);
  return it == rows[i].end() ? Rational(0) : it->second;
}

BohrMatrix BohrMatrix::restrictRows(std::span<const std::size_t> indices) const {
  BohrMatrix out;
  out.ncols = ncols;
  out.rows.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= rows.size()) throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
    out.rows.push_back(rows[i]);
  }
  return out;
}

BasisDecomposition computeBasis(std::span<const ExponentVector> exponents) {
  if (exponents.empty()) throw Error(ErrorCode::EmptyInput, "no exponents");

  std::set<std::string> names;
  for (const auto& e : exponents) {
    for (const auto& [name, q] : e.coords()) names.insert(name);
  }
  const std::vector<std::string> symbols(names.begin(), names.end());

  BasisDecomposition out;
  std::vector<EchelonRow> echelon;
  out.R.rows.reserve(exponents.size());

  for (std::size_t n = 0; n < exponents.size(); ++n) {
    DenseRow residue;
    residue.reserve(symbols.size());
    for (const auto& s : symbols) residue.push_back(exponents[n].coord(s));

    // residue = λ(n) - Σ α_k e_k, with each e_k reduced against its predecessors.
    BohrMatrix::Row expressed;
    for (const auto& row : echelon) {
      if (residue[row.pivot].isZero()) continue;
      const Rational alpha = residue[row.pivot] / row.coords[row.pivot];
      for (std::size_t c = 0; c < residue.size(); ++c) {
        if (!row.coords[c].isZero()) residue[c] -= alpha * row.coords[c];
      }
      addScaled(expressed, row.combination, alpha);
    }

    std::size_t pivot = 0;
    while (pivot < residue.size() && residue[pivot].isZero()) ++pivot;
    if (pivot == residue.size()) {
      out.R.rows.push_back(std::move(expressed));
      continue;
    }

    const std::size_t index = out.basis.elements.size();
    out.basis.elements.push_back(exponents[n]);
    out.basis.sourceIndices.push_back(n);
    BohrMatrix::Row combination{{index, Rational(1)}};
    addScaled(combination, expressed, Rational(-1));
    echelon.push_back({std::move(residue), pivot, std::move(combination)});
    out.R.rows.push_back(BohrMatrix::Row{{index, Rational(1)}});
  }

  out.R.ncols = out.basis.size();
  out.T.ncols = exponents.size();
  for (std::size_t src : out.basis.sourceIndices) out.T.rows.push_back(BohrMatrix::Row{{src, Rational(1)}});
  return out;
}

std::vector<ExponentVector> apply(const BohrMatrix& m, std::span<const ExponentVector> v) {
  if (v.size() != m.ncols) {
    throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(m.ncols) +
                                                  " columns but vector has " + std::to_string(v.size()) +
                                                  " entries");
  }
  std::vector<ExponentVector> out;
  out.reserve(m.nrows());
  for (const auto& row : m.rows) {
    ExponentVector acc;
    for (const auto& [j, q] : row) acc += q * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

bool isIntegral(const BohrMatrix& r) {
  for (const auto& row : r.rows) {
    for (const auto& [j, q] : row) {
      if (!q.isInteger()) return false;
    }
  }
  return true;
}

Integer denominatorLcm(const BohrMatrix& r, std::size_t h) {
  if (h < 1 || h > r.nrows()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "h = " + std::to_string(h) + " outside 1.." + std::to_string(r.nrows()));
  }
  Integer d = 1;
  for (std::size_t i = 0; i < h; ++i) {
    for (const auto& [j, q] : r.rows[i]) d = lcm(d, q.denominator());
  }
  return d;
}

Integer denominatorLcm(const BohrMatrix& r) {
  return r.nrows() == 0 ? Integer(1) : denominatorLcm(r, r.nrows());
}

IntegralTruncation makeIntegralTruncated(const Basis& basis, const BohrMatrix& r, std::size_t h) {
  if (basis.size() != r.ncols) {
    throw Error(ErrorCode::DimensionMismatch, "basis size does not match the column count of R");
  }
  const Integer d = denominatorLcm(r, h);
  const Rational scale(d);

  IntegralTruncation out;
  out.scale = d;
  out.basis.sourceIndices = basis.sourceIndices;
  for (const auto& e : basis.elements) out.basis.elements.push_back(e * (Rational(1) / scale));
  out.R.ncols = r.ncols;
  for (std::size_t i = 0; i < h; ++i) {
    BohrMatrix::Row row;
    for (const auto& [j, q] : r.rows[i]) row.emplace(j, q * scale);
    out.R.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace bohr
