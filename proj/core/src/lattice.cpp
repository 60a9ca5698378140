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

#include "bohr/lattice.hpp"

#include <utility>

#include "bohr/error.hpp"

namespace bohr {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Row operations on (A, U) mirrored as inverse column operations on Uinv so
// that Uinv stays equal to U^{-1}.
class Tracker {
 public:
  Tracker(IntMatrix& a, IntMatrix& u, IntMatrix& uinv) : a_(a), u_(u), uinv_(uinv) {}

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    std::swap(u_[i], u_[j]);
    for (auto& row : uinv_) std::swap(row[i], row[j]);
  }

  // row_i += q·row_j
  void addMultiple(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a_[i].size(); ++c) a_[i][c] += q * a_[j][c];
    for (std::size_t c = 0; c < u_[i].size(); ++c) u_[i][c] += q * u_[j][c];
    for (auto& row : uinv_) row[j] -= q * row[i];
  }

  void negate(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    for (auto& x : u_[i]) x = -x;
    for (auto& row : uinv_) row[i] = -row[i];
  }

 private:
  IntMatrix& a_;
  IntMatrix& u_;
  IntMatrix& uinv_;
};

// Floor division for the above-pivot reduction.
Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

RowEchelon unimodularEchelon(IntMatrix a, std::size_t ncols) {
  const std::size_t m = a.size();
  for (const auto& row : a) {
    if (row.size() != ncols) throw Error(ErrorCode::DimensionMismatch, "ragged integer matrix");
  }
  RowEchelon out;
  out.U = identity(m);
  out.Uinv = identity(m);
  Tracker ops(a, out.U, out.Uinv);

  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m; ++col) {
    // Euclid on the column: keep moving the smallest nonzero entry up.
    while (true) {
      std::size_t best = m;
      for (std::size_t r = row; r < m; ++r) {
        if (a[r][col] != 0 && (best == m || abs(a[r][col]) < abs(a[best][col]))) best = r;
      }
      if (best == m) break;
      ops.swap(row, best);
      bool clean = true;
      for (std::size_t r = row + 1; r < m; ++r) {
        if (a[r][col] == 0) continue;
        ops.addMultiple(r, row, -(a[r][col] / a[row][col]));
        if (a[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0) ops.negate(row);
    ++row;
  }
  out.rank = row;
  out.H = std::move(a);
  return out;
}

IntMatrix hermiteNormalForm(const IntMatrix& rows, std::size_t ncols) {
  RowEchelon e = unimodularEchelon(rows, ncols);
  IntMatrix h(e.H.begin(), e.H.begin() + static_cast<std::ptrdiff_t>(e.rank));
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t pivot = 0;
    while (h[i][pivot] == 0) ++pivot;
    for (std::size_t k = 0; k < i; ++k) {
      const Integer q = floorDiv(h[k][pivot], h[i][pivot]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < ncols; ++c) h[k][c] -= q * h[i][c];
    }
  }
  return h;
}

Integer l1Norm(const IntVector& v) {
  Integer total = 0;
  for (const auto& x : v) total += abs(x);
  return total;
}

}  // namespace bohr
