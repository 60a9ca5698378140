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

#ifndef BOHR_LATTICE_HPP
#define BOHR_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "bohr/rational.hpp"

namespace bohr {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

// U·A = H with U unimodular and H in row echelon form (positive pivots).
// The rows of U past `rank` span the integer left kernel of A.
struct RowEchelon {
  IntMatrix H;
  IntMatrix U;
  IntMatrix Uinv;
  std::size_t rank = 0;
};

RowEchelon unimodularEchelon(IntMatrix a, std::size_t ncols);

// Hermite normal form of the lattice spanned by the given rows: positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermiteNormalForm(const IntMatrix& rows, std::size_t ncols);

Integer l1Norm(const IntVector& v);

}  // namespace bohr

#endif  // BOHR_LATTICE_HPP
