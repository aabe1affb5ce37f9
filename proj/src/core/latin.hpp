// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/extalg.hpp"

namespace obc {

// n x n array over symbols 1..n, row-major.
struct LatinSquare {
  int n = 0;
  std::vector<int> cells;

  int at(int row, int col) const { return cells[row * n + col]; }
};

bool is_latin(const LatinSquare& sq);

// Sign of a permutation given as a 0-based image list.
int permutation_sign(std::span<const int> image);

// Product of the signs of the n row maps j -> a_ij and the n column maps
// i -> a_ij. Throws kInvalidArgument if sq is not a Latin square.
int square_sign(const LatinSquare& sq);

struct CensusOptions {
  int max_order = 7;
  // Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
  // Relabelling symbols multiplies every row and column sign by sgn(sigma),
  // 2n factors in total, so each first-row subtree carries the same signed
  // total. When set, only the identity first row is searched and the total is
  // multiplied by n!. Applies to census_signed only.
  bool symbol_symmetry = false;
};

// ELS(n) - OLS(n) by exhaustive backtracking.
std::int64_t census_signed(int n, const CensusOptions& options = {});

// Same, restricted to squares whose diagonal is constantly n.
std::int64_t census_signed_fixed_diagonal(int n, const CensusOptions& options = {});

// Signed number of ways to append rows k+1..n (k = |S_j|) to columns whose
// top entries are S_j in increasing order: each appended row is a permutation,
// column j receives exactly [n] \ S_j, and each completion contributes the
// product of appended-row signs and full-column signs.
std::int64_t signed_completions(int n, std::span<const SubsetMask> columns,
                                const CensusOptions& options = {});

}  // namespace obc
