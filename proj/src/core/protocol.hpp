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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/gf.hpp"

namespace obc {

// Placement of one dealt row: column j receives row[perm[j]].
using Permutation = std::vector<int>;

// The online side of the game. Rows are pushed one at a time; a strategy has
// no handle on the dealer and so cannot look ahead.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string id() const = 0;
  // std::nullopt means the strategy cannot produce a placement and loses.
  virtual std::optional<Permutation> place(const VectorList& row) = 0;
  // Value of the current certificate form after the last placement, if the
  // strategy maintains one.
  virtual std::optional<Scalar> certificate_value() const { return std::nullopt; }
  virtual std::string failure_reason() const { return "no_placement"; }
};

// What a dealer may inspect: the public array so far.
struct TableView {
  int n;
  const Field& field;
  std::span<const VectorList> rows;
  std::span<const Permutation> permutations;
  // columns[j] = vectors placed in column j, top to bottom.
  std::span<const VectorList> columns;
};

class Dealer {
 public:
  virtual ~Dealer() = default;

  virtual std::string id() const = 0;
  virtual VectorList deal(const TableView& table) = 0;
};

bool is_bijection(const Permutation& perm, int n);

}  // namespace obc
