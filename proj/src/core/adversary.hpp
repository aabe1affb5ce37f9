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
#include <utility>
#include <vector>

#include "core/game.hpp"
#include "core/protocol.hpp"

namespace obc {

// Graph on the n symbols with one edge per column: the two standard vectors
// still missing from that column after n - 2 standard rows.
struct MissingPairGraph {
  int n = 0;
  // edges[l] = (a, b), a < b, 0-based symbols missing from column l.
  std::vector<std::pair<int, int>> edges;
};

// Throws kInvalidArgument if a column is not n - 2 distinct standard vectors
// or the graph is not 2-regular.
MissingPairGraph build_missing_graph(int n, const std::vector<VectorList>& columns);

struct OddCycle {
  // Column columns[t] misses symbols symbols[t] and symbols[(t + 1) % m].
  std::vector<int> columns;
  std::vector<int> symbols;

  int length() const { return static_cast<int>(columns.size()); }
};

// The odd cycle through the smallest symbol lying on any odd cycle, walked
// from that symbol along its lower-indexed column first. Throws kInternal if
// every cycle is even.
OddCycle find_odd_cycle(const MissingPairGraph& g);

// Vectors v_1..v_m with entry zeta^(s*t) at the s-th cycle symbol of v_t,
// followed by the standard vectors of the remaining symbols in index order.
// Throws kOrderUnavailable if m does not divide p - 1.
VectorList probe_basis(const Field& field, const OddCycle& cycle, int n);

// Nonzero vector in every column space. Throws kAdversaryRefuted if the
// intersection is zero.
Vector trap_vector(const Field& field, const std::vector<VectorList>& column_spaces, int n);

// Per-run record of the checks the construction promises.
struct AdversaryDiagnostics {
  std::optional<MissingPairGraph> graph;
  bool graph_two_regular = false;
  std::optional<OddCycle> cycle;
  Scalar zeta = 0;
  VectorList probe;
  // Filled once the probe row has been placed.
  bool probe_reached_placement = false;
  bool probe_forced_into_cycle = false;
  bool normals_annihilate_columns = false;
  Scalar z_determinant = 0;
  Scalar z_determinant_formula = 0;
  int cycle_intersection_dim = -1;
  std::optional<Vector> trap;
  bool trap_in_all_columns = false;
  // Every placement of the final row leaves some column dependent (checked
  // exhaustively for n <= 7).
  bool every_final_placement_fails = false;
};

// Deals n - 2 standard bases, then the probe basis, then a basis through the
// trap vector.
class AdversaryDealer : public Dealer {
 public:
  std::string id() const override { return "adversary"; }
  VectorList deal(const TableView& table) override;

  const AdversaryDiagnostics& diagnostics() const { return diag_; }

 private:
  VectorList deal_probe(const TableView& table);
  VectorList deal_trap(const TableView& table);

  AdversaryDiagnostics diag_;
};

enum class AdversaryOutcome {
  kAdversaryWins,
  // The strategy survived every row; would contradict the construction.
  kAdversaryRefuted,
};

struct AdversaryRun {
  Transcript transcript;
  AdversaryDiagnostics diagnostics;
  AdversaryOutcome outcome = AdversaryOutcome::kAdversaryWins;
  std::string refutation;
};

// Requires odd n >= 3 and a field with primitive m-th roots for odd m <= n.
AdversaryRun run_adversary(Strategy& strategy, int n, const Field& field, std::uint64_t seed = 0);

}  // namespace obc
