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

#include "core/adversary.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace obc {

namespace {

// Index of the standard vector v, or -1.
int standard_index(const Vector& v) {
  int index = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || index >= 0) return -1;
    index = static_cast<int>(i);
  }
  return index;
}

Scalar dot(const Field& field, const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = field.add(s, field.mul(a[i], b[i]));
  return s;
}

}  // namespace

MissingPairGraph build_missing_graph(int n, const std::vector<VectorList>& columns) {
  if (static_cast<int>(columns.size()) != n) throw Error(ErrorCode::kShape, "expected n columns");
  MissingPairGraph g;
  g.n = n;
  std::vector<int> degree(n, 0);
  for (int l = 0; l < n; ++l) {
    if (static_cast<int>(columns[l].size()) != n - 2) {
      throw Error(ErrorCode::kInvalidArgument, "column must hold n - 2 vectors");
    }
    std::vector<bool> present(n, false);
    for (const Vector& v : columns[l]) {
      const int s = standard_index(v);
      if (s < 0 || present[s]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "column " + std::to_string(l + 1) + " is not a set of distinct standard vectors");
      }
      present[s] = true;
    }
    std::vector<int> missing;
    for (int s = 0; s < n; ++s) {
      if (!present[s]) missing.push_back(s);
    }
    g.edges.emplace_back(missing[0], missing[1]);
    ++degree[missing[0]];
    ++degree[missing[1]];
  }
  if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 2; })) {
    throw Error(ErrorCode::kInvalidArgument, "missing-pair graph is not 2-regular");
  }
  return g;
}

OddCycle find_odd_cycle(const MissingPairGraph& g) {
  // adjacency[v] = (column, neighbour), in column order.
  std::vector<std::vector<std::pair<int, int>>> adjacency(g.n);
  for (int l = 0; l < static_cast<int>(g.edges.size()); ++l) {
    const auto [a, b] = g.edges[l];
    adjacency[a].emplace_back(l, b);
    adjacency[b].emplace_back(l, a);
  }
  std::vector<bool> visited(g.n, false);
  for (int start = 0; start < g.n; ++start) {
    if (visited[start]) continue;
    OddCycle cycle;
    int current = start;
    int via = -1;
    do {
      visited[current] = true;
      const auto& edges = adjacency[current];
      if (edges.size() != 2) throw Error(ErrorCode::kInternal, "graph is not 2-regular");
      const auto& [column, next] = edges[0].first != via ? edges[0] : edges[1];
      cycle.symbols.push_back(current);
      cycle.columns.push_back(column);
      via = column;
      current = next;
    } while (current != start);
    if (cycle.length() % 2 == 1) return cycle;
  }
  throw Error(ErrorCode::kInternal, "missing-pair graph has no odd cycle");
}

VectorList probe_basis(const Field& field, const OddCycle& cycle, int n) {
  const int m = cycle.length();
  if (m < 3) throw Error(ErrorCode::kInvalidArgument, "odd cycle must have length >= 3");
  const Scalar zeta = root_of_unity(field, static_cast<std::uint32_t>(m));
  VectorList basis;
  for (int t = 1; t <= m; ++t) {
    Vector v(n, 0);
    for (int s = 1; s <= m; ++s) v[cycle.symbols[s - 1]] = field.pow(zeta, static_cast<std::uint64_t>(s) * t);
    basis.push_back(std::move(v));
  }
  std::vector<bool> on_cycle(n, false);
  for (int s : cycle.symbols) on_cycle[s] = true;
  for (int i = 0; i < n; ++i) {
    if (!on_cycle[i]) basis.push_back(standard_vector(n, i));
  }
  return basis;
}

Vector trap_vector(const Field& field, const std::vector<VectorList>& column_spaces, int n) {
  VectorList meet = intersection_basis(field, column_spaces, n);
  if (meet.empty()) {
    throw Error(ErrorCode::kAdversaryRefuted, "column spaces intersect trivially");
  }
  return meet.front();
}

VectorList AdversaryDealer::deal(const TableView& table) {
  const int step = static_cast<int>(table.rows.size());
  if (step < table.n - 2) {
    VectorList standard;
    for (int i = 0; i < table.n; ++i) standard.push_back(standard_vector(table.n, i));
    return standard;
  }
  if (step == table.n - 2) return deal_probe(table);
  return deal_trap(table);
}

VectorList AdversaryDealer::deal_probe(const TableView& table) {
  const std::vector<VectorList> columns(table.columns.begin(), table.columns.end());
  diag_.graph = build_missing_graph(table.n, columns);
  diag_.graph_two_regular = true;
  diag_.cycle = find_odd_cycle(*diag_.graph);
  diag_.zeta = root_of_unity(table.field, static_cast<std::uint32_t>(diag_.cycle->length()));
  diag_.probe = probe_basis(table.field, *diag_.cycle, table.n);
  return diag_.probe;
}

VectorList AdversaryDealer::deal_trap(const TableView& table) {
  const Field& field = table.field;
  const int n = table.n;
  const OddCycle& cycle = *diag_.cycle;
  const int m = cycle.length();
  const Permutation& placed = table.permutations.back();
  diag_.probe_reached_placement = true;

  diag_.probe_forced_into_cycle = std::all_of(cycle.columns.begin(), cycle.columns.end(),
                                              [&](int l) { return placed[l] < m; });
  if (diag_.probe_forced_into_cycle) {
    // z_t = zeta^pi(t) x_{i_t} - x_{i_{t+1}} is normal to the t-th cycle column.
    Matrix z(m, m);
    std::uint64_t exponent_sum = 0;
    bool annihilates = true;
    for (int t = 0; t < m; ++t) {
      const int pi = placed[cycle.columns[t]] + 1;
      exponent_sum += pi;
      Vector normal(n, 0);
      normal[cycle.symbols[t]] = field.pow(diag_.zeta, pi);
      normal[cycle.symbols[(t + 1) % m]] = field.neg(1);
      z(t, t) = normal[cycle.symbols[t]];
      z(t, (t + 1) % m) = field.neg(1);
      for (const Vector& v : table.columns[cycle.columns[t]]) {
        annihilates = annihilates && dot(field, normal, v) == 0;
      }
    }
    diag_.normals_annihilate_columns = annihilates;
    diag_.z_determinant = det(field, z);
    diag_.z_determinant_formula = field.sub(field.pow(diag_.zeta, exponent_sum), 1);
  }

  std::vector<VectorList> cycle_columns;
  for (int l : cycle.columns) cycle_columns.push_back(table.columns[l]);
  diag_.cycle_intersection_dim = static_cast<int>(intersection_basis(field, cycle_columns, n).size());

  const std::vector<VectorList> columns(table.columns.begin(), table.columns.end());
  diag_.trap = trap_vector(field, columns, n);
  diag_.trap_in_all_columns = std::all_of(columns.begin(), columns.end(), [&](const VectorList& c) {
    return in_span(field, c, *diag_.trap, n);
  });
  VectorList row = extend_to_basis(field, {*diag_.trap}, n);

  if (n <= 7) {
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool all_fail = true;
    do {
      bool some_dependent = false;
      for (int j = 0; j < n && !some_dependent; ++j) {
        some_dependent = in_span(field, columns[j], row[perm[j]], n);
      }
      all_fail = all_fail && some_dependent;
    } while (all_fail && std::next_permutation(perm.begin(), perm.end()));
    diag_.every_final_placement_fails = all_fail;
  }
  return row;
}

AdversaryRun run_adversary(Strategy& strategy, int n, const Field& field, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::kInvalidArgument, "adversary needs odd n >= 3");
  for (int m = 3; m <= n; m += 2) {
    if ((field.modulus() - 1) % m != 0) {
      throw Error(ErrorCode::kOrderUnavailable,
                  "F_" + std::to_string(field.modulus()) + " lacks a primitive " +
                      std::to_string(m) + "-th root of unity");
    }
  }
  AdversaryRun run;
  AdversaryDealer dealer;
  try {
    run.transcript = play(n, field, strategy, dealer, n, seed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAdversaryRefuted) throw;
    run.outcome = AdversaryOutcome::kAdversaryRefuted;
    run.refutation = e.what();
  }
  run.diagnostics = dealer.diagnostics();
  if (run.outcome == AdversaryOutcome::kAdversaryWins &&
      run.transcript.verdict.kind != VerdictKind::kStrategyError) {
    run.outcome = AdversaryOutcome::kAdversaryRefuted;
    run.refutation = std::string("game ended with verdict ") + verdict_name(run.transcript.verdict.kind);
  }
  return run;
}

}  // namespace obc
