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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/adversary.hpp"
#include "core/error.hpp"
#include "core/strategy.hpp"
#include "oracles.hpp"

using namespace obc;

namespace {

// Column l holds every standard vector except the two named in edges[l].
std::vector<VectorList> columns_missing(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VectorList> cols;
  for (const auto& [a, b] : edges) {
    VectorList c;
    for (int i = 0; i < n; ++i) {
      if (i != a && i != b) c.push_back(standard_vector(n, i));
    }
    cols.push_back(c);
  }
  return cols;
}

// Returns a non-bijection from the given step on.
class ErringStrategy : public Strategy {
 public:
  ErringStrategy(int n, int bad_step) : n_(n), bad_step_(bad_step) {}
  std::string id() const override { return "erring"; }
  std::optional<Permutation> place(const VectorList&) override {
    ++step_;
    Permutation perm(n_);
    for (int j = 0; j < n_; ++j) perm[j] = step_ >= bad_step_ ? 0 : j;
    return perm;
  }

 private:
  int n_;
  int bad_step_;
  int step_ = 0;
};

void check_winning_run(const AdversaryRun& run, const Field& f, int n) {
  CHECK(run.outcome == AdversaryOutcome::kAdversaryWins);
  const Transcript& t = run.transcript;
  REQUIRE(t.verdict.kind == VerdictKind::kStrategyError);
  CHECK(t.verdict.step <= n);
  CHECK_FALSE(t.final_columns_ok);
  const AdversaryDiagnostics& d = run.diagnostics;
  if (t.verdict.step < n) return;
  CHECK(d.graph_two_regular);
  REQUIRE(d.cycle.has_value());
  const int m = d.cycle->length();
  CHECK(m % 2 == 1);
  CHECK(m >= 3);
  CHECK(d.probe_reached_placement);
  CHECK(d.probe_forced_into_cycle);
  CHECK(d.normals_annihilate_columns);
  CHECK(d.z_determinant == 0);
  CHECK(d.z_determinant_formula == 0);
  CHECK(d.cycle_intersection_dim > n - m);
  REQUIRE(d.trap.has_value());
  CHECK(std::any_of(d.trap->begin(), d.trap->end(), [](Scalar x) { return x != 0; }));
  CHECK(d.trap_in_all_columns);
  CHECK(d.every_final_placement_fails);

  // Independent re-check from the transcript itself.
  const auto cols = columns_of(t, n - 1);
  for (const VectorList& c : cols) CHECK(in_span(f, c, *d.trap, n));
  CHECK(t.rows.back().front() == *d.trap);
  for (const auto& perm : oracle::all_permutations(n)) {
    bool dependent = false;
    for (int j = 0; j < n; ++j) dependent = dependent || in_span(f, cols[j], t.rows.back()[perm[j]], n);
    CHECK(dependent);
  }
}

}  // namespace

TEST_SUITE("adversary") {

TEST_CASE("missing-pair graph examples") {
  const std::vector<VectorList> tri = {{standard_vector(3, 0)}, {standard_vector(3, 1)},
                                       {standard_vector(3, 2)}};
  const MissingPairGraph g = build_missing_graph(3, tri);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {0, 2}, {0, 1}});

  std::vector<VectorList> five(5);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 5; ++j) five[j].push_back(standard_vector(5, (i + j) % 5));
  }
  const MissingPairGraph g5 = build_missing_graph(5, five);
  CHECK(g5.edges.size() == 5);
  std::vector<int> degree(5, 0);
  for (const auto& [a, b] : g5.edges) {
    CHECK(a < b);
    ++degree[a];
    ++degree[b];
  }
  for (int d : degree) CHECK(d == 2);
  CHECK(find_odd_cycle(g5).length() == 5);

  const std::vector<VectorList> dup = {{standard_vector(3, 0)}, {standard_vector(3, 0)},
                                       {standard_vector(3, 2)}};
  CHECK_THROWS_AS(build_missing_graph(3, dup), Error);
}

TEST_CASE("odd cycle choice") {
  const OddCycle t = find_odd_cycle(build_missing_graph(
      3, {{standard_vector(3, 0)}, {standard_vector(3, 1)}, {standard_vector(3, 2)}}));
  CHECK(t.length() == 3);
  CHECK(t.symbols == std::vector<int>{0, 2, 1});
  CHECK(t.columns == std::vector<int>{1, 0, 2});

  // Triangle on {1,2,3} plus a 6-cycle on {4..9}.
  const std::vector<std::pair<int, int>> nine = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
                                                 {5, 6}, {6, 7}, {7, 8}, {3, 8}};
  const OddCycle c9 = find_odd_cycle(build_missing_graph(9, columns_missing(9, nine)));
  CHECK(c9.length() == 3);
  CHECK(std::set<int>(c9.symbols.begin(), c9.symbols.end()) == std::set<int>{0, 1, 2});

  // The odd cycle avoids the smallest symbol here: 4-cycle on {1..4}, triangle on {5,6,7}.
  const std::vector<std::pair<int, int>> seven = {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                                  {4, 5}, {5, 6}, {4, 6}};
  const OddCycle c7 = find_odd_cycle(build_missing_graph(7, columns_missing(7, seven)));
  CHECK(c7.length() == 3);
  CHECK(c7.symbols.front() == 4);
  for (int t = 0; t < 3; ++t) {
    const auto [a, b] = seven[c7.columns[t]];
    const std::set<int> edge = {a, b};
    CHECK(edge == std::set<int>{c7.symbols[t], c7.symbols[(t + 1) % 3]});
  }
}

TEST_CASE("probe basis examples") {
  const Field f7(7);
  OddCycle tri{{0, 1, 2}, {0, 1, 2}};
  const VectorList probe = probe_basis(f7, tri, 3);
  CHECK(probe == VectorList{Vector{2, 4, 1}, Vector{4, 2, 1}, Vector{1, 1, 1}});
  CHECK(det(f7, Matrix::from_columns(probe, 3)) == 6);

  const Field f31(31);
  OddCycle c{{0, 1, 2}, {0, 2, 4}};
  const VectorList p5 = probe_basis(f31, c, 5);
  const Scalar zeta = root_of_unity(f31, 3);
  for (int t = 0; t < 3; ++t) {
    for (int i = 0; i < 5; ++i) {
      const auto at = std::find(c.symbols.begin(), c.symbols.end(), i);
      const Scalar expected =
          at == c.symbols.end() ? 0 : f31.pow(zeta, (at - c.symbols.begin() + 1) * (t + 1));
      CHECK(p5[t][i] == expected);
    }
  }
  CHECK(p5[3] == standard_vector(5, 1));
  CHECK(p5[4] == standard_vector(5, 3));
  CHECK(is_independent(f31, p5, 5));

  OddCycle loop{{0}, {0}};
  CHECK_THROWS_AS(probe_basis(f7, loop, 3), Error);
}

TEST_CASE("trap vector refuses a trivial intersection") {
  const Field f(7);
  const std::vector<VectorList> spaces = {{standard_vector(2, 0)}, {standard_vector(2, 1)}};
  try {
    trap_vector(f, spaces, 2);
    FAIL("expected a refutation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAdversaryRefuted);
  }
}

TEST_CASE("adversary beats matching at n = 3") {
  const Field f(7);
  MatchingStrategy s(f, 3);
  const AdversaryRun run = run_adversary(s, 3, f);
  check_winning_run(run, f, 3);
  CHECK(run.transcript.verdict.step == 3);
}

TEST_CASE("adversary beats shuffled matching at n = 3 and n = 5") {
  for (int n : {3, 5}) {
    const Field f(n == 3 ? 7 : 31);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      MatchingStrategy s(f, n, seed);
      check_winning_run(run_adversary(s, n, f, seed), f, n);
    }
  }
}

TEST_CASE("adversary wins early against erring strategies") {
  const Field f(7);
  ErringStrategy bad(3, 2);
  const AdversaryRun run = run_adversary(bad, 3, f);
  CHECK(run.outcome == AdversaryOutcome::kAdversaryWins);
  CHECK(run.transcript.verdict.step == 2);
  CHECK(run.transcript.verdict.reason == "invalid_permutation");

  const Field f31(31);
  IdentityStrategy id(5);
  const AdversaryRun r5 = run_adversary(id, 5, f31);
  CHECK(r5.outcome == AdversaryOutcome::kAdversaryWins);
  CHECK(r5.transcript.verdict.step == 2);
  CHECK(r5.transcript.verdict.reason == "dependent_column");
}

TEST_CASE("adversary preconditions") {
  const Field f(7);
  MatchingStrategy s(f, 4);
  CHECK_THROWS_AS(run_adversary(s, 4, f), Error);
  MatchingStrategy s5(Field(11), 3);
  try {
    run_adversary(s5, 3, Field(11));
    FAIL("expected an order error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOrderUnavailable);
  }
}

TEST_CASE("adversary at n = 7") {
  const Field f(211);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    MatchingStrategy s(f, 7, seed);
    const AdversaryRun run = run_adversary(s, 7, f, seed);
    check_winning_run(run, f, 7);
  }
}

}  // TEST_SUITE
