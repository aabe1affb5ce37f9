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

#include "core/error.hpp"
#include "core/latin.hpp"
#include "oracles.hpp"

using namespace obc;

namespace {

LatinSquare square(int n, std::vector<int> cells) { return LatinSquare{n, std::move(cells)}; }

std::vector<SubsetMask> subsets_of_size(int n, int k) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s < (1u << n); ++s) {
    if (popcount(s) == k) out.push_back(s);
  }
  return out;
}

bool regular(const std::vector<SubsetMask>& t, int n, int k) {
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (SubsetMask s : t) count += (s >> x) & 1;
    if (count != k) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("latin") {

TEST_CASE("square_sign examples") {
  CHECK(square_sign(square(2, {1, 2, 2, 1})) == 1);
  CHECK(square_sign(square(3, {1, 2, 3, 2, 3, 1, 3, 1, 2})) == 1);
  CHECK(square_sign(square(1, {1})) == 1);
  CHECK(square_sign(square(3, {3, 1, 2, 2, 3, 1, 1, 2, 3})) == -1);
  CHECK(square_sign(square(3, {3, 2, 1, 1, 3, 2, 2, 1, 3})) == -1);
  CHECK_THROWS_AS(square_sign(square(2, {1, 1, 2, 2})), Error);
}

TEST_CASE("square_sign matches the oracle on every square up to order 4") {
  for (int n = 1; n <= 4; ++n) {
    int seen = 0;
    oracle::for_each_latin(n, [&](const std::vector<std::vector<int>>& rows) {
      LatinSquare sq{n, {}};
      for (const auto& r : rows) {
        for (int x : r) sq.cells.push_back(x + 1);
      }
      CHECK(is_latin(sq));
      CHECK(square_sign(sq) == oracle::array_sign(rows));
      ++seen;
    });
    const int counts[] = {0, 1, 2, 12, 576};
    CHECK(seen == counts[n]);
  }
}

TEST_CASE("census examples") {
  CHECK(census_signed(1) == 1);
  CHECK(census_signed(2) == 2);
  CHECK(census_signed(3) == 0);
  CHECK(census_signed_fixed_diagonal(1) == 1);
  CHECK(census_signed_fixed_diagonal(2) == 1);
  CHECK(census_signed_fixed_diagonal(3) == -2);
}

TEST_CASE("census matches naive enumeration") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(census_signed(n) == oracle::naive_census(n));
    CHECK(census_signed_fixed_diagonal(n) == oracle::naive_census(n, true));
  }
}

TEST_CASE("census vanishes for odd orders and not for 4") {
  CHECK(census_signed(5) == 0);
  CHECK(census_signed(4) != 0);
}

TEST_CASE("order 6 census") {
  // Reference: the 9408 reduced squares of order 6 have signed sum 2304
  // (separate enumeration). At even order, permuting columns or the last
  // five rows keeps the sign, so the full sum is 6! * 5! times that.
  CensusOptions fast;
  fast.symbol_symmetry = true;
  CHECK(census_signed(6, fast) == 2304LL * 720 * 120);
}

TEST_CASE("census is independent of thread count and symmetry reduction") {
  for (int n = 1; n <= 5; ++n) {
    CensusOptions one;
    CensusOptions many;
    many.threads = 4;
    CensusOptions symmetric;
    symmetric.symbol_symmetry = true;
    symmetric.threads = 3;
    const std::int64_t base = census_signed(n, one);
    CHECK(census_signed(n, many) == base);
    CHECK(census_signed(n, symmetric) == base);
    CHECK(census_signed_fixed_diagonal(n, many) == census_signed_fixed_diagonal(n, one));
  }
}

TEST_CASE("census guards its order bound") {
  CensusOptions small;
  small.max_order = 4;
  CHECK_THROWS_AS(census_signed(5, small), Error);
  CHECK_THROWS_AS(census_signed(0), Error);
}

TEST_CASE("signed_completions examples") {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<SubsetMask> full(n, (1u << n) - 1);
    CHECK(signed_completions(n, full) == 1);
  }
  const std::vector<SubsetMask> empty2(2, 0);
  CHECK(signed_completions(2, empty2) == 2);
  for (SubsetMask a : subsets_of_size(3, 1)) {
    for (SubsetMask b : subsets_of_size(3, 1)) {
      for (SubsetMask c : subsets_of_size(3, 1)) {
        const std::vector<SubsetMask> t = {a, b, c};
        CHECK(signed_completions(3, t) == 0);
      }
    }
  }
}

TEST_CASE("signed_completions of the empty tuple is the census") {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<SubsetMask> empty(n, 0);
    CHECK(signed_completions(n, empty) == census_signed(n));
  }
}

TEST_CASE("signed_completions matches brute force on every tuple up to order 4") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subsets = subsets_of_size(n, k);
      std::vector<std::size_t> idx(n, 0);
      for (;;) {
        std::vector<SubsetMask> t;
        for (std::size_t i : idx) t.push_back(subsets[i]);
        const std::int64_t got = signed_completions(n, t);
        CHECK(got == oracle::naive_completions(n, t));
        if (!regular(t, n, k)) CHECK(got == 0);
        int pos = 0;
        while (pos < n && ++idx[pos] == subsets.size()) idx[pos++] = 0;
        if (pos == n) break;
      }
    }
  }
}

TEST_CASE("signed_completions partitions agree") {
  const std::vector<SubsetMask> t = {0b0011, 0b0110, 0b1100, 0b1001};
  CensusOptions threaded;
  threaded.threads = 3;
  CHECK(signed_completions(4, t) == signed_completions(4, t, threaded));
}

}  // TEST_SUITE
