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

#include "core/chain_check.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "core/latin.hpp"

namespace obc {

namespace {

KVector random_kvector(const Field& field, int n, int k, SplitMix64& rng) {
  KVector w(n, k);
  for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) {
    if (popcount(s) == k) w.set(s, static_cast<Scalar>(rng.uniform(field.modulus())));
  }
  return w;
}

Scalar permutation_parity_sign(const Field& field, const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 ? field.neg(1) : 1;
}

bool same_entries(const CertificateForm& a, const CertificateForm& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].key != b.entries[i].key || a.entries[i].value != b.entries[i].value) {
      return false;
    }
  }
  return true;
}

}  // namespace

IdentitySides contraction_identity_sides(const Field& field, const CertificateChain& chain,
                                         int k, SplitMix64& rng) {
  const int n = chain.n();
  const bool common = chain.variant() == ChainVariant::kCommonVector;
  std::vector<KVector> omegas;
  for (int j = 0; j < n; ++j) omegas.push_back(random_kvector(field, n, k - 1, rng));
  VectorList u(n, Vector(n, 0));
  for (int i = 0; i < n; ++i) {
    const int free_coords = common ? n - 1 : n;
    for (int c = 0; c < free_coords; ++c) u[i][c] = static_cast<Scalar>(rng.uniform(field.modulus()));
  }
  if (common) u[k - 1] = standard_vector(n, n - 1);

  IdentitySides sides;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (common && perm[k - 1] != k - 1) continue;
    std::vector<KVector> wedged;
    for (int j = 0; j < n; ++j) wedged.push_back(wedge(field, omegas[j], u[perm[j]]));
    const Scalar term = eval(field, chain.level(k), wedged);
    sides.lhs = field.add(sides.lhs, field.mul(permutation_parity_sign(field, perm), term));
  } while (std::next_permutation(perm.begin(), perm.end()));

  Scalar d;
  if (common) {
    VectorList rest;
    for (int i = 0; i < n; ++i) {
      if (i != k - 1) rest.emplace_back(u[i].begin(), u[i].end() - 1);
    }
    d = n == 1 ? 1 : det(field, Matrix::from_columns(rest, n - 1));
    if ((n - k) % 2) d = field.neg(d);
  } else {
    d = det(field, Matrix::from_columns(u, n));
  }
  sides.rhs = field.mul(eval(field, chain.level(k - 1), omegas), d);
  return sides;
}

VerifyReport check_chain(const CertificateChain& chain, std::uint64_t seed) {
  VerifyReport report;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const int n = chain.n();
  const bool common = chain.variant() == ChainVariant::kCommonVector;

  add("top_form", same_entries(chain.level(n), top_form(n, chain.modulus())));

  bool regular = true;
  std::string where;
  for (int k = 0; k <= n && regular; ++k) {
    for (const FormEntry& e : chain.level(k).entries) {
      if (!is_symbol_regular(unpack_tuple(e.key, n), n, k)) {
        regular = false;
        where = "level " + std::to_string(k);
        break;
      }
    }
  }
  add("support_regular", regular, where);

  int broken = -1;
  ChainOptions options;
  options.variant = chain.variant();
  for (int k = n; k >= 1 && broken < 0; --k) {
    if (!same_entries(contract(chain.level(k), chain.variant(), options), chain.level(k - 1))) {
      broken = k - 1;
    }
  }
  add("recurrence", broken < 0, broken < 0 ? "" : "level " + std::to_string(broken) + " differs");

  if (n <= 6) {
    CensusOptions census_options;
    census_options.symbol_symmetry = true;
    const std::int64_t census = common ? census_signed_fixed_diagonal(n, census_options)
                                       : census_signed(n, census_options);
    std::int64_t expected = census;
    if (chain.modulus() != 0) {
      const std::int64_t p = chain.modulus();
      expected = ((census % p) + p) % p;
    }
    const auto& terminal = chain.level(0).entries;
    const std::int64_t got = terminal.empty() ? 0 : terminal.front().value;
    add("terminal_census", got == expected,
        "C_0 = " + std::to_string(got) + ", census = " + std::to_string(census));
  }

  if (!common && n >= 3) {
    const bool zero = chain.level(n - 2).is_zero();
    add("level_n_minus_2_parity", zero == (n % 2 == 1),
        zero ? "level n-2 vanishes" : "level n-2 nonzero");
  }

  bool downward = true;
  for (int k = n; k >= 1; --k) {
    if (chain.level(k).is_zero() && !chain.level(k - 1).is_zero()) downward = false;
  }
  add("downward_vanishing", downward);

  if (n <= 5) {
    const Field field(chain.modulus() != 0 ? chain.modulus() : 1'000'003u);
    SplitMix64 rng(seed);
    bool identity = true;
    std::string detail;
    for (int k = 1; k <= n && identity; ++k) {
      const IdentitySides s = contraction_identity_sides(field, chain, k, rng);
      if (s.lhs != s.rhs) {
        identity = false;
        detail = "fails at level " + std::to_string(k);
      }
    }
    add("contraction_identity", identity, detail);
  }
  return report;
}

}  // namespace obc
