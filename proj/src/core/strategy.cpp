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

#include "core/strategy.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace obc {

bool is_bijection(const Permutation& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

GameState fresh_state(int n) {
  GameState state;
  state.n = n;
  state.omegas.assign(n, KVector::unit(n));
  state.columns.assign(n, {});
  state.seeds.assign(n, {});
  return state;
}

namespace {

void check_row(const VectorList& row, int n) {
  if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::kShape, "row must hold n vectors");
  for (const Vector& v : row) {
    if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::kShape, "vector length must be n");
  }
}

}  // namespace

Permutation certificate_step(const Field& field, const CertificateChain& chain, GameState& state,
                             const VectorList& row) {
  check_row(row, state.n);
  const int level = state.seed_level + state.step + 1;
  if (level > chain.n()) throw Error(ErrorCode::kInvalidArgument, "all rows already placed");
  auto found = find_good_permutation(field, chain, level, state.omegas, row);
  if (!found) {
    throw Error(ErrorCode::kStrategyStuck,
                "no permutation keeps C_" + std::to_string(level) + " nonzero at step " +
                    std::to_string(state.step + 1));
  }
  for (int j = 0; j < state.n; ++j) {
    state.omegas[j] = wedge(field, state.omegas[j], row[found->perm[j]]);
    state.columns[j].push_back(row[found->perm[j]]);
  }
  ++state.step;
  state.value = found->value;
  return found->perm;
}

std::optional<Permutation> matching_step(const Field& field, const std::vector<VectorList>& columns,
                                         const VectorList& row, SplitMix64* rng) {
  const int n = static_cast<int>(row.size());
  if (static_cast<int>(columns.size()) != n) throw Error(ErrorCode::kShape, "column count must be n");
  std::vector<std::vector<bool>> admissible(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) admissible[i][j] = !in_span(field, columns[j], row[i], n);
  }
  std::vector<int> vector_order(n), column_order(n);
  std::iota(vector_order.begin(), vector_order.end(), 0);
  std::iota(column_order.begin(), column_order.end(), 0);
  if (rng) {
    rng->shuffle(vector_order);
    rng->shuffle(column_order);
  }

  std::vector<int> match_column(n, -1);
  std::vector<bool> visited;
  auto augment = [&](auto&& self, int i) -> bool {
    for (int j : column_order) {
      if (!admissible[i][j] || visited[j]) continue;
      visited[j] = true;
      if (match_column[j] < 0 || self(self, match_column[j])) {
        match_column[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i : vector_order) {
    visited.assign(n, false);
    if (!augment(augment, i)) return std::nullopt;
  }
  return match_column;
}

GameState seeded_init(const Field& field, const CertificateChain& chain, int rows,
                      SplitMix64& rng, int retry_budget) {
  const int n = chain.n();
  if (rows < 0 || rows > n) throw Error(ErrorCode::kInvalidArgument, "rows must be in [0, n]");
  const int seed_level = n - rows;
  const CertificateForm& form = chain.level(seed_level);
  const std::uint32_t p = field.modulus();
  for (int attempt = 0; attempt < std::max(1, retry_budget); ++attempt) {
    GameState state = fresh_state(n);
    state.seed_level = seed_level;
    for (int j = 0; j < n; ++j) {
      VectorList seed;
      do {
        seed.clear();
        for (int t = 0; t < seed_level; ++t) {
          Vector v(n);
          for (Scalar& x : v) x = static_cast<Scalar>(rng.uniform(p));
          seed.push_back(std::move(v));
        }
      } while (!is_independent(field, seed, n));
      state.omegas[j] = pure(field, seed, n);
      state.seeds[j] = std::move(seed);
    }
    state.value = eval(field, form, state.omegas);
    if (form.is_zero() || *state.value != 0) return state;
  }
  throw Error(ErrorCode::kSeeding, "no nonvanishing seed for C_" + std::to_string(seed_level) +
                                       " within " + std::to_string(retry_budget) + " attempts");
}

Vector project_off_last(const Vector& v) {
  Vector out = v;
  if (!out.empty()) out.back() = 0;
  return out;
}

Permutation common_vector_step(const Field& field, const CertificateChain& chain, GameState& state,
                               const VectorList& row) {
  const int n = state.n;
  check_row(row, n);
  if (chain.variant() != ChainVariant::kCommonVector) {
    throw Error(ErrorCode::kInvalidArgument, "common-vector play needs the common-vector chain");
  }
  const int k = state.step;
  if (k >= n) throw Error(ErrorCode::kInvalidArgument, "all rows already placed");
  const Vector e_last = standard_vector(n, n - 1);
  if (std::count(row.begin(), row.end(), e_last) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "row must contain e_n exactly once");
  }
  const int e_index = static_cast<int>(std::find(row.begin(), row.end(), e_last) - row.begin());

  // Slot k carries e_n; the remaining slots take the other vectors, projected,
  // in their original order.
  VectorList slots(n);
  std::vector<int> original(n);
  slots[k] = e_last;
  original[k] = e_index;
  int next = 0;
  for (int slot = 0; slot < n; ++slot) {
    if (slot == k) continue;
    if (next == e_index) ++next;
    slots[slot] = project_off_last(row[next]);
    original[slot] = next;
    ++next;
  }
  auto found = find_good_permutation(field, chain, k + 1, state.omegas, slots, k);
  if (!found) {
    throw Error(ErrorCode::kStrategyStuck,
                "no permutation fixing column " + std::to_string(k + 1) + " keeps the form nonzero");
  }
  Permutation perm(n);
  for (int j = 0; j < n; ++j) perm[j] = original[found->perm[j]];
  for (int j = 0; j < n; ++j) {
    state.omegas[j] = wedge(field, state.omegas[j], slots[found->perm[j]]);
    state.columns[j].push_back(row[perm[j]]);
  }
  ++state.step;
  state.value = found->value;
  return perm;
}

std::vector<Permutation> common_vector_play(const Field& field, const CertificateChain& chain,
                                            const std::vector<VectorList>& rows) {
  GameState state = fresh_state(chain.n());
  std::vector<Permutation> out;
  for (const VectorList& row : rows) out.push_back(common_vector_step(field, chain, state, row));
  return out;
}

CertificateStrategy::CertificateStrategy(Field field, std::shared_ptr<const CertificateChain> chain)
    : field_(field), chain_(std::move(chain)), state_(fresh_state(chain_->n())) {
  state_.value = eval(field_, chain_->level(0), state_.omegas);
  if (*state_.value == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "C_0 vanishes mod " + std::to_string(field_.modulus()) +
                    "; the certificate strategy needs p not dividing ELS(n) - OLS(n)");
  }
}

CertificateStrategy::CertificateStrategy(Field field, std::shared_ptr<const CertificateChain> chain,
                                         int rows, std::uint64_t seed)
    : field_(field), chain_(std::move(chain)), seeded_(true) {
  SplitMix64 rng(seed);
  state_ = seeded_init(field_, *chain_, rows, rng);
}

std::optional<Permutation> CertificateStrategy::place(const VectorList& row) {
  try {
    return certificate_step(field_, *chain_, state_, row);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kStrategyStuck) return std::nullopt;
    throw;
  }
}

MatchingStrategy::MatchingStrategy(Field field, int n) : field_(field), columns_(n) {}

MatchingStrategy::MatchingStrategy(Field field, int n, std::uint64_t seed)
    : field_(field), columns_(n), rng_(SplitMix64(seed)) {}

std::optional<Permutation> MatchingStrategy::place(const VectorList& row) {
  auto perm = matching_step(field_, columns_, row, rng_ ? &*rng_ : nullptr);
  if (perm) {
    for (std::size_t j = 0; j < columns_.size(); ++j) columns_[j].push_back(row[(*perm)[j]]);
  }
  return perm;
}

CommonVectorStrategy::CommonVectorStrategy(Field field,
                                           std::shared_ptr<const CertificateChain> chain)
    : field_(field), chain_(std::move(chain)), state_(fresh_state(chain_->n())) {
  if (chain_->variant() != ChainVariant::kCommonVector) {
    throw Error(ErrorCode::kInvalidArgument, "common-vector strategy needs the common-vector chain");
  }
  state_.value = eval(field_, chain_->level(0), state_.omegas);
  if (*state_.value == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "fixed-diagonal signed count vanishes mod " + std::to_string(field_.modulus()));
  }
}

std::optional<Permutation> CommonVectorStrategy::place(const VectorList& row) {
  try {
    return common_vector_step(field_, *chain_, state_, row);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kStrategyStuck) {
      failure_ = "strategy_stuck";
      return std::nullopt;
    }
    if (e.code() == ErrorCode::kInvalidArgument) {
      failure_ = "row_without_common_vector";
      return std::nullopt;
    }
    throw;
  }
}

std::optional<Permutation> IdentityStrategy::place(const VectorList&) {
  Permutation perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  return perm;
}

}  // namespace obc
