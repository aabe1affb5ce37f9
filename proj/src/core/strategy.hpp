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

#include <memory>
#include <optional>
#include <vector>

#include "core/certificate.hpp"
#include "core/extalg.hpp"
#include "core/protocol.hpp"
#include "core/rng.hpp"

namespace obc {

struct GameState {
  int n = 0;
  int step = 0;
  // Grade of the omegas before any row is placed.
  int seed_level = 0;
  // omegas[j] = pure(seeds[j] followed by columns[j]); grade seed_level + step.
  std::vector<KVector> omegas;
  std::vector<VectorList> columns;
  std::vector<VectorList> seeds;
  std::optional<Scalar> value;
};

GameState fresh_state(int n);

// Places a basis so that the next certificate form stays nonzero. Throws
// kStrategyStuck when every permutation vanishes, which the contraction
// identity rules out as long as the current value is nonzero.
Permutation certificate_step(const Field& field, const CertificateChain& chain, GameState& state,
                             const VectorList& row);

// Perfect matching between row vectors and columns (vector i may go to column
// j iff it is outside span(column j)), built by augmenting paths in
// lexicographic order. With rng, the vector and column orders are shuffled
// first.
std::optional<Permutation> matching_step(const Field& field, const std::vector<VectorList>& columns,
                                         const VectorList& row, SplitMix64* rng = nullptr);

inline std::optional<Permutation> random_valid_step(const Field& field,
                                                    const std::vector<VectorList>& columns,
                                                    const VectorList& row, SplitMix64& rng) {
  return matching_step(field, columns, row, &rng);
}

// Seeds each column with n - rows random independent vectors so that the game
// continues from level n - rows. If C_{n-rows} is not identically zero the
// seed is resampled until its value is nonzero.
GameState seeded_init(const Field& field, const CertificateChain& chain, int rows, SplitMix64& rng,
                      int retry_budget = 1000);

// One row of the common-vector game: e_n goes to column state.step, the other
// vectors (projected away from e_n) follow the common-vector chain.
Permutation common_vector_step(const Field& field, const CertificateChain& chain, GameState& state,
                               const VectorList& row);

// All n rows in sequence; throws kStrategyStuck on failure.
std::vector<Permutation> common_vector_play(const Field& field, const CertificateChain& chain,
                                            const std::vector<VectorList>& rows);

// Drops the e_n coordinate.
Vector project_off_last(const Vector& v);

class CertificateStrategy : public Strategy {
 public:
  // Refuses (kInvalidArgument) unless the starting form is nonzero mod p.
  CertificateStrategy(Field field, std::shared_ptr<const CertificateChain> chain);
  // Seeded variant: only the given number of rows will be dealt.
  CertificateStrategy(Field field, std::shared_ptr<const CertificateChain> chain, int rows,
                      std::uint64_t seed);

  std::string id() const override { return seeded_ ? "seeded_certificate" : "certificate"; }
  std::optional<Permutation> place(const VectorList& row) override;
  std::optional<Scalar> certificate_value() const override { return state_.value; }
  std::string failure_reason() const override { return "strategy_stuck"; }

  const GameState& state() const { return state_; }

 private:
  Field field_;
  std::shared_ptr<const CertificateChain> chain_;
  GameState state_;
  bool seeded_ = false;
};

class MatchingStrategy : public Strategy {
 public:
  MatchingStrategy(Field field, int n);
  // Shuffled augmenting order from a deterministic generator.
  MatchingStrategy(Field field, int n, std::uint64_t seed);

  std::string id() const override { return rng_ ? "random_valid" : "matching"; }
  std::optional<Permutation> place(const VectorList& row) override;
  std::string failure_reason() const override { return "no_matching"; }

 private:
  Field field_;
  std::vector<VectorList> columns_;
  std::optional<SplitMix64> rng_;
};

class CommonVectorStrategy : public Strategy {
 public:
  CommonVectorStrategy(Field field, std::shared_ptr<const CertificateChain> chain);

  std::string id() const override { return "common_vector"; }
  std::optional<Permutation> place(const VectorList& row) override;
  std::optional<Scalar> certificate_value() const override { return state_.value; }
  std::string failure_reason() const override { return failure_; }

 private:
  Field field_;
  std::shared_ptr<const CertificateChain> chain_;
  GameState state_;
  std::string failure_ = "strategy_stuck";
};

// Places every row in the order given. Loses at step 2 against repeated
// standard bases.
class IdentityStrategy : public Strategy {
 public:
  explicit IdentityStrategy(int n) : n_(n) {}

  std::string id() const override { return "identity"; }
  std::optional<Permutation> place(const VectorList& row) override;

 private:
  int n_;
};

}  // namespace obc
