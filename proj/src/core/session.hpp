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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/adversary.hpp"
#include "core/certificate.hpp"
#include "core/game.hpp"
#include "core/serialize.hpp"

namespace obc {

enum class StrategyKind {
  kCertificate,
  kMatching,
  kRandomValid,
  kSeededCertificate,
  kCommonVector,
  kIdentity,
};

enum class DealerKind {
  kStandard,
  // Uniform invertible matrices, by rejection.
  kRandom,
  kScripted,
  kAdversary,
  // Random bases containing e_n once, at a random position.
  kRandomCommon,
};

const char* strategy_name(StrategyKind kind);
const char* dealer_name(DealerKind kind);
// Throw kInvalidArgument on unknown names.
StrategyKind parse_strategy(const std::string& name);
DealerKind parse_dealer(const std::string& name);

struct PlayConfig {
  int n = 4;
  // 0 selects default_prime().
  std::uint32_t p = 0;
  StrategyKind strategy = StrategyKind::kCertificate;
  DealerKind dealer = DealerKind::kStandard;
  std::uint64_t seed = 0;
  int games = 1;
  // Rows to deal; 0 means n.
  int rows = 0;
  int threads = 1;
  bool verify = true;
  // Rows for the scripted dealer.
  std::vector<VectorList> script;
};

// Smallest admissible prime above n for the strategy and dealer: avoids the
// relevant census when a certificate is used, and provides roots of unity of
// every odd order up to n for the adversary.
std::uint32_t default_prime(int n, StrategyKind strategy, DealerKind dealer);

struct GameRecord {
  Transcript transcript;
  std::optional<AdversaryDiagnostics> adversary;
  std::optional<AdversaryOutcome> outcome;
  std::optional<VerifyReport> verify;
};

struct BatchSummary {
  int games = 0;
  int completed = 0;
  int strategy_errors = 0;
  int dealer_disqualified = 0;
  int verified = 0;
  int verify_failures = 0;
  int adversary_wins = 0;
  int adversary_refuted = 0;
  // Failure reason -> count.
  std::map<std::string, int> reasons;
  // 1-based failure step -> count.
  std::map<int, int> failure_steps;
};

struct BatchResult {
  PlayConfig config;
  std::uint32_t p = 0;
  std::vector<GameRecord> games;
  BatchSummary summary;
};

// Chains are built once per batch and shared across games. Game g uses seed
// config.seed + g; the strategy and dealer draw from independent streams
// derived from it, so results do not depend on the thread count.
BatchResult run_batch(const PlayConfig& config);

Json to_json(const BatchSummary& summary);
Json to_json(const GameRecord& record);

}  // namespace obc
