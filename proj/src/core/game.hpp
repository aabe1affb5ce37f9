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
#include <optional>
#include <string>
#include <vector>

#include "core/certificate.hpp"
#include "core/protocol.hpp"

namespace obc {

enum class VerdictKind {
  kCompleted,
  // The strategy produced no placement, an invalid permutation, or a
  // dependent column.
  kStrategyError,
  // The dealer emitted something that is not a basis.
  kDealerDisqualified,
};

const char* verdict_name(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::kCompleted;
  // 1-based row index of the failure; 0 when completed.
  int step = 0;
  std::string reason;
};

// Full record of one game.
struct Transcript {
  int n = 0;
  std::uint32_t p = 2;
  std::string strategy;
  std::string dealer;
  std::uint64_t seed = 0;
  int rows_expected = 0;
  // Virtual seed vectors of the seeded certificate strategy, per column.
  std::vector<VectorList> seed_columns;
  std::vector<VectorList> rows;
  std::vector<Permutation> permutations;
  std::optional<std::vector<Scalar>> certificate_values;
  Verdict verdict;
  bool final_columns_ok = false;
};

// Deals rows_to_deal rows one at a time. Each row is checked to be a basis
// and each placement to keep every column independent.
Transcript play(int n, const Field& field, Strategy& strategy, Dealer& dealer, int rows_to_deal,
                std::uint64_t seed);

std::vector<VectorList> columns_of(const Transcript& t, std::size_t placed_rows);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Recomputes everything a transcript claims. Certificate values are checked
// against `chain` when given, otherwise against a freshly built chain.
VerifyReport verify_transcript(const Transcript& t, const CertificateChain* chain = nullptr);

struct HallViolation {
  // 0-based column indices.
  std::vector<int> columns;
  int dimension = 0;
};

struct HallReport {
  int step = 0;
  std::vector<HallViolation> violations;
};

// Every nonempty set L of columns whose spaces meet in dimension > n - |L|.
HallReport hall_report(const Field& field, const std::vector<VectorList>& columns, int n,
                       int step = 0);

}  // namespace obc
