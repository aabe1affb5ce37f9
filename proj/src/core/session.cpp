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

#include "core/session.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "core/error.hpp"
#include "core/latin.hpp"
#include "core/rng.hpp"
#include "core/strategy.hpp"

namespace obc {

namespace {

constexpr const char* kStrategyNames[] = {"certificate",        "matching",      "random_valid",
                                          "seeded_certificate", "common_vector", "identity"};
constexpr const char* kDealerNames[] = {"standard", "random", "scripted", "adversary",
                                        "random_common"};

bool uses_chain(StrategyKind s) {
  return s == StrategyKind::kCertificate || s == StrategyKind::kSeededCertificate ||
         s == StrategyKind::kCommonVector;
}

class StandardDealer : public Dealer {
 public:
  std::string id() const override { return "standard"; }
  VectorList deal(const TableView& table) override {
    VectorList row;
    for (int i = 0; i < table.n; ++i) row.push_back(standard_vector(table.n, i));
    return row;
  }
};

Vector random_vector(const Field& field, int n, SplitMix64& rng) {
  Vector v(n);
  for (Scalar& x : v) x = static_cast<Scalar>(rng.uniform(field.modulus()));
  return v;
}

class RandomDealer : public Dealer {
 public:
  explicit RandomDealer(std::uint64_t seed) : rng_(seed) {}
  std::string id() const override { return "random"; }
  VectorList deal(const TableView& table) override {
    for (;;) {
      VectorList row;
      for (int i = 0; i < table.n; ++i) row.push_back(random_vector(table.field, table.n, rng_));
      if (is_independent(table.field, row, table.n)) return row;
    }
  }

 private:
  SplitMix64 rng_;
};

class RandomCommonDealer : public Dealer {
 public:
  explicit RandomCommonDealer(std::uint64_t seed) : rng_(seed) {}
  std::string id() const override { return "random_common"; }
  VectorList deal(const TableView& table) override {
    const int n = table.n;
    const Vector e_last = standard_vector(n, n - 1);
    for (;;) {
      VectorList row;
      for (int i = 0; i + 1 < n; ++i) row.push_back(random_vector(table.field, n, rng_));
      row.push_back(e_last);
      if (!is_independent(table.field, row, n)) continue;
      row.pop_back();
      const auto at = static_cast<std::ptrdiff_t>(rng_.uniform(n));
      row.insert(row.begin() + at, e_last);
      return row;
    }
  }

 private:
  SplitMix64 rng_;
};

class ScriptedDealer : public Dealer {
 public:
  explicit ScriptedDealer(const std::vector<VectorList>& script) : script_(script) {}
  std::string id() const override { return "scripted"; }
  // Running past the script yields an empty row, which disqualifies.
  VectorList deal(const TableView& table) override {
    const std::size_t i = table.rows.size();
    return i < script_.size() ? script_[i] : VectorList{};
  }

 private:
  const std::vector<VectorList>& script_;
};

struct Shared {
  Field field;
  std::shared_ptr<const CertificateChain> standard;
  std::shared_ptr<const CertificateChain> common;
};

std::unique_ptr<Strategy> make_strategy(const PlayConfig& c, const Shared& s, int rows,
                                        std::uint64_t seed) {
  switch (c.strategy) {
    case StrategyKind::kCertificate:
      return std::make_unique<CertificateStrategy>(s.field, s.standard);
    case StrategyKind::kSeededCertificate:
      return std::make_unique<CertificateStrategy>(s.field, s.standard, rows, seed);
    case StrategyKind::kMatching:
      return std::make_unique<MatchingStrategy>(s.field, c.n);
    case StrategyKind::kRandomValid:
      return std::make_unique<MatchingStrategy>(s.field, c.n, seed);
    case StrategyKind::kCommonVector:
      return std::make_unique<CommonVectorStrategy>(s.field, s.common);
    case StrategyKind::kIdentity:
      return std::make_unique<IdentityStrategy>(c.n);
  }
  throw Error(ErrorCode::kInternal, "unhandled strategy");
}

std::unique_ptr<Dealer> make_dealer(const PlayConfig& c, std::uint64_t seed) {
  switch (c.dealer) {
    case DealerKind::kStandard:
      return std::make_unique<StandardDealer>();
    case DealerKind::kRandom:
      return std::make_unique<RandomDealer>(seed);
    case DealerKind::kRandomCommon:
      return std::make_unique<RandomCommonDealer>(seed);
    case DealerKind::kScripted:
      return std::make_unique<ScriptedDealer>(c.script);
    case DealerKind::kAdversary:
      break;
  }
  throw Error(ErrorCode::kInternal, "unhandled dealer");
}

GameRecord play_one(const PlayConfig& c, const Shared& s, int rows, std::uint64_t game_seed) {
  const std::uint64_t strategy_seed = SplitMix64::derive(game_seed, 1);
  const std::uint64_t dealer_seed = SplitMix64::derive(game_seed, 2);
  auto strategy = make_strategy(c, s, rows, strategy_seed);
  GameRecord record;
  if (c.dealer == DealerKind::kAdversary) {
    AdversaryRun run = run_adversary(*strategy, c.n, s.field, game_seed);
    record.transcript = std::move(run.transcript);
    record.adversary = std::move(run.diagnostics);
    record.outcome = run.outcome;
  } else {
    auto dealer = make_dealer(c, dealer_seed);
    record.transcript = play(c.n, s.field, *strategy, *dealer, rows, game_seed);
  }
  if (c.strategy == StrategyKind::kSeededCertificate) {
    record.transcript.seed_columns = static_cast<CertificateStrategy&>(*strategy).state().seeds;
  }
  if (c.verify) {
    const CertificateChain* chain =
        c.strategy == StrategyKind::kCommonVector ? s.common.get() : s.standard.get();
    record.verify = verify_transcript(record.transcript, chain);
  }
  return record;
}

}  // namespace

const char* strategy_name(StrategyKind kind) { return kStrategyNames[static_cast<int>(kind)]; }
const char* dealer_name(DealerKind kind) { return kDealerNames[static_cast<int>(kind)]; }

StrategyKind parse_strategy(const std::string& name) {
  for (int i = 0; i < 6; ++i) {
    if (name == kStrategyNames[i]) return static_cast<StrategyKind>(i);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy '" + name + "'");
}

DealerKind parse_dealer(const std::string& name) {
  for (int i = 0; i < 5; ++i) {
    if (name == kDealerNames[i]) return static_cast<DealerKind>(i);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown dealer '" + name + "'");
}

std::uint32_t default_prime(int n, StrategyKind strategy, DealerKind dealer) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  std::vector<std::int64_t> orders;
  std::vector<std::int64_t> avoid;
  if (dealer == DealerKind::kAdversary) {
    for (int m = 3; m <= n; m += 2) orders.push_back(m);
  }
  if (n <= 6) {
    CensusOptions options;
    options.symbol_symmetry = true;
    if (strategy == StrategyKind::kCertificate || strategy == StrategyKind::kSeededCertificate) {
      const std::int64_t c = census_signed(n, options);
      if (c != 0) avoid.push_back(c);
    } else if (strategy == StrategyKind::kCommonVector) {
      avoid.push_back(census_signed_fixed_diagonal(n, options));
    }
  }
  return find_game_prime(n, orders, avoid).p;
}

BatchResult run_batch(const PlayConfig& config) {
  const int n = config.n;
  if (n < 1 || n > kMaxExteriorDim) {
    throw Error(ErrorCode::kInvalidArgument, "n out of range");
  }
  if (config.games < 0) throw Error(ErrorCode::kInvalidArgument, "games must be non-negative");
  const int rows = config.rows == 0 ? n : config.rows;
  if (rows < 1 || rows > n) throw Error(ErrorCode::kInvalidArgument, "rows must lie in 1..n");
  if (config.dealer == DealerKind::kAdversary && rows != n) {
    throw Error(ErrorCode::kInvalidArgument, "the adversary deals exactly n rows");
  }
  if (config.strategy == StrategyKind::kCommonVector && rows != n) {
    throw Error(ErrorCode::kInvalidArgument, "the common-vector strategy plays n rows");
  }
  BatchResult result;
  result.config = config;
  result.p = config.p != 0 ? config.p : default_prime(n, config.strategy, config.dealer);
  if (!is_prime(result.p) || result.p <= static_cast<std::uint32_t>(n)) {
    throw Error(ErrorCode::kInvalidArgument, "p must be a prime above n");
  }
  Shared shared{Field(result.p), nullptr, nullptr};
  if (uses_chain(config.strategy)) {
    ChainOptions options;
    options.threads = static_cast<unsigned>(std::max(1, config.threads));
    if (config.strategy == StrategyKind::kCommonVector) {
      options.variant = ChainVariant::kCommonVector;
      shared.common = std::make_shared<CertificateChain>(build_chain(n, result.p, options));
    } else {
      shared.standard = std::make_shared<CertificateChain>(build_chain(n, result.p, options));
    }
  }

  result.games.resize(config.games);
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::optional<Error> first_error;
  auto worker = [&] {
    for (int g; (g = next.fetch_add(1)) < config.games;) {
      try {
        result.games[g] = play_one(config, shared, rows, config.seed + g);
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = e;
        next = config.games;
      }
    }
  };
  const int threads = std::clamp(config.threads, 1, std::max(1, config.games));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) throw *first_error;

  BatchSummary& s = result.summary;
  s.games = config.games;
  for (const GameRecord& r : result.games) {
    const Verdict& v = r.transcript.verdict;
    switch (v.kind) {
      case VerdictKind::kCompleted:
        ++s.completed;
        break;
      case VerdictKind::kStrategyError:
        ++s.strategy_errors;
        break;
      case VerdictKind::kDealerDisqualified:
        ++s.dealer_disqualified;
        break;
    }
    if (v.kind != VerdictKind::kCompleted) {
      ++s.reasons[v.reason];
      ++s.failure_steps[v.step];
    }
    if (r.verify) (r.verify->all_pass() ? s.verified : s.verify_failures)++;
    if (r.outcome) {
      (*r.outcome == AdversaryOutcome::kAdversaryWins ? s.adversary_wins : s.adversary_refuted)++;
    }
  }
  return result;
}

Json to_json(const BatchSummary& s) {
  Json reasons = Json::object();
  for (const auto& [reason, count] : s.reasons) reasons[reason] = count;
  Json steps = Json::object();
  for (const auto& [step, count] : s.failure_steps) steps[std::to_string(step)] = count;
  return {{"games", s.games},
          {"completed", s.completed},
          {"strategy_errors", s.strategy_errors},
          {"dealer_disqualified", s.dealer_disqualified},
          {"verified", s.verified},
          {"verify_failures", s.verify_failures},
          {"adversary_wins", s.adversary_wins},
          {"adversary_refuted", s.adversary_refuted},
          {"reasons", reasons},
          {"failure_steps", steps}};
}

Json to_json(const GameRecord& r) {
  Json out = {{"transcript", to_json(r.transcript)}};
  if (r.verify) out["verify"] = to_json(*r.verify);
  if (r.adversary) out["adversary"] = to_json(*r.adversary);
  if (r.outcome) {
    out["outcome"] =
        *r.outcome == AdversaryOutcome::kAdversaryWins ? "adversary_wins" : "adversary_refuted";
  }
  return out;
}

}  // namespace obc
