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

#include "core/error.hpp"
#include "core/game.hpp"
#include "core/serialize.hpp"
#include "core/session.hpp"
#include "core/strategy.hpp"

using namespace obc;

namespace {

VectorList standard_row(int n) {
  VectorList row;
  for (int i = 0; i < n; ++i) row.push_back(standard_vector(n, i));
  return row;
}

class FixedDealer : public Dealer {
 public:
  explicit FixedDealer(std::vector<VectorList> rows) : rows_(std::move(rows)) {}
  std::string id() const override { return "fixed"; }
  VectorList deal(const TableView& table) override { return rows_[table.rows.size()]; }

 private:
  std::vector<VectorList> rows_;
};

std::shared_ptr<const CertificateChain> chain(int n, std::uint32_t p) {
  return std::make_shared<CertificateChain>(build_chain(n, p));
}

const CheckResult& find_check(const VerifyReport& r, const std::string& name) {
  for (const CheckResult& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  static CheckResult none;
  return none;
}

Transcript certificate_game(int n, std::uint32_t p, std::uint64_t seed) {
  PlayConfig c;
  c.n = n;
  c.p = p;
  c.dealer = DealerKind::kRandom;
  c.seed = seed;
  return run_batch(c).games[0].transcript;
}

}  // namespace

TEST_SUITE("game") {

TEST_CASE("certificate strategy against the standard dealer") {
  const Field f(5);
  CertificateStrategy s(f, chain(4, 5));
  FixedDealer d(std::vector<VectorList>(4, standard_row(4)));
  const Transcript t = play(4, f, s, d, 4, 0);
  CHECK(t.verdict.kind == VerdictKind::kCompleted);
  CHECK(t.final_columns_ok);
  REQUIRE(t.certificate_values);
  CHECK(t.certificate_values->size() == 4);
  for (int j = 0; j < 4; ++j) {
    std::vector<int> col;
    for (const Permutation& p : t.permutations) col.push_back(p[j]);
    std::sort(col.begin(), col.end());
    CHECK(col == std::vector<int>{0, 1, 2, 3});
  }
  CHECK(verify_transcript(t).all_pass());
}

TEST_CASE("n = 2 certificate games against random bases complete") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Transcript t = certificate_game(2, 3, seed);
    CHECK(t.verdict.kind == VerdictKind::kCompleted);
    CHECK(t.final_columns_ok);
  }
}

TEST_CASE("referee disqualifies non-bases and flags dependent columns") {
  const Field f(5);
  MatchingStrategy s(f, 2);
  FixedDealer bad({standard_row(2), {Vector{1, 1}, Vector{2, 2}}});
  const Transcript t = play(2, f, s, bad, 2, 0);
  CHECK(t.verdict.kind == VerdictKind::kDealerDisqualified);
  CHECK(t.verdict.step == 2);
  CHECK(t.permutations.size() == 1);
  CHECK(verify_transcript(t).all_pass());

  IdentityStrategy id(2);
  FixedDealer same(std::vector<VectorList>(2, standard_row(2)));
  const Transcript u = play(2, f, id, same, 2, 0);
  CHECK(u.verdict.kind == VerdictKind::kStrategyError);
  CHECK(u.verdict.reason == "dependent_column");
  CHECK(u.verdict.step == 2);
  CHECK(verify_transcript(u).all_pass());
}

TEST_CASE("verify detects a corrupted permutation at its step") {
  const Field f(5);
  CertificateStrategy s(f, chain(4, 5));
  FixedDealer d(std::vector<VectorList>(4, standard_row(4)));
  Transcript t = play(4, f, s, d, 4, 0);
  REQUIRE(verify_transcript(t).all_pass());
  t.permutations[2][0] = t.permutations[0][0];
  const VerifyReport r = verify_transcript(t);
  CHECK_FALSE(r.all_pass());
  const CheckResult& cols = find_check(r, "columns_independent");
  CHECK_FALSE(cols.pass);
  CHECK(cols.detail.find("step 3") != std::string::npos);
}

TEST_CASE("verify detects a forged certificate value") {
  Transcript t = certificate_game(4, 5, 42);
  REQUIRE(verify_transcript(t).all_pass());
  (*t.certificate_values)[1] = ((*t.certificate_values)[1] + 1) % 5;
  const VerifyReport r = verify_transcript(t);
  const CheckResult& c = find_check(r, "certificate_values");
  CHECK_FALSE(c.pass);
  CHECK(c.detail.find("mismatch") != std::string::npos);
}

TEST_CASE("verify detects a false completion claim") {
  Transcript t = certificate_game(4, 5, 3);
  t.final_columns_ok = false;
  const VerifyReport r = verify_transcript(t);
  CHECK_FALSE(find_check(r, "final_columns_ok").pass);
}

TEST_CASE("transcript JSON round trip") {
  const Transcript t = certificate_game(4, 5, 9);
  const Json j = to_json(t);
  CHECK(j["format"] == "obc-transcript");
  CHECK(j["permutations"][0].size() == 4);
  for (const Json& x : j["permutations"][0]) CHECK((x >= 1 && x <= 4));
  const Transcript back = transcript_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(verify_transcript(back).all_pass());
  Json bad = j;
  bad["verdict"]["kind"] = "draw";
  CHECK_THROWS_AS(transcript_from_json(bad), Error);
  bad = j;
  bad.erase("rows");
  CHECK_THROWS(transcript_from_json(bad));
}

TEST_CASE("hall report examples") {
  const Field f(7);
  const std::vector<VectorList> example = {{Vector{1, 0, 0, 0}, Vector{0, 1, 0, 0}},
                                         {Vector{0, 1, 0, 0}, Vector{1, 1, 0, 0}},
                                         {Vector{0, 0, 1, 0}, Vector{1, 0, 1, 0}},
                                         {Vector{0, 0, 0, 1}, Vector{1, 0, 0, 1}}};
  const HallReport r = hall_report(f, example, 4, 2);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].columns == std::vector<int>{0, 1, 2, 3});
  CHECK(r.violations[0].dimension == 1);

  std::vector<VectorList> shifted(4);
  for (int step = 1; step <= 3; ++step) {
    for (int j = 0; j < 4; ++j) shifted[j].push_back(standard_vector(4, (j + step - 1) % 4));
    CHECK(hall_report(f, shifted, 4, step).violations.empty());
  }
  CHECK(hall_report(f, std::vector<VectorList>(4), 4, 0).violations.empty());
  CHECK_THROWS_AS(hall_report(f, std::vector<VectorList>(13), 13), Error);
}

TEST_CASE("certificate play never violates the Hall condition before the last row") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Transcript t = certificate_game(4, 5, seed);
    for (int step = 0; step < 4; ++step) {
      CHECK(hall_report(Field(5), columns_of(t, step), 4, step).violations.empty());
    }
  }
}

TEST_CASE("default primes") {
  CHECK(default_prime(2, StrategyKind::kCertificate, DealerKind::kRandom) == 3);
  CHECK(default_prime(4, StrategyKind::kCertificate, DealerKind::kRandom) == 5);
  CHECK(default_prime(3, StrategyKind::kMatching, DealerKind::kAdversary) == 7);
  CHECK(default_prime(5, StrategyKind::kRandomValid, DealerKind::kAdversary) == 31);
  CHECK(default_prime(3, StrategyKind::kCommonVector, DealerKind::kRandomCommon) == 5);
}

TEST_CASE("batches are reproducible and independent of threads") {
  for (StrategyKind s : {StrategyKind::kCertificate, StrategyKind::kRandomValid}) {
    PlayConfig c;
    c.n = 4;
    c.strategy = s;
    c.dealer = DealerKind::kRandom;
    c.seed = 1000;
    c.games = 12;
    const BatchResult a = run_batch(c);
    c.threads = 3;
    const BatchResult b = run_batch(c);
    REQUIRE(a.games.size() == b.games.size());
    for (std::size_t g = 0; g < a.games.size(); ++g) {
      CHECK(to_json(a.games[g].transcript) == to_json(b.games[g].transcript));
      CHECK(a.games[g].transcript.seed == 1000 + g);
    }
    CHECK(a.summary.verified == 12);
  }
}

TEST_CASE("dealers") {
  PlayConfig c;
  c.n = 3;
  c.strategy = StrategyKind::kCommonVector;
  c.dealer = DealerKind::kRandomCommon;
  c.games = 20;
  const BatchResult r = run_batch(c);
  CHECK(r.summary.completed == 20);
  for (const GameRecord& g : r.games) {
    for (const VectorList& row : g.transcript.rows) {
      CHECK(std::count(row.begin(), row.end(), standard_vector(3, 2)) == 1);
    }
  }

  PlayConfig scripted;
  scripted.n = 2;
  scripted.strategy = StrategyKind::kMatching;
  scripted.dealer = DealerKind::kScripted;
  scripted.script = {standard_row(2)};
  const BatchResult s = run_batch(scripted);
  CHECK(s.games[0].transcript.verdict.kind == VerdictKind::kDealerDisqualified);
  CHECK(s.summary.verified == 1);

  PlayConfig odd;
  odd.n = 3;
  odd.p = 7;
  CHECK_THROWS_AS(run_batch(odd), Error);
}

TEST_CASE("seeded transcripts record their seed vectors") {
  PlayConfig c;
  c.n = 4;
  c.strategy = StrategyKind::kSeededCertificate;
  c.dealer = DealerKind::kRandom;
  c.rows = 3;
  c.games = 10;
  const BatchResult r = run_batch(c);
  CHECK(r.summary.verified == 10);
  for (const GameRecord& g : r.games) {
    CHECK(g.transcript.seed_columns.size() == 4);
    CHECK(g.transcript.rows.size() == 3);
  }
}

}  // TEST_SUITE
