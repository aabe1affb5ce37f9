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

#include "core/game.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "core/error.hpp"
#include "core/extalg.hpp"
#include "core/strategy.hpp"

namespace obc {

namespace {

bool well_formed_row(const VectorList& row, int n, std::uint32_t p) {
  if (static_cast<int>(row.size()) != n) return false;
  return std::all_of(row.begin(), row.end(), [&](const Vector& v) {
    return static_cast<int>(v.size()) == n &&
           std::all_of(v.begin(), v.end(), [&](Scalar x) { return x < p; });
  });
}

bool all_independent(const Field& field, const std::vector<VectorList>& columns, int n) {
  return std::all_of(columns.begin(), columns.end(),
                     [&](const VectorList& c) { return is_independent(field, c, n); });
}

VectorList span_basis(const Field& field, const VectorList& vectors, int n) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(vectors, n);
  const auto pivots = row_reduce(field, m);
  VectorList out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(static_cast<int>(r)));
  return out;
}

std::string step_text(int step) { return "step " + std::to_string(step); }

}  // namespace

const char* verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kCompleted: return "completed";
    case VerdictKind::kStrategyError: return "strategy_error";
    case VerdictKind::kDealerDisqualified: return "dealer_disqualified";
  }
  return "unknown";
}

Transcript play(int n, const Field& field, Strategy& strategy, Dealer& dealer, int rows_to_deal,
                std::uint64_t seed) {
  Transcript t;
  t.n = n;
  t.p = field.modulus();
  t.strategy = strategy.id();
  t.dealer = dealer.id();
  t.seed = seed;
  t.rows_expected = rows_to_deal;
  std::vector<VectorList> columns(n);
  const bool has_values = strategy.certificate_value().has_value();
  if (has_values) t.certificate_values.emplace();

  for (int step = 1; step <= rows_to_deal; ++step) {
    TableView view{n, field, t.rows, t.permutations, columns};
    VectorList row = dealer.deal(view);
    const bool basis = well_formed_row(row, n, field.modulus()) && is_independent(field, row, n);
    t.rows.push_back(std::move(row));
    if (!basis) {
      t.verdict = {VerdictKind::kDealerDisqualified, step, "dealt_row_not_a_basis"};
      break;
    }
    std::optional<Permutation> perm = strategy.place(t.rows.back());
    if (!perm) {
      t.verdict = {VerdictKind::kStrategyError, step, strategy.failure_reason()};
      break;
    }
    t.permutations.push_back(*perm);
    if (!is_bijection(*perm, n)) {
      t.verdict = {VerdictKind::kStrategyError, step, "invalid_permutation"};
      break;
    }
    for (int j = 0; j < n; ++j) columns[j].push_back(t.rows.back()[(*perm)[j]]);
    if (has_values) {
      auto value = strategy.certificate_value();
      t.certificate_values->push_back(value.value_or(0));
    }
    if (!all_independent(field, columns, n)) {
      t.verdict = {VerdictKind::kStrategyError, step, "dependent_column"};
      break;
    }
  }
  t.final_columns_ok = t.verdict.kind == VerdictKind::kCompleted &&
                       static_cast<int>(t.permutations.size()) == rows_to_deal &&
                       all_independent(field, columns, n);
  return t;
}

std::vector<VectorList> columns_of(const Transcript& t, std::size_t placed_rows) {
  std::vector<VectorList> columns(t.n);
  for (std::size_t i = 0; i < placed_rows && i < t.permutations.size(); ++i) {
    for (int j = 0; j < t.n; ++j) columns[j].push_back(t.rows.at(i).at(t.permutations[i].at(j)));
  }
  return columns;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifyReport verify_transcript(const Transcript& t, const CertificateChain* chain) {
  VerifyReport report;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const int n = t.n;
  if (n < 1 || !is_prime(t.p) || t.p >= (1u << 31)) {
    add("field", false, "invalid n or modulus");
    return report;
  }
  const Field field(t.p);

  bool shapes = t.permutations.size() <= t.rows.size() &&
                static_cast<int>(t.rows.size()) <= std::max(t.rows_expected, 0);
  const bool disqualified = t.verdict.kind == VerdictKind::kDealerDisqualified;
  // A disqualifying row may be malformed; it only has to be the last one.
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const bool exempt = disqualified && i + 1 == t.rows.size();
    shapes = shapes && (exempt || well_formed_row(t.rows[i], n, t.p));
  }
  for (const Permutation& perm : t.permutations) {
    shapes = shapes && perm.size() == static_cast<std::size_t>(n) &&
             std::all_of(perm.begin(), perm.end(), [n](int x) { return x >= 0 && x < n; });
  }
  add("shape", shapes);
  if (!shapes) return report;

  int bad_row = 0;
  for (std::size_t i = 0; i < t.rows.size() && bad_row == 0; ++i) {
    if (!well_formed_row(t.rows[i], n, t.p) || !is_independent(field, t.rows[i], n)) {
      bad_row = static_cast<int>(i) + 1;
    }
  }
  if (disqualified) {
    add("rows_are_bases", bad_row == t.verdict.step && bad_row == static_cast<int>(t.rows.size()),
        bad_row ? "non-basis at " + step_text(bad_row) : "dealer disqualified without cause");
  } else {
    add("rows_are_bases", bad_row == 0, bad_row ? "non-basis at " + step_text(bad_row) : "");
  }

  int bad_perm = 0;
  for (std::size_t i = 0; i < t.permutations.size() && bad_perm == 0; ++i) {
    if (!is_bijection(t.permutations[i], n)) bad_perm = static_cast<int>(i) + 1;
  }
  const bool perm_claimed = t.verdict.kind == VerdictKind::kStrategyError &&
                            t.verdict.reason == "invalid_permutation";
  add("permutations_bijective", perm_claimed ? bad_perm == t.verdict.step : bad_perm == 0,
      bad_perm ? "not a bijection at " + step_text(bad_perm) : "");

  int dependent_at = 0;
  std::vector<VectorList> columns(n);
  for (std::size_t i = 0; i < t.permutations.size() && dependent_at == 0; ++i) {
    for (int j = 0; j < n; ++j) columns[j].push_back(t.rows[i][t.permutations[i][j]]);
    if (!all_independent(field, columns, n)) dependent_at = static_cast<int>(i) + 1;
  }
  const bool dependent_claimed = t.verdict.kind == VerdictKind::kStrategyError &&
                                 t.verdict.reason == "dependent_column";
  if (perm_claimed && dependent_at == bad_perm) dependent_at = 0;
  add("columns_independent",
      dependent_claimed ? dependent_at == t.verdict.step : dependent_at == 0,
      dependent_at ? "dependent column at " + step_text(dependent_at) : "");

  const int dealt = static_cast<int>(t.rows.size());
  const int placed = static_cast<int>(t.permutations.size());
  bool verdict_ok = false;
  switch (t.verdict.kind) {
    case VerdictKind::kCompleted:
      verdict_ok = dealt == t.rows_expected && placed == dealt;
      break;
    case VerdictKind::kStrategyError:
      verdict_ok = t.verdict.step == dealt && (placed == dealt || placed == dealt - 1);
      break;
    case VerdictKind::kDealerDisqualified:
      verdict_ok = t.verdict.step == dealt && placed == dealt - 1;
      break;
  }
  add("verdict", verdict_ok, verdict_name(t.verdict.kind));

  const bool final_ok = t.verdict.kind == VerdictKind::kCompleted && placed == t.rows_expected &&
                        all_independent(field, columns_of(t, placed), n);
  add("final_columns_ok", final_ok == t.final_columns_ok,
      "claimed " + std::string(t.final_columns_ok ? "true" : "false"));

  if (t.certificate_values) {
    const bool common = t.strategy == "common_vector";
    const bool seeded = t.strategy == "seeded_certificate";
    const ChainVariant variant = common ? ChainVariant::kCommonVector : ChainVariant::kStandard;
    std::unique_ptr<CertificateChain> own;
    if (!chain || chain->n() != n || chain->variant() != variant ||
        (chain->modulus() != 0 && chain->modulus() != t.p)) {
      ChainOptions options;
      options.variant = variant;
      own = std::make_unique<CertificateChain>(build_chain(n, t.p, options));
      chain = own.get();
    }
    const int seed_level = seeded ? n - t.rows_expected : 0;
    bool values_ok = t.certificate_values->size() == t.permutations.size() - (perm_claimed ? 1 : 0) &&
                     (!seeded || static_cast<int>(t.seed_columns.size()) == n);
    std::string detail;
    for (std::size_t i = 0; values_ok && i < t.certificate_values->size(); ++i) {
      std::vector<KVector> omegas;
      for (int j = 0; j < n; ++j) {
        VectorList column = seeded ? t.seed_columns[j] : VectorList{};
        for (std::size_t r = 0; r <= i; ++r) {
          Vector v = t.rows[r][t.permutations[r][j]];
          if (common && v != standard_vector(n, n - 1)) v = project_off_last(v);
          column.push_back(std::move(v));
        }
        omegas.push_back(pure(field, column, n));
      }
      const int level = seed_level + static_cast<int>(i) + 1;
      const Scalar expected = eval(field, chain->level(level), omegas);
      if (expected != (*t.certificate_values)[i]) {
        values_ok = false;
        detail = "value mismatch at " + step_text(static_cast<int>(i) + 1);
      }
    }
    if (values_ok == false && detail.empty()) detail = "value count mismatch";
    add("certificate_values", values_ok, detail);
  }
  return report;
}

HallReport hall_report(const Field& field, const std::vector<VectorList>& columns, int n,
                       int step) {
  if (n < 1 || n > 12) throw Error(ErrorCode::kResource, "Hall scan supports n <= 12");
  if (static_cast<int>(columns.size()) != n) throw Error(ErrorCode::kShape, "expected n columns");
  std::vector<VectorList> spaces;
  for (const VectorList& c : columns) spaces.push_back(span_basis(field, c, n));
  HallReport report;
  report.step = step;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    std::vector<VectorList> chosen;
    std::vector<int> members;
    for (int j = 0; j < n; ++j) {
      if ((subset >> j) & 1) {
        chosen.push_back(spaces[j]);
        members.push_back(j);
      }
    }
    const int dim = static_cast<int>(intersection_basis(field, chosen, n).size());
    if (dim > n - static_cast<int>(members.size())) {
      report.violations.push_back({std::move(members), dim});
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const HallViolation& a, const HallViolation& b) {
              return a.columns.size() != b.columns.size() ? a.columns.size() < b.columns.size()
                                                          : a.columns < b.columns;
            });
  return report;
}

}  // namespace obc
