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

#include "core/serialize.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace obc {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

template <typename T>
T field_as(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    parse_error(std::string("field '") + key + "' has the wrong type");
  }
}

Json vectors_to_json(const VectorList& vs) {
  Json out = Json::array();
  for (const Vector& v : vs) out.push_back(v);
  return out;
}

VectorList vectors_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of vectors");
  VectorList out;
  for (const Json& v : j) {
    if (!v.is_array()) parse_error("expected a vector");
    Vector vec;
    for (const Json& x : v) {
      if (!x.is_number_unsigned()) parse_error("residues must be non-negative integers");
      vec.push_back(x.get<Scalar>());
    }
    out.push_back(std::move(vec));
  }
  return out;
}

}  // namespace

Json subset_to_json(SubsetMask mask) {
  Json out = Json::array();
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1) out.push_back(i + 1);
  }
  return out;
}

SubsetMask subset_from_json(const Json& j, int n) {
  if (!j.is_array()) parse_error("subset must be an array");
  SubsetMask mask = 0;
  int previous = 0;
  for (const Json& x : j) {
    if (!x.is_number_integer()) parse_error("subset entries must be integers");
    const int s = x.get<int>();
    if (s < 1 || s > n || s <= previous) parse_error("subset entries must be increasing in 1..n");
    mask |= SubsetMask{1} << (s - 1);
    previous = s;
  }
  return mask;
}

Json to_json(const KVector& w) {
  Json out = Json::array();
  for (const auto& [mask, value] : w.coords()) out.push_back(Json::array({subset_to_json(mask), value}));
  return out;
}

Json chain_to_json(const CertificateChain& chain) {
  const int n = chain.n();
  Json levels = Json::array();
  for (int k = n; k >= 0; --k) {
    Json entries = Json::array();
    for (const FormEntry& e : chain.level(k).entries) {
      Json tuple = Json::array();
      for (SubsetMask m : unpack_tuple(e.key, n)) tuple.push_back(subset_to_json(m));
      entries.push_back(Json::array({tuple, std::to_string(e.value)}));
    }
    levels.push_back({{"k", k}, {"entries", entries}});
  }
  return {{"format", "obc-chain"},
          {"version", 1},
          {"n", n},
          {"modulus", chain.modulus()},
          {"variant", variant_name(chain.variant())},
          {"levels", levels}};
}

CertificateChain chain_from_json(const Json& j) {
  if (field_as<std::string>(j, "format") != "obc-chain") parse_error("not an obc-chain document");
  if (field_as<int>(j, "version") != 1) parse_error("unsupported chain version");
  const int n = field_as<int>(j, "n");
  if (n < 1 || n > kMaxChainDim) parse_error("chain n out of range");
  const auto modulus = field_as<std::uint32_t>(j, "modulus");
  if (modulus != 0 && (!is_prime(modulus) || modulus <= static_cast<std::uint32_t>(n))) {
    parse_error("chain modulus must be 0 or a prime above n");
  }
  ChainVariant variant = ChainVariant::kStandard;
  if (j.contains("variant")) {
    const auto name = field_as<std::string>(j, "variant");
    if (name == "common_vector") {
      variant = ChainVariant::kCommonVector;
    } else if (name != "standard") {
      parse_error("unknown chain variant '" + name + "'");
    }
  }
  const Json& levels = j.at("levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != n + 1) {
    parse_error("chain must list n + 1 levels");
  }
  std::vector<CertificateForm> forms(n + 1);
  for (int idx = 0; idx <= n; ++idx) {
    const int k = field_as<int>(levels[idx], "k");
    if (k != n - idx) parse_error("levels must run from n down to 0");
    CertificateForm form{n, k, modulus, {}};
    const Json& entries = levels[idx].at("entries");
    if (!entries.is_array()) parse_error("entries must be an array");
    for (const Json& entry : entries) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
          static_cast<int>(entry[0].size()) != n || !entry[1].is_string()) {
        parse_error("entry must be [[subset x n], \"value\"]");
      }
      std::vector<SubsetMask> masks;
      for (const Json& s : entry[0]) {
        masks.push_back(subset_from_json(s, n));
        if (popcount(masks.back()) != k) parse_error("subset size does not match level");
      }
      std::int64_t value = 0;
      try {
        std::size_t used = 0;
        const std::string text = entry[1].get<std::string>();
        value = std::stoll(text, &used);
        if (used != text.size()) parse_error("malformed value");
      } catch (const std::logic_error&) {
        parse_error("malformed value");
      }
      if (value == 0 || (modulus != 0 && (value < 0 || value >= modulus))) {
        parse_error("values must be nonzero (and residues when a modulus is set)");
      }
      form.entries.push_back({pack_tuple(masks, n), value});
    }
    std::sort(form.entries.begin(), form.entries.end(),
              [](const FormEntry& a, const FormEntry& b) { return a.key < b.key; });
    for (std::size_t i = 1; i < form.entries.size(); ++i) {
      if (form.entries[i].key == form.entries[i - 1].key) parse_error("duplicate tuple in level");
    }
    forms[k] = std::move(form);
  }
  return CertificateChain(n, modulus, variant, std::move(forms));
}

Json to_json(const Transcript& t) {
  Json rows = Json::array();
  for (const VectorList& row : t.rows) rows.push_back(vectors_to_json(row));
  Json perms = Json::array();
  for (const Permutation& perm : t.permutations) {
    Json one = Json::array();
    for (int x : perm) one.push_back(x + 1);
    perms.push_back(one);
  }
  Json verdict = {{"kind", verdict_name(t.verdict.kind)}};
  if (t.verdict.kind != VerdictKind::kCompleted) {
    verdict["step"] = t.verdict.step;
    verdict["reason"] = t.verdict.reason;
  }
  Json out = {{"format", "obc-transcript"},
              {"version", 1},
              {"n", t.n},
              {"p", t.p},
              {"strategy", t.strategy},
              {"dealer", t.dealer},
              {"seed", t.seed},
              {"rows_expected", t.rows_expected},
              {"rows", rows},
              {"permutations", perms},
              {"certificate_values", t.certificate_values ? Json(*t.certificate_values) : Json()},
              {"verdict", verdict},
              {"final_columns_ok", t.final_columns_ok}};
  if (!t.seed_columns.empty()) {
    Json seeds = Json::array();
    for (const VectorList& c : t.seed_columns) seeds.push_back(vectors_to_json(c));
    out["seed_columns"] = seeds;
  }
  return out;
}

Transcript transcript_from_json(const Json& j) {
  if (field_as<std::string>(j, "format") != "obc-transcript") {
    parse_error("not an obc-transcript document");
  }
  if (field_as<int>(j, "version") != 1) parse_error("unsupported transcript version");
  Transcript t;
  t.n = field_as<int>(j, "n");
  t.p = field_as<std::uint32_t>(j, "p");
  t.strategy = field_as<std::string>(j, "strategy");
  t.dealer = field_as<std::string>(j, "dealer");
  t.seed = field_as<std::uint64_t>(j, "seed");
  t.rows_expected = field_as<int>(j, "rows_expected");
  if (t.n < 1 || t.n > kMaxExteriorDim) parse_error("transcript n out of range");
  for (const Json& row : j.at("rows")) t.rows.push_back(vectors_from_json(row));
  for (const Json& perm : j.at("permutations")) {
    if (!perm.is_array()) parse_error("permutation must be an array");
    Permutation one;
    for (const Json& x : perm) {
      if (!x.is_number_integer()) parse_error("permutation entries must be integers");
      one.push_back(x.get<int>() - 1);
    }
    t.permutations.push_back(std::move(one));
  }
  if (j.contains("seed_columns")) {
    for (const Json& c : j.at("seed_columns")) t.seed_columns.push_back(vectors_from_json(c));
  }
  if (j.contains("certificate_values") && !j.at("certificate_values").is_null()) {
    t.certificate_values = j.at("certificate_values").get<std::vector<Scalar>>();
  }
  const Json& verdict = j.at("verdict");
  const auto kind = field_as<std::string>(verdict, "kind");
  if (kind == "completed") {
    t.verdict.kind = VerdictKind::kCompleted;
  } else if (kind == "strategy_error") {
    t.verdict.kind = VerdictKind::kStrategyError;
  } else if (kind == "dealer_disqualified") {
    t.verdict.kind = VerdictKind::kDealerDisqualified;
  } else {
    parse_error("unknown verdict '" + kind + "'");
  }
  if (t.verdict.kind != VerdictKind::kCompleted) {
    t.verdict.step = field_as<int>(verdict, "step");
    t.verdict.reason = field_as<std::string>(verdict, "reason");
  }
  t.final_columns_ok = field_as<bool>(j, "final_columns_ok");
  return t;
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"pass", report.all_pass()}, {"checks", checks}};
}

Json to_json(const HallReport& report) {
  Json violations = Json::array();
  for (const HallViolation& v : report.violations) {
    Json cols = Json::array();
    for (int c : v.columns) cols.push_back(c + 1);
    violations.push_back({{"columns", cols}, {"dimension", v.dimension}});
  }
  return {{"step", report.step}, {"violations", violations}};
}

Json to_json(const AdversaryDiagnostics& d) {
  Json out = {{"graph_two_regular", d.graph_two_regular},
              {"probe_reached_placement", d.probe_reached_placement},
              {"probe_forced_into_cycle", d.probe_forced_into_cycle},
              {"normals_annihilate_columns", d.normals_annihilate_columns},
              {"z_determinant", d.z_determinant},
              {"z_determinant_formula", d.z_determinant_formula},
              {"cycle_intersection_dim", d.cycle_intersection_dim},
              {"trap_in_all_columns", d.trap_in_all_columns},
              {"every_final_placement_fails", d.every_final_placement_fails}};
  if (d.graph) {
    Json edges = Json::array();
    for (const auto& [a, b] : d.graph->edges) edges.push_back({a + 1, b + 1});
    out["missing_pairs"] = edges;
  }
  if (d.cycle) {
    Json cols = Json::array(), syms = Json::array();
    for (int c : d.cycle->columns) cols.push_back(c + 1);
    for (int s : d.cycle->symbols) syms.push_back(s + 1);
    out["cycle"] = {{"length", d.cycle->length()}, {"columns", cols}, {"symbols", syms}};
    out["zeta"] = d.zeta;
  }
  if (d.trap) out["trap_vector"] = *d.trap;
  return out;
}

}  // namespace obc
