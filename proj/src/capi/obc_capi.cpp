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

#include "obc/obc.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "core/chain_check.hpp"
#include "core/error.hpp"
#include "core/latin.hpp"
#include "core/serialize.hpp"
#include "core/session.hpp"

struct obc_chain {
  std::shared_ptr<const obc::CertificateChain> chain;
};

struct obc_batch {
  obc::BatchResult result;
};

namespace {

thread_local std::string last_error;

obc_status fail(obc_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
obc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return OBC_OK;
  } catch (const obc::Error& e) {
    return fail(static_cast<obc_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(OBC_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OBC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(OBC_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw obc::Error(obc::ErrorCode::kInvalidArgument, message);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

obc::Json parse(const char* text) {
  require(text != nullptr, "null JSON text");
  try {
    return obc::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw obc::Error(obc::ErrorCode::kParse, e.what());
  }
}

std::string read_file(const char* path) {
  require(path != nullptr, "null path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw obc::Error(obc::ErrorCode::kIo, std::string("cannot open ") + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

obc::ChainVariant variant_from(const char* name) {
  if (name == nullptr || std::strcmp(name, "standard") == 0) return obc::ChainVariant::kStandard;
  if (std::strcmp(name, "common_vector") == 0) return obc::ChainVariant::kCommonVector;
  throw obc::Error(obc::ErrorCode::kInvalidArgument, std::string("unknown variant ") + name);
}

obc::Transcript transcript_from(const char* text) {
  return obc::transcript_from_json(parse(text));
}

}  // namespace

extern "C" {

const char* obc_version(void) { return "1.0.0"; }

const char* obc_status_string(obc_status status) {
  if (status == OBC_OK) return "ok";
  if (status < OBC_ERR_INVALID_ARGUMENT || status > OBC_ERR_IO) return "unknown";
  return obc::error_code_name(static_cast<obc::ErrorCode>(status));
}

const char* obc_last_error(void) { return last_error.c_str(); }

void obc_string_free(char* s) { std::free(s); }

obc_status obc_census(int n, int fixed_diagonal, unsigned threads, int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    obc::CensusOptions options;
    options.threads = threads;
    *out = fixed_diagonal ? obc::census_signed_fixed_diagonal(n, options)
                          : obc::census_signed(n, options);
  });
}

obc_status obc_signed_completions(int n, const uint32_t* masks, unsigned threads, int64_t* out) {
  return guarded([&] {
    require(out != nullptr && (masks != nullptr || n == 0), "null argument");
    obc::CensusOptions options;
    options.threads = threads;
    *out = obc::signed_completions(n, std::span<const uint32_t>(masks, n), options);
  });
}

obc_status obc_find_game_prime(int n, const int64_t* root_orders, size_t num_orders,
                               const int64_t* avoid, size_t num_avoid, uint32_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(root_orders != nullptr || num_orders == 0, "null root orders");
    require(avoid != nullptr || num_avoid == 0, "null avoid list");
    *out = obc::find_game_prime(n, std::span<const int64_t>(root_orders, num_orders),
                                std::span<const int64_t>(avoid, num_avoid))
               .p;
  });
}

obc_status obc_root_of_unity(uint32_t p, uint32_t m, uint32_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(obc::is_prime(p), "p must be prime");
    *out = obc::root_of_unity(obc::Field(p), m);
  });
}

obc_status obc_chain_build(int n, uint32_t modulus, const char* variant, unsigned threads,
                           obc_chain** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    obc::ChainOptions options;
    options.variant = variant_from(variant);
    options.threads = threads;
    *out = new obc_chain{
        std::make_shared<obc::CertificateChain>(obc::build_chain(n, modulus, options))};
  });
}

obc_status obc_chain_from_json(const char* json, obc_chain** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new obc_chain{
        std::make_shared<obc::CertificateChain>(obc::chain_from_json(parse(json)))};
  });
}

obc_status obc_chain_load(const char* path, obc_chain** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const std::string text = read_file(path);
    *out = new obc_chain{
        std::make_shared<obc::CertificateChain>(obc::chain_from_json(parse(text.c_str())))};
  });
}

obc_status obc_chain_to_json(const obc_chain* chain, char** out) {
  return guarded([&] {
    require(chain != nullptr && out != nullptr, "null argument");
    *out = copy_string(obc::chain_to_json(*chain->chain).dump());
  });
}

obc_status obc_chain_save(const obc_chain* chain, const char* path) {
  return guarded([&] {
    require(chain != nullptr && path != nullptr, "null argument");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw obc::Error(obc::ErrorCode::kIo, std::string("cannot write ") + path);
    file << obc::chain_to_json(*chain->chain).dump() << '\n';
    if (!file) throw obc::Error(obc::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

int obc_chain_n(const obc_chain* chain) { return chain ? chain->chain->n() : 0; }

uint32_t obc_chain_modulus(const obc_chain* chain) {
  return chain ? chain->chain->modulus() : 0;
}

obc_status obc_chain_support(const obc_chain* chain, int k, uint64_t* out) {
  return guarded([&] {
    require(chain != nullptr && out != nullptr, "null argument");
    *out = chain->chain->level(k).entries.size();
  });
}

obc_status obc_chain_coefficient(const obc_chain* chain, int k, const uint32_t* masks,
                                 int64_t* out) {
  return guarded([&] {
    require(chain != nullptr && masks != nullptr && out != nullptr, "null argument");
    const int n = chain->chain->n();
    *out = chain->chain->level(k).coefficient(std::span<const uint32_t>(masks, n));
  });
}

obc_status obc_chain_check(const obc_chain* chain, uint64_t seed, int* pass, char** report_json) {
  return guarded([&] {
    require(chain != nullptr && pass != nullptr, "null argument");
    const obc::VerifyReport report = obc::check_chain(*chain->chain, seed);
    *pass = report.all_pass() ? 1 : 0;
    if (report_json != nullptr) *report_json = copy_string(obc::to_json(report).dump());
  });
}

void obc_chain_free(obc_chain* chain) { delete chain; }

void obc_play_config_init(obc_play_config* config) {
  if (config == nullptr) return;
  *config = obc_play_config{};
  config->n = 4;
  config->strategy = "certificate";
  config->dealer = "standard";
  config->games = 1;
  config->threads = 1;
  config->verify = 1;
}

obc_status obc_play(const obc_play_config* config, obc_batch** out) {
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    require(config->strategy != nullptr && config->dealer != nullptr, "strategy and dealer required");
    obc::PlayConfig c;
    c.n = config->n;
    c.p = config->p;
    c.strategy = obc::parse_strategy(config->strategy);
    c.dealer = obc::parse_dealer(config->dealer);
    c.seed = config->seed;
    c.games = config->games;
    c.rows = config->rows;
    c.threads = config->threads;
    c.verify = config->verify != 0;
    if (c.dealer == obc::DealerKind::kScripted) {
      require(config->script_json != nullptr, "the scripted dealer needs a script");
      const obc::Json script = parse(config->script_json);
      if (!script.is_array()) throw obc::Error(obc::ErrorCode::kParse, "script must be an array");
      for (const obc::Json& row : script) {
        c.script.push_back(row.get<obc::VectorList>());
      }
    }
    *out = new obc_batch{obc::run_batch(c)};
  });
}

obc_status obc_batch_summary_json(const obc_batch* batch, char** out) {
  return guarded([&] {
    require(batch != nullptr && out != nullptr, "null argument");
    const obc::BatchResult& r = batch->result;
    const obc::Json j = {{"n", r.config.n},
                         {"p", r.p},
                         {"strategy", obc::strategy_name(r.config.strategy)},
                         {"dealer", obc::dealer_name(r.config.dealer)},
                         {"seed", r.config.seed},
                         {"summary", obc::to_json(r.summary)}};
    *out = copy_string(j.dump());
  });
}

size_t obc_batch_game_count(const obc_batch* batch) {
  return batch ? batch->result.games.size() : 0;
}

obc_status obc_batch_game_json(const obc_batch* batch, size_t index, char** out) {
  return guarded([&] {
    require(batch != nullptr && out != nullptr, "null argument");
    if (index >= batch->result.games.size()) {
      throw obc::Error(obc::ErrorCode::kInvalidArgument, "game index out of range");
    }
    *out = copy_string(obc::to_json(batch->result.games[index]).dump());
  });
}

void obc_batch_free(obc_batch* batch) { delete batch; }

obc_status obc_verify_transcript(const char* transcript_json, const obc_chain* chain, int* pass,
                                 char** report_json) {
  return guarded([&] {
    require(pass != nullptr, "null argument");
    const obc::Transcript t = transcript_from(transcript_json);
    const obc::VerifyReport report =
        obc::verify_transcript(t, chain ? chain->chain.get() : nullptr);
    *pass = report.all_pass() ? 1 : 0;
    if (report_json != nullptr) *report_json = copy_string(obc::to_json(report).dump());
  });
}

obc_status obc_hall_report(const char* transcript_json, int step, char** report_json) {
  return guarded([&] {
    require(report_json != nullptr, "null argument");
    const obc::Transcript t = transcript_from(transcript_json);
    require(obc::is_prime(t.p), "transcript p must be prime");
    const int placed = static_cast<int>(t.permutations.size());
    if (step < 0) step = placed;
    if (step > placed) throw obc::Error(obc::ErrorCode::kInvalidArgument, "step beyond placed rows");
    for (int i = 0; i < step; ++i) {
      if (!obc::is_bijection(t.permutations[i], t.n) ||
          static_cast<int>(t.rows[i].size()) != t.n) {
        throw obc::Error(obc::ErrorCode::kShape, "malformed placement at step " + std::to_string(i + 1));
      }
    }
    const obc::HallReport report =
        obc::hall_report(obc::Field(t.p), obc::columns_of(t, step), t.n, step);
    *report_json = copy_string(obc::to_json(report).dump());
  });
}

}  // extern "C"
