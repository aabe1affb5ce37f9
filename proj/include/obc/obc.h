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

#ifndef OBC_OBC_H_
#define OBC_OBC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(OBC_BUILDING_LIBRARY)
#define OBC_API __attribute__((visibility("default")))
#else
#define OBC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum obc_status {
  OBC_OK = 0,
  OBC_ERR_INVALID_ARGUMENT = 1,
  OBC_ERR_SHAPE = 2,
  OBC_ERR_INVALID_SUBSPACE = 3,
  OBC_ERR_ORDER_UNAVAILABLE = 4,
  OBC_ERR_SEARCH_EXHAUSTED = 5,
  OBC_ERR_RESOURCE = 6,
  OBC_ERR_OVERFLOW = 7,
  OBC_ERR_STRATEGY_STUCK = 8,
  OBC_ERR_SEEDING = 9,
  OBC_ERR_ADVERSARY_REFUTED = 10,
  OBC_ERR_INTERNAL = 11,
  OBC_ERR_PARSE = 12,
  OBC_ERR_IO = 13,
} obc_status;

OBC_API const char* obc_version(void);
OBC_API const char* obc_status_string(obc_status status);
// Message of the last failed call on this thread; empty after a success.
OBC_API const char* obc_last_error(void);
// Releases strings returned through char** out-parameters.
OBC_API void obc_string_free(char* s);

/* Latin squares. */

// Signed count of n x n Latin squares (fixed_diagonal != 0: constant
// diagonal n). threads = 0 uses every hardware thread.
OBC_API obc_status obc_census(int n, int fixed_diagonal, unsigned threads, int64_t* out);
// masks[j] is column j's top-entry set, bit s - 1 for symbol s.
OBC_API obc_status obc_signed_completions(int n, const uint32_t* masks, unsigned threads,
                                          int64_t* out);

/* Prime fields. */

OBC_API obc_status obc_find_game_prime(int n, const int64_t* root_orders, size_t num_orders,
                                       const int64_t* avoid, size_t num_avoid, uint32_t* out);
OBC_API obc_status obc_root_of_unity(uint32_t p, uint32_t m, uint32_t* out);

/* Certificate chains. */

typedef struct obc_chain obc_chain;

// variant: "standard" or "common_vector"; modulus 0 builds over the integers.
OBC_API obc_status obc_chain_build(int n, uint32_t modulus, const char* variant, unsigned threads,
                                   obc_chain** out);
OBC_API obc_status obc_chain_from_json(const char* json, obc_chain** out);
OBC_API obc_status obc_chain_load(const char* path, obc_chain** out);
OBC_API obc_status obc_chain_to_json(const obc_chain* chain, char** out);
OBC_API obc_status obc_chain_save(const obc_chain* chain, const char* path);
OBC_API int obc_chain_n(const obc_chain* chain);
OBC_API uint32_t obc_chain_modulus(const obc_chain* chain);
OBC_API obc_status obc_chain_support(const obc_chain* chain, int k, uint64_t* out);
// masks holds n subsets of size k.
OBC_API obc_status obc_chain_coefficient(const obc_chain* chain, int k, const uint32_t* masks,
                                         int64_t* out);
// Re-derives every invariant. *pass is 1 when all checks hold.
OBC_API obc_status obc_chain_check(const obc_chain* chain, uint64_t seed, int* pass,
                                   char** report_json);
OBC_API void obc_chain_free(obc_chain* chain);

/* Games. */

typedef struct obc_play_config {
  int n;
  // 0 picks the smallest admissible prime.
  uint32_t p;
  // certificate | matching | random_valid | seeded_certificate | common_vector | identity
  const char* strategy;
  // standard | random | scripted | adversary | random_common
  const char* dealer;
  uint64_t seed;
  int games;
  // Rows to deal; 0 means n.
  int rows;
  int threads;
  int verify;
  // JSON array of rows (each an array of residue vectors) for the scripted dealer.
  const char* script_json;
} obc_play_config;

typedef struct obc_batch obc_batch;

OBC_API void obc_play_config_init(obc_play_config* config);
OBC_API obc_status obc_play(const obc_play_config* config, obc_batch** out);
// {n, p, strategy, dealer, seed, summary}
OBC_API obc_status obc_batch_summary_json(const obc_batch* batch, char** out);
OBC_API size_t obc_batch_game_count(const obc_batch* batch);
// {transcript, verify?, adversary?, outcome?}
OBC_API obc_status obc_batch_game_json(const obc_batch* batch, size_t index, char** out);
OBC_API void obc_batch_free(obc_batch* batch);

/* Transcripts. */

// Checks a transcript document; chain may be NULL.
OBC_API obc_status obc_verify_transcript(const char* transcript_json, const obc_chain* chain,
                                         int* pass, char** report_json);
// Hall violations of the columns after `step` placed rows (-1: all placed).
OBC_API obc_status obc_hall_report(const char* transcript_json, int step, char** report_json);

#ifdef __cplusplus
}
#endif

#endif  // OBC_OBC_H_
