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

#include <stdexcept>
#include <string>

namespace obc {

// Closed set of failure categories. The C API maps these one-to-one onto
// obc_status values, so the numeric order must stay in sync with obc.h.
enum class ErrorCode {
  kInvalidArgument = 1,
  kShape,
  kInvalidSubspace,
  kOrderUnavailable,
  kSearchExhausted,
  kResource,
  kOverflow,
  kStrategyStuck,
  kSeeding,
  kAdversaryRefuted,
  kInternal,
  kParse,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kInvalidSubspace: return "invalid_subspace";
    case ErrorCode::kOrderUnavailable: return "order_unavailable";
    case ErrorCode::kSearchExhausted: return "search_exhausted";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kStrategyStuck: return "strategy_stuck";
    case ErrorCode::kSeeding: return "seeding";
    case ErrorCode::kAdversaryRefuted: return "adversary_refuted";
    case ErrorCode::kInternal: return "internal";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace obc
