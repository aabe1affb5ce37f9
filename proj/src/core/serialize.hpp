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

#include <json.hpp>

#include "core/adversary.hpp"
#include "core/certificate.hpp"
#include "core/extalg.hpp"
#include "core/game.hpp"

namespace obc {

using Json = nlohmann::json;

// Sorted 1-based symbol lists.
Json subset_to_json(SubsetMask mask);
SubsetMask subset_from_json(const Json& j, int n);

Json to_json(const KVector& w);

// {format: "obc-chain", version: 1, n, modulus (0 = integers), variant,
//  levels: [{k, entries: [[[subset] x n, "value"], ...]}, ...]}
// Levels run from n down to 0; entries are in lexicographic mask order.
Json chain_to_json(const CertificateChain& chain);
// Throws kParse on any schema violation.
CertificateChain chain_from_json(const Json& j);

Json to_json(const Transcript& t);
Transcript transcript_from_json(const Json& j);

Json to_json(const VerifyReport& report);
Json to_json(const HallReport& report);
Json to_json(const AdversaryDiagnostics& diag);

}  // namespace obc
