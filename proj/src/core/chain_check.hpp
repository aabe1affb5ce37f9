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

#include "core/certificate.hpp"
#include "core/game.hpp"
#include "core/rng.hpp"

namespace obc {

// Re-derives a chain's invariants: top form, symbol regularity, the build
// recurrence level by level, the terminal census, the parity of level n - 2,
// downward vanishing, and (n <= 5) a randomized contraction identity.
VerifyReport check_chain(const CertificateChain& chain, std::uint64_t seed = 1);

// Both sides of the contraction identity at level k for random inputs drawn
// from `rng`. Standard chains use all permutations; common-vector chains fix
// e_n in column k and the remaining vectors in span(e_1..e_{n-1}).
struct IdentitySides {
  Scalar lhs = 0;
  Scalar rhs = 0;
};
IdentitySides contraction_identity_sides(const Field& field, const CertificateChain& chain,
                                         int k, SplitMix64& rng);

}  // namespace obc
