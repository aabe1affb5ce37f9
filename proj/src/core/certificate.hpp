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
#include <span>
#include <vector>

#include "core/extalg.hpp"
#include "core/gf.hpp"

namespace obc {

// An n-tuple of subsets packed n bits per column, column 0 in the most
// significant position, so numeric order is lexicographic order by mask.
using TupleKey = std::uint64_t;

inline constexpr int kMaxChainDim = 8;

TupleKey pack_tuple(std::span<const SubsetMask> masks, int n);
std::vector<SubsetMask> unpack_tuple(TupleKey key, int n);

// Every symbol occurs in exactly k of the n subsets.
bool is_symbol_regular(std::span<const SubsetMask> masks, int n, int k);

enum class ChainVariant {
  // Forms on (wedge^k V)^n whose terminal value is ELS(n) - OLS(n).
  kStandard,
  // Row k always puts e_n into column k; the terminal value is the signed
  // count of Latin squares with constant diagonal n.
  kCommonVector,
};

const char* variant_name(ChainVariant v);

struct FormEntry {
  TupleKey key;
  // Exact integer, or a residue in [0, modulus) when built modulo a prime.
  std::int64_t value;
};

// A multilinear form on n-tuples of grade-k exterior vectors, stored by its
// coefficients on wedge-basis tuples. Entries are sorted by key and nonzero.
struct CertificateForm {
  int n = 0;
  int level = 0;
  std::uint32_t modulus = 0;
  std::vector<FormEntry> entries;

  bool is_zero() const { return entries.empty(); }
  // Throws kInvalidArgument unless every subset has size level.
  std::int64_t coefficient(std::span<const SubsetMask> masks) const;
};

struct ChainOptions {
  int max_n = 6;
  // Refuse levels whose predicted support exceeds this many tuples.
  std::uint64_t support_cap = 5'000'000;
  unsigned threads = 1;
  ChainVariant variant = ChainVariant::kStandard;
};

class CertificateChain {
 public:
  CertificateChain(int n, std::uint32_t modulus, ChainVariant variant,
                   std::vector<CertificateForm> forms);

  int n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  ChainVariant variant() const { return variant_; }
  // C_k for k in [0, n].
  const CertificateForm& level(int k) const;
  const std::vector<CertificateForm>& forms() const { return forms_; }

 private:
  int n_;
  std::uint32_t modulus_;
  ChainVariant variant_;
  std::vector<CertificateForm> forms_;
};

// Number of n x n 0/1 matrices with every row and column sum equal to k, an
// upper bound for the support of C_k.
std::uint64_t predicted_support(int n, int k);

// The top form: coefficient 1 on ([n], ..., [n]).
CertificateForm top_form(int n, std::uint32_t modulus);

// C_{k-1} from C_k:
//   C_{k-1}(T) = sum over permutations x with x_j not in T_j of
//                sgn(x) * prod_j eps(T_j, x_j) * C_k(T_1 + x_1, ..., T_n + x_n)
// where eps(S, x) = (-1)^{#{s in S : s > x}}. The common-vector variant keeps
// only x with x_k = n (1-based), i.e. column k takes e_n at level k.
CertificateForm contract(const CertificateForm& upper, ChainVariant variant,
                         const ChainOptions& options = {});

// Throws kResource naming the level whose predicted support exceeds the cap.
CertificateChain build_chain(int n, std::uint32_t modulus, const ChainOptions& options = {});

// sum over support of coeff * prod_j omegas[j][S_j]; reduced mod p.
Scalar eval(const Field& field, const CertificateForm& form, std::span<const KVector> omegas);

// Same, with each column given as a dense 2^n table.
Scalar eval_dense(const Field& field, const CertificateForm& form,
                  std::span<const std::vector<Scalar>* const> columns);

struct GoodPermutation {
  // Column j receives basis[perm[j]].
  std::vector<int> perm;
  Scalar value = 0;
};

// Lexicographically first permutation whose wedged tuple has nonzero value
// under C_level. omegas have grade level - 1. With fixed_point >= 0 only
// permutations fixing that column are scanned.
std::optional<GoodPermutation> find_good_permutation(const Field& field,
                                                     const CertificateChain& chain, int level,
                                                     std::span<const KVector> omegas,
                                                     const VectorList& basis,
                                                     int fixed_point = -1);

}  // namespace obc
