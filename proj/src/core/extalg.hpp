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
#include <map>
#include <vector>

#include "core/gf.hpp"

namespace obc {

// Bit i set <=> basis index i (0-based) belongs to the subset.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxExteriorDim = 16;

inline int popcount(SubsetMask m) { return __builtin_popcount(m); }
// Mask of indices strictly greater than x.
inline SubsetMask above(int x, int n) {
  return ((SubsetMask{1} << n) - 1) & ~((SubsetMask{2} << x) - 1);
}

// A grade-k element of the k-th exterior power of K^n, in the basis e_S of
// sorted subsets. Zero coefficients are never stored.
class KVector {
 public:
  KVector(int n, int k);

  // The grade-0 element 1.
  static KVector unit(int n);

  int dim() const { return n_; }
  int grade() const { return k_; }
  bool is_zero() const { return coords_.empty(); }

  Scalar operator[](SubsetMask s) const;
  void set(SubsetMask s, Scalar value);
  const std::map<SubsetMask, Scalar>& coords() const { return coords_; }

  // Length 2^n table indexed by mask.
  std::vector<Scalar> dense() const;

  friend bool operator==(const KVector&, const KVector&) = default;

 private:
  int n_;
  int k_;
  std::map<SubsetMask, Scalar> coords_;
};

// Sign of moving x from the appended last slot into sorted position in S.
inline bool wedge_sign_negative(SubsetMask s, int x, int n) {
  return popcount(s & above(x, n)) & 1;
}

// w ^ u with u appended in the last slot.
KVector wedge(const Field& field, const KVector& w, const Vector& u);

// Same as wedge, writing into a dense 2^n table (the hot path of strategies).
void wedge_dense(const Field& field, int n, const std::vector<Scalar>& w,
                 const Vector& u, std::vector<Scalar>& out);

// v_1 ^ ... ^ v_k, computed from k x k minors. Zero iff dependent.
KVector pure(const Field& field, const VectorList& vectors, int n);

KVector linear_combination(const Field& field, Scalar a, const KVector& x,
                           Scalar b, const KVector& y);

}  // namespace obc
