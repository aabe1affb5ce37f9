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

#include "core/extalg.hpp"

#include <string>

#include "core/error.hpp"

namespace obc {

namespace {

void check_dim(int n) {
  if (n < 0 || n > kMaxExteriorDim) {
    throw Error(ErrorCode::kInvalidArgument,
                "exterior algebra dimension must be in [0, 16], got " + std::to_string(n));
  }
}

}  // namespace

KVector::KVector(int n, int k) : n_(n), k_(k) {
  check_dim(n);
  if (k < 0 || k > n) throw Error(ErrorCode::kInvalidArgument, "grade out of range");
}

KVector KVector::unit(int n) {
  KVector one(n, 0);
  one.coords_[0] = 1;
  return one;
}

Scalar KVector::operator[](SubsetMask s) const {
  auto it = coords_.find(s);
  return it == coords_.end() ? 0 : it->second;
}

void KVector::set(SubsetMask s, Scalar value) {
  if (popcount(s) != k_ || (s >> n_) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "subset does not match grade");
  }
  if (value == 0) {
    coords_.erase(s);
  } else {
    coords_[s] = value;
  }
}

std::vector<Scalar> KVector::dense() const {
  std::vector<Scalar> out(std::size_t{1} << n_, 0);
  for (const auto& [mask, value] : coords_) out[mask] = value;
  return out;
}

KVector wedge(const Field& field, const KVector& w, const Vector& u) {
  const int n = w.dim();
  if (static_cast<int>(u.size()) != n) throw Error(ErrorCode::kShape, "vector length mismatch");
  if (w.grade() >= n) throw Error(ErrorCode::kInvalidArgument, "grade overflow in wedge");
  std::map<SubsetMask, Scalar> acc;
  for (const auto& [s, c] : w.coords()) {
    for (int x = 0; x < n; ++x) {
      if ((s >> x) & 1 || u[x] == 0) continue;
      Scalar term = field.mul(c, u[x]);
      if (wedge_sign_negative(s, x, n)) term = field.neg(term);
      Scalar& slot = acc[s | (SubsetMask{1} << x)];
      slot = field.add(slot, term);
    }
  }
  KVector out(n, w.grade() + 1);
  for (const auto& [t, v] : acc) out.set(t, v);
  return out;
}

void wedge_dense(const Field& field, int n, const std::vector<Scalar>& w,
                 const Vector& u, std::vector<Scalar>& out) {
  out.assign(w.size(), 0);
  for (SubsetMask s = 0; s < w.size(); ++s) {
    const Scalar c = w[s];
    if (c == 0) continue;
    for (int x = 0; x < n; ++x) {
      if ((s >> x) & 1 || u[x] == 0) continue;
      Scalar term = field.mul(c, u[x]);
      if (wedge_sign_negative(s, x, n)) term = field.neg(term);
      Scalar& slot = out[s | (SubsetMask{1} << x)];
      slot = field.add(slot, term);
    }
  }
}

KVector pure(const Field& field, const VectorList& vectors, int n) {
  const int k = static_cast<int>(vectors.size());
  KVector out(n, k);
  for (const Vector& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::kShape, "vector length mismatch");
  }
  if (k == 0) return KVector::unit(n);
  for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) {
    if (popcount(s) != k) continue;
    Matrix minor(k, k);
    int r = 0;
    for (int x = 0; x < n; ++x) {
      if (!((s >> x) & 1)) continue;
      for (int c = 0; c < k; ++c) minor(r, c) = vectors[c][x];
      ++r;
    }
    out.set(s, det(field, minor));
  }
  return out;
}

KVector linear_combination(const Field& field, Scalar a, const KVector& x, Scalar b,
                           const KVector& y) {
  if (x.dim() != y.dim() || x.grade() != y.grade()) {
    throw Error(ErrorCode::kShape, "grade mismatch in linear combination");
  }
  KVector out(x.dim(), x.grade());
  std::map<SubsetMask, Scalar> acc;
  for (const auto& [s, c] : x.coords()) acc[s] = field.mul(a, c);
  for (const auto& [s, c] : y.coords()) acc[s] = field.add(acc[s], field.mul(b, c));
  for (const auto& [s, c] : acc) out.set(s, c);
  return out;
}

}  // namespace obc
