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

// Reference implementations written independently of the engine: slow,
// direct from definitions, and only meant for small sizes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint32_t>;

inline std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

inline int inversion_sign(const std::vector<int>& image) {
  int inv = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) inv += image[i] > image[j];
  }
  return inv % 2 ? -1 : 1;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Leibniz formula; m is row-major n x n.
inline std::uint32_t leibniz_det(const std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p) {
  const int n = static_cast<int>(m.size());
  std::int64_t total = 0;
  for (const auto& perm : all_permutations(n)) {
    std::int64_t term = inversion_sign(perm) < 0 ? p - 1 : 1;
    for (int i = 0; i < n; ++i) term = term * m[i][perm[i]] % p;
    total = (total + term) % p;
  }
  return static_cast<std::uint32_t>(total);
}

// Minor of the n x k matrix with columns vs on the rows selected by mask.
inline std::uint32_t minor(const std::vector<Vec>& vs, std::uint32_t mask, std::uint32_t p) {
  std::vector<int> rows;
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1) rows.push_back(i);
  }
  const int k = static_cast<int>(vs.size());
  std::vector<std::vector<std::uint32_t>> sub(k, std::vector<std::uint32_t>(k));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) sub[r][c] = vs[c][rows[r]];
  }
  return k == 0 ? 1 : leibniz_det(sub, p);
}

// Every vector of F_p^n, for tiny p^n.
inline std::vector<Vec> all_vectors(int n, std::uint32_t p) {
  std::vector<Vec> out;
  Vec v(n, 0);
  for (;;) {
    out.push_back(v);
    int i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Every element of span(basis), by enumerating coefficient vectors.
inline std::vector<Vec> span_elements(const std::vector<Vec>& basis, int n, std::uint32_t p) {
  std::vector<Vec> out;
  for (const Vec& c : all_vectors(static_cast<int>(basis.size()), p)) {
    Vec v(n, 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (int i = 0; i < n; ++i) v[i] = (v[i] + c[b] * basis[b][i]) % p;
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Rows are permutations of 0..n-1. Sign = product over rows and columns.
inline int array_sign(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  int s = 1;
  for (const auto& r : rows) s *= inversion_sign(r);
  for (int j = 0; j < n; ++j) {
    std::vector<int> col;
    for (int i = 0; i < n; ++i) col.push_back(rows[i][j]);
    s *= inversion_sign(col);
  }
  return s;
}

// Visits every Latin square of order n as a list of row permutations.
inline void for_each_latin(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  const auto perms = all_permutations(n);
  std::vector<std::vector<int>> rows;
  std::function<void()> rec = [&] {
    if (static_cast<int>(rows.size()) == n) {
      f(rows);
      return;
    }
    for (const auto& p : perms) {
      bool ok = true;
      for (const auto& r : rows) {
        for (int j = 0; j < n && ok; ++j) ok = r[j] != p[j];
      }
      if (!ok) continue;
      rows.push_back(p);
      rec();
      rows.pop_back();
    }
  };
  rec();
}

inline std::int64_t naive_census(int n, bool fixed_diagonal = false) {
  std::int64_t total = 0;
  for_each_latin(n, [&](const std::vector<std::vector<int>>& rows) {
    if (fixed_diagonal) {
      for (int i = 0; i < n; ++i) {
        if (rows[i][i] != n - 1) return;
      }
    }
    total += array_sign(rows);
  });
  return total;
}

// Columns j start with the symbols of masks[j] in increasing order; append
// n - k permutation rows so each column ends up a permutation.
inline std::int64_t naive_completions(int n, const std::vector<std::uint32_t>& masks) {
  const int k = __builtin_popcount(masks[0]);
  for (std::uint32_t m : masks) {
    if (__builtin_popcount(m) != k) return 0;
  }
  const auto perms = all_permutations(n);
  std::int64_t total = 0;
  std::vector<const std::vector<int>*> chosen;
  std::function<void()> rec = [&] {
    if (static_cast<int>(chosen.size()) == n - k) {
      int s = 1;
      for (const auto* r : chosen) s *= inversion_sign(*r);
      for (int j = 0; j < n; ++j) {
        std::vector<int> col;
        for (int x = 0; x < n; ++x) {
          if ((masks[j] >> x) & 1) col.push_back(x);
        }
        for (const auto* r : chosen) col.push_back((*r)[j]);
        std::vector<int> sorted = col;
        std::sort(sorted.begin(), sorted.end());
        for (int x = 0; x < n; ++x) {
          if (sorted[x] != x) return;
        }
        s *= inversion_sign(col);
      }
      total += s;
      return;
    }
    for (const auto& p : perms) {
      chosen.push_back(&p);
      rec();
      chosen.pop_back();
    }
  };
  rec();
  return total;
}

}  // namespace oracle
