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

#include "core/latin.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "core/error.hpp"

namespace obc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "signed count overflowed 64 bits");
  }
  return out;
}

// Backtracking over cells row by row, left to right, smallest symbol first.
// The sign is carried as an inversion-count parity: placing s after the
// entries already in its row (resp. column) adds one inversion per larger
// entry there.
class SignedSearch {
 public:
  SignedSearch(int n, int first_row, std::vector<SubsetMask> col_used,
               std::vector<SubsetMask> allowed)
      : n_(n),
        first_row_(first_row),
        full_((SubsetMask{1} << n) - 1),
        col_used_(std::move(col_used)),
        allowed_(std::move(allowed)) {}

  struct Task {
    std::vector<SubsetMask> col_used;
    int parity;
  };

  // Every valid arrangement of the first free row.
  std::vector<Task> split() {
    std::vector<Task> tasks;
    if (first_row_ >= n_) return tasks;
    collect(0, 0, 0, tasks);
    return tasks;
  }

  std::int64_t run(const Task& task) {
    col_used_ = task.col_used;
    return fill(first_row_ + 1, 0, 0, task.parity);
  }

  std::int64_t run_all() { return fill(first_row_, 0, 0, 0); }

 private:
  void collect(int col, SubsetMask row_used, int parity, std::vector<Task>& tasks) {
    if (col == n_) {
      tasks.push_back({col_used_, parity});
      return;
    }
    SubsetMask cand = allowed_[first_row_ * n_ + col] & ~row_used & ~col_used_[col] & full_;
    while (cand) {
      const int s = __builtin_ctz(cand);
      cand &= cand - 1;
      const int flip = (popcount(row_used & above(s, n_)) + popcount(col_used_[col] & above(s, n_))) & 1;
      col_used_[col] |= SubsetMask{1} << s;
      collect(col + 1, row_used | (SubsetMask{1} << s), parity ^ flip, tasks);
      col_used_[col] &= ~(SubsetMask{1} << s);
    }
  }

  std::int64_t fill(int row, int col, SubsetMask row_used, int parity) {
    if (col == n_) {
      ++row;
      col = 0;
      row_used = 0;
    }
    if (row == n_) return parity ? -1 : 1;
    std::int64_t total = 0;
    SubsetMask cand = allowed_[row * n_ + col] & ~row_used & ~col_used_[col] & full_;
    while (cand) {
      const int s = __builtin_ctz(cand);
      cand &= cand - 1;
      const int flip = (popcount(row_used & above(s, n_)) + popcount(col_used_[col] & above(s, n_))) & 1;
      col_used_[col] |= SubsetMask{1} << s;
      total += fill(row, col + 1, row_used | (SubsetMask{1} << s), parity ^ flip);
      col_used_[col] &= ~(SubsetMask{1} << s);
    }
    return total;
  }

  int n_;
  int first_row_;
  SubsetMask full_;
  std::vector<SubsetMask> col_used_;
  std::vector<SubsetMask> allowed_;
};

std::int64_t run_search(int n, int first_row, std::vector<SubsetMask> col_used,
                        std::vector<SubsetMask> allowed, const CensusOptions& options,
                        bool identity_first_row_only) {
  SignedSearch root(n, first_row, col_used, allowed);
  if (first_row >= n) return root.run_all();
  auto tasks = root.split();
  if (identity_first_row_only) {
    // The identity row is the lexicographically first arrangement.
    tasks.resize(std::min<std::size_t>(tasks.size(), 1));
  }
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));

  // Per-task results summed in task order: the total does not depend on how
  // tasks were spread over workers.
  std::vector<std::int64_t> results(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    SignedSearch search(n, first_row, col_used, allowed);
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = search.run(tasks[i]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::int64_t total = 0;
  for (std::int64_t r : results) total = checked_add(total, r);
  return total;
}

void check_order(int n, const CensusOptions& options) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "order must be >= 1");
  if (n > options.max_order || n > kMaxExteriorDim) {
    throw Error(ErrorCode::kResource, "order " + std::to_string(n) +
                                          " exceeds the configured census bound " +
                                          std::to_string(options.max_order));
  }
}

}  // namespace

bool is_latin(const LatinSquare& sq) {
  const int n = sq.n;
  if (n < 1 || static_cast<int>(sq.cells.size()) != n * n) return false;
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n + 1, false), col(n + 1, false);
    for (int j = 0; j < n; ++j) {
      const int a = sq.at(i, j), b = sq.at(j, i);
      if (a < 1 || a > n || b < 1 || b > n || row[a] || col[b]) return false;
      row[a] = col[b] = true;
    }
  }
  return true;
}

int permutation_sign(std::span<const int> image) {
  int inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (image[i] > image[j]) ++inversions;
    }
  }
  return inversions % 2 ? -1 : 1;
}

int square_sign(const LatinSquare& sq) {
  if (!is_latin(sq)) throw Error(ErrorCode::kInvalidArgument, "not a Latin square");
  const int n = sq.n;
  int sign = 1;
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) line[j] = sq.at(i, j);
    sign *= permutation_sign(line);
    for (int j = 0; j < n; ++j) line[j] = sq.at(j, i);
    sign *= permutation_sign(line);
  }
  return sign;
}

std::int64_t census_signed(int n, const CensusOptions& options) {
  check_order(n, options);
  const SubsetMask all = (SubsetMask{1} << n) - 1;
  std::int64_t total = run_search(n, 0, std::vector<SubsetMask>(n, 0),
                                  std::vector<SubsetMask>(n * n, all), options,
                                  options.symbol_symmetry);
  if (options.symbol_symmetry) {
    for (int f = 2; f <= n; ++f) {
      if (__builtin_mul_overflow(total, f, &total)) {
        throw Error(ErrorCode::kOverflow, "signed count overflowed 64 bits");
      }
    }
  }
  return total;
}

std::int64_t census_signed_fixed_diagonal(int n, const CensusOptions& options) {
  check_order(n, options);
  const SubsetMask top = SubsetMask{1} << (n - 1);
  const SubsetMask all = (SubsetMask{1} << n) - 1;
  std::vector<SubsetMask> allowed(n * n, all & ~top);
  for (int i = 0; i < n; ++i) allowed[i * n + i] = top;
  return run_search(n, 0, std::vector<SubsetMask>(n, 0), std::move(allowed), options, false);
}

std::int64_t signed_completions(int n, std::span<const SubsetMask> columns,
                                const CensusOptions& options) {
  check_order(n, options);
  if (static_cast<int>(columns.size()) != n) {
    throw Error(ErrorCode::kShape, "expected one subset per column");
  }
  const SubsetMask all = (SubsetMask{1} << n) - 1;
  const int k = columns.empty() ? 0 : popcount(columns[0]);
  for (SubsetMask s : columns) {
    if ((s & ~all) != 0 || popcount(s) != k) {
      throw Error(ErrorCode::kInvalidArgument, "column subsets must all have the same size k");
    }
  }
  return run_search(n, k, std::vector<SubsetMask>(columns.begin(), columns.end()),
                    std::vector<SubsetMask>(n * n, all), options, false);
}

}  // namespace obc
