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

#include "core/certificate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "core/error.hpp"

namespace obc {

namespace {

void check_chain_dim(int n) {
  if (n < 1 || n > kMaxChainDim) {
    throw Error(ErrorCode::kInvalidArgument,
                "chain dimension must be in [1, " + std::to_string(kMaxChainDim) + "]");
  }
}

// Adds into a residue or an exact integer, depending on the modulus.
struct Accumulate {
  std::uint32_t modulus;

  std::int64_t operator()(std::int64_t acc, std::int64_t term) const {
    if (modulus != 0) {
      std::int64_t s = acc + term;
      return s >= modulus ? s - modulus : s;
    }
    std::int64_t out;
    if (__builtin_add_overflow(acc, term, &out)) {
      throw Error(ErrorCode::kOverflow, "certificate coefficient overflowed 64 bits");
    }
    return out;
  }

  std::int64_t negate(std::int64_t v) const {
    if (modulus != 0) return v == 0 ? 0 : modulus - v;
    return -v;
  }
};

using SparseMap = std::unordered_map<TupleKey, std::int64_t>;

class Contractor {
 public:
  Contractor(int n, int upper_level, std::uint32_t modulus, ChainVariant variant)
      : n_(n), add_{modulus}, masks_(n), removed_(n) {
    if (variant == ChainVariant::kCommonVector) forced_column_ = upper_level - 1;
  }

  void push(const FormEntry& entry, SparseMap& out) {
    masks_ = unpack_tuple(entry.key, n_);
    value_ = entry.value;
    out_ = &out;
    choose(0, 0, 0);
  }

 private:
  void choose(int col, SubsetMask used, int parity) {
    if (col == n_) {
      TupleKey key = pack_tuple(removed_, n_);
      std::int64_t term = parity ? add_.negate(value_) : value_;
      auto [it, inserted] = out_->try_emplace(key, term);
      if (!inserted) it->second = add_(it->second, term);
      return;
    }
    const SubsetMask top = SubsetMask{1} << (n_ - 1);
    SubsetMask cand = masks_[col] & ~used;
    if (forced_column_ >= 0) cand &= (col == forced_column_) ? top : ~top;
    while (cand) {
      const int x = __builtin_ctz(cand);
      cand &= cand - 1;
      const int flip = (popcount(used & above(x, n_)) + popcount(masks_[col] & above(x, n_))) & 1;
      removed_[col] = masks_[col] & ~(SubsetMask{1} << x);
      choose(col + 1, used | (SubsetMask{1} << x), parity ^ flip);
    }
  }

  int n_;
  Accumulate add_;
  int forced_column_ = -1;
  std::vector<SubsetMask> masks_;
  std::vector<SubsetMask> removed_;
  std::int64_t value_ = 0;
  SparseMap* out_ = nullptr;
};

std::uint64_t count_regular(int n, int k, std::vector<int>& capacity, int row,
                            std::map<std::pair<int, std::vector<int>>, std::uint64_t>& memo);

// Distributes k ones of one row over columns with remaining capacity.
std::uint64_t place_row(int n, int k, std::vector<int>& capacity, int row, int col, int left,
                        std::map<std::pair<int, std::vector<int>>, std::uint64_t>& memo) {
  if (left == 0) return count_regular(n, k, capacity, row + 1, memo);
  if (n - col < left) return 0;
  std::uint64_t total = place_row(n, k, capacity, row, col + 1, left, memo);
  if (capacity[col] > 0) {
    --capacity[col];
    total += place_row(n, k, capacity, row, col + 1, left - 1, memo);
    ++capacity[col];
  }
  return total;
}

std::uint64_t count_regular(int n, int k, std::vector<int>& capacity, int row,
                            std::map<std::pair<int, std::vector<int>>, std::uint64_t>& memo) {
  if (row == n) return 1;
  std::vector<int> key = capacity;
  std::sort(key.begin(), key.end());
  auto found = memo.find({row, key});
  if (found != memo.end()) return found->second;
  std::uint64_t total = place_row(n, k, capacity, row, 0, k, memo);
  memo[{row, key}] = total;
  return total;
}

}  // namespace

TupleKey pack_tuple(std::span<const SubsetMask> masks, int n) {
  TupleKey key = 0;
  for (SubsetMask m : masks) key = (key << n) | m;
  return key;
}

std::vector<SubsetMask> unpack_tuple(TupleKey key, int n) {
  std::vector<SubsetMask> masks(n);
  const TupleKey low = (TupleKey{1} << n) - 1;
  for (int j = n - 1; j >= 0; --j) {
    masks[j] = static_cast<SubsetMask>(key & low);
    key >>= n;
  }
  return masks;
}

bool is_symbol_regular(std::span<const SubsetMask> masks, int n, int k) {
  for (int s = 0; s < n; ++s) {
    int count = 0;
    for (SubsetMask m : masks) count += (m >> s) & 1;
    if (count != k) return false;
  }
  return true;
}

const char* variant_name(ChainVariant v) {
  return v == ChainVariant::kStandard ? "standard" : "common_vector";
}

std::int64_t CertificateForm::coefficient(std::span<const SubsetMask> masks) const {
  if (static_cast<int>(masks.size()) != n) throw Error(ErrorCode::kShape, "tuple length must be n");
  for (SubsetMask m : masks) {
    if (popcount(m) != level || (m >> n) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "subset sizes must equal the form level " + std::to_string(level));
    }
  }
  const TupleKey key = pack_tuple(masks, n);
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const FormEntry& e, TupleKey k) { return e.key < k; });
  return (it != entries.end() && it->key == key) ? it->value : 0;
}

CertificateChain::CertificateChain(int n, std::uint32_t modulus, ChainVariant variant,
                                   std::vector<CertificateForm> forms)
    : n_(n), modulus_(modulus), variant_(variant), forms_(std::move(forms)) {
  if (static_cast<int>(forms_.size()) != n + 1) {
    throw Error(ErrorCode::kShape, "a chain holds exactly n + 1 forms");
  }
}

const CertificateForm& CertificateChain::level(int k) const {
  if (k < 0 || k > n_) throw Error(ErrorCode::kInvalidArgument, "chain level out of range");
  return forms_[k];
}

std::uint64_t predicted_support(int n, int k) {
  std::vector<int> capacity(n, k);
  std::map<std::pair<int, std::vector<int>>, std::uint64_t> memo;
  return count_regular(n, k, capacity, 0, memo);
}

CertificateForm top_form(int n, std::uint32_t modulus) {
  check_chain_dim(n);
  CertificateForm top{n, n, modulus, {}};
  std::vector<SubsetMask> full(n, (SubsetMask{1} << n) - 1);
  top.entries.push_back({pack_tuple(full, n), 1});
  return top;
}

CertificateForm contract(const CertificateForm& upper, ChainVariant variant,
                         const ChainOptions& options) {
  const int n = upper.n;
  if (upper.level < 1) throw Error(ErrorCode::kInvalidArgument, "cannot contract level 0");
  const std::uint64_t predicted = predicted_support(n, upper.level - 1);
  if (predicted > options.support_cap) {
    throw Error(ErrorCode::kResource,
                "level " + std::to_string(upper.level - 1) + " of the n=" + std::to_string(n) +
                    " chain has predicted support " + std::to_string(predicted) +
                    " above the cap " + std::to_string(options.support_cap));
  }

  const unsigned threads = std::max(1u, std::min<unsigned>(
      options.threads == 0 ? std::thread::hardware_concurrency() : options.threads,
      static_cast<unsigned>(std::max<std::size_t>(1, upper.entries.size()))));
  std::vector<SparseMap> partial(threads);
  auto work = [&](unsigned t) {
    Contractor contractor(n, upper.level, upper.modulus, variant);
    for (std::size_t i = t; i < upper.entries.size(); i += threads) {
      contractor.push(upper.entries[i], partial[t]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  Accumulate add{upper.modulus};
  SparseMap merged = std::move(partial[0]);
  for (unsigned t = 1; t < threads; ++t) {
    for (const auto& [key, value] : partial[t]) {
      auto [it, inserted] = merged.try_emplace(key, value);
      if (!inserted) it->second = add(it->second, value);
    }
  }

  CertificateForm lower{n, upper.level - 1, upper.modulus, {}};
  lower.entries.reserve(merged.size());
  for (const auto& [key, value] : merged) {
    if (value != 0) lower.entries.push_back({key, value});
  }
  std::sort(lower.entries.begin(), lower.entries.end(),
            [](const FormEntry& a, const FormEntry& b) { return a.key < b.key; });
  return lower;
}

CertificateChain build_chain(int n, std::uint32_t modulus, const ChainOptions& options) {
  check_chain_dim(n);
  if (n > options.max_n) {
    throw Error(ErrorCode::kResource, "chain dimension " + std::to_string(n) +
                                          " exceeds the configured bound " +
                                          std::to_string(options.max_n));
  }
  if (modulus != 0) {
    Field check(modulus);
    if (modulus <= static_cast<std::uint32_t>(n)) {
      throw Error(ErrorCode::kInvalidArgument, "chain modulus must exceed n");
    }
  }
  std::vector<CertificateForm> forms(n + 1);
  forms[n] = top_form(n, modulus);
  for (int k = n; k >= 1; --k) forms[k - 1] = contract(forms[k], options.variant, options);
  return CertificateChain(n, modulus, options.variant, std::move(forms));
}

Scalar eval_dense(const Field& field, const CertificateForm& form,
                  std::span<const std::vector<Scalar>* const> columns) {
  const int n = form.n;
  if (static_cast<int>(columns.size()) != n) throw Error(ErrorCode::kShape, "expected n columns");
  if (form.modulus != 0 && form.modulus != field.modulus()) {
    throw Error(ErrorCode::kInvalidArgument, "field does not match the chain modulus");
  }
  const TupleKey low = (TupleKey{1} << n) - 1;
  Scalar total = 0;
  for (const FormEntry& e : form.entries) {
    Scalar term = form.modulus != 0 ? static_cast<Scalar>(e.value) : field.reduce(e.value);
    TupleKey key = e.key;
    for (int j = n - 1; j >= 0 && term != 0; --j) {
      term = field.mul(term, (*columns[j])[key & low]);
      key >>= n;
    }
    total = field.add(total, term);
  }
  return total;
}

Scalar eval(const Field& field, const CertificateForm& form, std::span<const KVector> omegas) {
  if (static_cast<int>(omegas.size()) != form.n) throw Error(ErrorCode::kShape, "expected n omegas");
  std::vector<std::vector<Scalar>> tables;
  std::vector<const std::vector<Scalar>*> columns;
  tables.reserve(omegas.size());
  for (const KVector& w : omegas) {
    if (w.grade() != form.level || w.dim() != form.n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "omega grade " + std::to_string(w.grade()) + " does not match level " +
                      std::to_string(form.level));
    }
    tables.push_back(w.dense());
  }
  for (const auto& t : tables) columns.push_back(&t);
  return eval_dense(field, form, columns);
}

std::optional<GoodPermutation> find_good_permutation(const Field& field,
                                                     const CertificateChain& chain, int level,
                                                     std::span<const KVector> omegas,
                                                     const VectorList& basis, int fixed_point) {
  const int n = chain.n();
  if (level < 1 || level > n) throw Error(ErrorCode::kInvalidArgument, "level out of range");
  if (static_cast<int>(omegas.size()) != n || static_cast<int>(basis.size()) != n) {
    throw Error(ErrorCode::kShape, "expected n omegas and n basis vectors");
  }
  // All n^2 wedges up front; each permutation then only evaluates.
  std::vector<std::vector<std::vector<Scalar>>> wedged(n, std::vector<std::vector<Scalar>>(n));
  for (int j = 0; j < n; ++j) {
    if (omegas[j].grade() != level - 1) {
      throw Error(ErrorCode::kInvalidArgument, "omega grade must be level - 1");
    }
    const auto base = omegas[j].dense();
    for (int i = 0; i < n; ++i) wedge_dense(field, n, base, basis[i], wedged[j][i]);
  }
  const CertificateForm& form = chain.level(level);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<const std::vector<Scalar>*> columns(n);
  do {
    if (fixed_point >= 0 && perm[fixed_point] != fixed_point) continue;
    for (int j = 0; j < n; ++j) columns[j] = &wedged[j][perm[j]];
    const Scalar value = eval_dense(field, form, columns);
    if (value != 0) return GoodPermutation{perm, value};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace obc
