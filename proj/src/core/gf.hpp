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
#include <span>
#include <vector>

namespace obc {

// A field element, stored as its residue in [0, p).
using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;
// An ordered list of vectors (a row of the game array, a column, a basis).
using VectorList = std::vector<Vector>;

// Arithmetic in F_p for a prime p < 2^31. Products go through 64 bits.
class Field {
 public:
  explicit Field(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Scalar reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  // Throws kInvalidArgument on zero.
  Scalar inv(Scalar a) const;

 private:
  std::uint32_t p_;
};

struct FieldSpec {
  std::uint32_t p = 2;
  int n = 1;
};

bool is_prime(std::uint64_t x);

// Smallest prime p > n with p = 1 (mod m) for every m in root_orders and
// p not dividing any entry of avoid_divisors.
FieldSpec find_game_prime(int n, std::span<const std::int64_t> root_orders,
                          std::span<const std::int64_t> avoid_divisors,
                          std::uint32_t search_bound = 100'000'000);

// Smallest residue of exact multiplicative order m.
Scalar root_of_unity(const Field& field, std::uint32_t m);

// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(int n);
  // Matrix whose columns are the given vectors.
  static Matrix from_columns(const VectorList& columns, int dim);
  static Matrix from_rows(const VectorList& rows, int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[r * cols_ + c]; }
  Scalar operator()(int r, int c) const { return data_[r * cols_ + c]; }

  Vector row(int r) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);

// Reduces in place to reduced row echelon form; returns the pivot columns.
std::vector<int> row_reduce(const Field& field, Matrix& m);

Scalar det(const Field& field, Matrix m);
int rank(const Field& field, Matrix m);
// Basis of {x : m x = 0}.
VectorList kernel(const Field& field, Matrix m);

bool is_independent(const Field& field, const VectorList& vectors, int dim);
bool in_span(const Field& field, const VectorList& span, const Vector& v,
             int dim);

// Canonical basis (reduced row echelon rows) of the intersection of the given
// subspaces of K^dim. An empty result is the zero space. Each input must be an
// independent list; otherwise throws kInvalidSubspace.
VectorList intersection_basis(const Field& field,
                              std::span<const VectorList> spaces, int dim);

// Independent vectors first (in order), then standard vectors by index.
VectorList extend_to_basis(const Field& field, const VectorList& independent,
                           int dim);

Vector standard_vector(int dim, int index);

}  // namespace obc
