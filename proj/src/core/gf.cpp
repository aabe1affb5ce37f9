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

#include "core/gf.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace obc {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

Scalar primitive_root(const Field& field) {
  const std::uint32_t p = field.modulus();
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (Scalar g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t q) {
      return field.pow(g, (p - 1) / q) != 1;
    });
    if (ok) return g;
  }
  throw Error(ErrorCode::kInternal, "no primitive root found mod " + std::to_string(p));
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar Field::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

FieldSpec find_game_prime(int n, std::span<const std::int64_t> root_orders,
                          std::span<const std::int64_t> avoid_divisors,
                          std::uint32_t search_bound) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  std::uint64_t step = 1;
  for (std::int64_t m : root_orders) {
    if (m < 1) throw Error(ErrorCode::kInvalidArgument, "root orders must be positive");
    step = std::lcm(step, static_cast<std::uint64_t>(m));
    if (step >= (1ull << 31)) {
      throw Error(ErrorCode::kSearchExhausted, "root orders exceed word-sized primes");
    }
  }
  for (std::int64_t d : avoid_divisors) {
    if (d == 0) throw Error(ErrorCode::kInvalidArgument, "avoid divisors must be nonzero");
  }
  const std::uint64_t bound = std::min<std::uint64_t>(search_bound, (1ull << 31) - 1);
  // Candidates are 1 + t * step; start at the first one exceeding n.
  std::uint64_t candidate = 1 + step * ((static_cast<std::uint64_t>(n) - 1) / step + 1);
  for (; candidate <= bound; candidate += step) {
    if (!is_prime(candidate)) continue;
    bool divides = std::any_of(avoid_divisors.begin(), avoid_divisors.end(),
                               [&](std::int64_t d) {
                                 std::uint64_t a = d < 0 ? -static_cast<std::uint64_t>(d)
                                                         : static_cast<std::uint64_t>(d);
                                 return a % candidate == 0;
                               });
    if (!divides) return FieldSpec{static_cast<std::uint32_t>(candidate), n};
  }
  throw Error(ErrorCode::kSearchExhausted,
              "no admissible prime up to " + std::to_string(bound));
}

Scalar root_of_unity(const Field& field, std::uint32_t m) {
  const std::uint32_t p = field.modulus();
  if (m == 0 || (p - 1) % m != 0) {
    throw Error(ErrorCode::kOrderUnavailable,
                "no element of order " + std::to_string(m) + " mod " + std::to_string(p));
  }
  if (m == 1) return 1;
  // Elements of exact order m are g^((p-1)/m * j) with gcd(j, m) = 1.
  const Scalar base = field.pow(primitive_root(field), (p - 1) / m);
  Scalar best = p;
  Scalar power = 1;
  for (std::uint32_t j = 1; j <= m; ++j) {
    power = field.mul(power, base);
    if (std::gcd(j, m) == 1) best = std::min(best, power);
  }
  return best;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const VectorList& columns, int dim) {
  Matrix m(dim, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != dim) {
      throw Error(ErrorCode::kShape, "vector length does not match dimension");
    }
    for (int r = 0; r < dim; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const VectorList& rows, int dim) {
  Matrix m(static_cast<int>(rows.size()), dim);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != dim) {
      throw Error(ErrorCode::kShape, "vector length does not match dimension");
    }
    for (int c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(int r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kShape, "inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

std::vector<int> row_reduce(const Field& field, Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    const Scalar scale = field.inv(m(row, col));
    for (int c = 0; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), scale);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (int c = 0; c < m.cols(); ++c) {
        m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Scalar det(const Field& field, Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kShape, "determinant of a non-square matrix");
  const int n = m.rows();
  Scalar result = 1 % field.modulus();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
      result = field.neg(result);
    }
    result = field.mul(result, m(col, col));
    const Scalar inv = field.inv(m(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Scalar factor = field.mul(m(r, col), inv);
      for (int c = col; c < n; ++c) {
        m(r, c) = field.sub(m(r, c), field.mul(factor, m(col, c)));
      }
    }
  }
  return result;
}

int rank(const Field& field, Matrix m) {
  return static_cast<int>(row_reduce(field, m).size());
}

VectorList kernel(const Field& field, Matrix m) {
  const auto pivots = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  VectorList basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = field.neg(m(static_cast<int>(i), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_independent(const Field& field, const VectorList& vectors, int dim) {
  if (static_cast<int>(vectors.size()) > dim) return false;
  if (vectors.empty()) return true;
  return rank(field, Matrix::from_rows(vectors, dim)) == static_cast<int>(vectors.size());
}

bool in_span(const Field& field, const VectorList& span, const Vector& v, int dim) {
  VectorList extended = span;
  extended.push_back(v);
  const int base = span.empty() ? 0 : rank(field, Matrix::from_rows(span, dim));
  return rank(field, Matrix::from_rows(extended, dim)) == base;
}

VectorList intersection_basis(const Field& field, std::span<const VectorList> spaces,
                              int dim) {
  // Stack the annihilators of every space; the intersection is their common
  // kernel.
  VectorList normals;
  for (const VectorList& space : spaces) {
    if (!is_independent(field, space, dim)) {
      throw Error(ErrorCode::kInvalidSubspace, "subspace basis is linearly dependent");
    }
    if (space.empty()) {
      for (int i = 0; i < dim; ++i) normals.push_back(standard_vector(dim, i));
      continue;
    }
    for (Vector& z : kernel(field, Matrix::from_rows(space, dim))) {
      normals.push_back(std::move(z));
    }
  }
  VectorList basis;
  if (normals.empty()) {
    basis = VectorList();
    for (int i = 0; i < dim; ++i) basis.push_back(standard_vector(dim, i));
  } else {
    basis = kernel(field, Matrix::from_rows(normals, dim));
  }
  if (basis.empty()) return basis;
  Matrix echelon = Matrix::from_rows(basis, dim);
  const auto pivots = row_reduce(field, echelon);
  VectorList out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(echelon.row(static_cast<int>(r)));
  return out;
}

VectorList extend_to_basis(const Field& field, const VectorList& independent, int dim) {
  if (!is_independent(field, independent, dim)) {
    throw Error(ErrorCode::kInvalidSubspace, "cannot extend a dependent list");
  }
  VectorList basis = independent;
  for (int i = 0; i < dim && static_cast<int>(basis.size()) < dim; ++i) {
    Vector e = standard_vector(dim, i);
    basis.push_back(e);
    if (!is_independent(field, basis, dim)) basis.pop_back();
  }
  return basis;
}

Vector standard_vector(int dim, int index) {
  Vector v(dim, 0);
  v.at(index) = 1;
  return v;
}

}  // namespace obc
