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

#include <doctest.h>

#include <array>

#include "core/error.hpp"
#include "core/gf.hpp"
#include "core/rng.hpp"
#include "oracles.hpp"

using namespace obc;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, SplitMix64& rng) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = static_cast<Scalar>(rng.uniform(f.modulus()));
  }
  return m;
}

std::vector<std::vector<Scalar>> as_grid(const Matrix& m) {
  std::vector<std::vector<Scalar>> g(m.rows(), std::vector<Scalar>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  }
  return g;
}

Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

}  // namespace

TEST_SUITE("gf") {

TEST_CASE("find_game_prime examples") {
  const std::array<std::int64_t, 1> three{3};
  const std::array<std::int64_t, 2> three_five{3, 5};
  CHECK(find_game_prime(3, three, {}).p == 7);
  CHECK(find_game_prime(5, three_five, {}).p == 31);
  CHECK(find_game_prime(1, {}, {}).p == 2);
}

TEST_CASE("find_game_prime is the smallest admissible prime") {
  const std::array<std::int64_t, 1> avoid{576};
  for (int n = 1; n <= 12; ++n) {
    const std::uint32_t p = find_game_prime(n, {}, avoid).p;
    for (std::uint32_t q = n + 1; q < p; ++q) {
      CHECK_FALSE((is_prime(q) && 576 % q != 0));
    }
    CHECK(is_prime(p));
    CHECK(p > static_cast<std::uint32_t>(n));
    CHECK(576 % p != 0);
  }
  // 576 = 2^6 3^2: n = 4 must skip nothing but land on 5.
  CHECK(find_game_prime(4, {}, avoid).p == 5);
  const std::array<std::int64_t, 1> seven{7};
  CHECK(find_game_prime(2, seven, {}).p == 29);
}

TEST_CASE("find_game_prime reports exhaustion") {
  const std::array<std::int64_t, 1> big{1000};
  CHECK_THROWS_AS(find_game_prime(5, big, {}, 1000), Error);
}

TEST_CASE("root_of_unity examples and exact order") {
  CHECK(root_of_unity(Field(7), 3) == 2);
  CHECK(root_of_unity(Field(31), 5) == 2);
  CHECK(root_of_unity(Field(13), 1) == 1);
  for (std::uint32_t p : {7u, 13u, 31u, 61u, 101u, 211u}) {
    const Field f(p);
    for (std::uint32_t m = 1; m < p; ++m) {
      if ((p - 1) % m != 0) {
        CHECK_THROWS_AS(root_of_unity(f, m), Error);
        continue;
      }
      const Scalar z = root_of_unity(f, m);
      CHECK(f.pow(z, m) == 1);
      for (std::uint32_t d = 1; d < m; ++d) {
        if (m % d == 0) CHECK(f.pow(z, d) != 1);
      }
    }
  }
}

TEST_CASE("field axioms on samples") {
  SplitMix64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u, 31u, 1000003u, 2147483647u}) {
    const Field f(p);
    for (int i = 0; i < 2000; ++i) {
      const Scalar a = rng.uniform(p), b = rng.uniform(p), c = rng.uniform(p);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      CHECK(f.mul(a, b) == static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
  CHECK_THROWS_AS(Field(7).inv(0), Error);
}

TEST_CASE("det examples") {
  const Field f(7);
  CHECK(det(f, Matrix::identity(5)) == 1);
  CHECK(det(f, Matrix::from_rows({vec({2, 4, 1}), vec({4, 2, 1}), vec({1, 1, 1})}, 3)) == 6);
  CHECK(det(f, Matrix::from_columns({vec({1, 2, 3}), vec({1, 2, 3}), vec({0, 1, 5})}, 3)) == 0);
  CHECK_THROWS_AS(det(f, Matrix(2, 3)), Error);
}

TEST_CASE("det agrees with the Leibniz formula and is multiplicative") {
  SplitMix64 rng(5);
  for (std::uint32_t p : {5u, 7u, 31u, 65537u}) {
    const Field f(p);
    for (int n = 1; n <= 5; ++n) {
      for (int t = 0; t < 20; ++t) {
        const Matrix a = random_matrix(f, n, n, rng);
        const Matrix b = random_matrix(f, n, n, rng);
        CHECK(det(f, a) == oracle::leibniz_det(as_grid(a), p));
        CHECK(det(f, multiply(f, a, b)) == f.mul(det(f, a), det(f, b)));
      }
    }
  }
}

TEST_CASE("rank plus nullity equals columns") {
  SplitMix64 rng(9);
  const Field f(3);
  for (int t = 0; t < 300; ++t) {
    const int rows = 1 + rng.uniform(4), cols = 1 + rng.uniform(4);
    Matrix m = random_matrix(f, rows, cols, rng);
    // Low-rank samples too.
    if (t % 3 == 0 && rows > 1) {
      for (int c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c);
    }
    const VectorList ker = kernel(f, m);
    CHECK(rank(f, m) + static_cast<int>(ker.size()) == cols);
    // Kernel oracle: count x with m x = 0 by enumeration.
    std::size_t solutions = 0;
    for (const auto& x : oracle::all_vectors(cols, 3)) {
      bool zero = true;
      for (int r = 0; r < rows && zero; ++r) {
        std::uint32_t s = 0;
        for (int c = 0; c < cols; ++c) s += m(r, c) * x[c];
        zero = s % 3 == 0;
      }
      solutions += zero;
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < ker.size(); ++i) expected *= 3;
    CHECK(solutions == expected);
    for (const Vector& k : ker) {
      for (int r = 0; r < rows; ++r) {
        Scalar s = 0;
        for (int c = 0; c < cols; ++c) s = f.add(s, f.mul(m(r, c), k[c]));
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("intersection_basis examples") {
  const Field f(7);
  const VectorList s = {vec({1, 2, 0, 0}), vec({0, 1, 1, 0})};
  const std::vector<VectorList> single = {s};
  CHECK(intersection_basis(f, single, 4).size() == 2);
  for (const Vector& v : intersection_basis(f, single, 4)) CHECK(in_span(f, s, v, 4));

  const std::vector<VectorList> two = {{standard_vector(4, 0), standard_vector(4, 1)},
                                       {standard_vector(4, 1), standard_vector(4, 2)}};
  const VectorList e2 = intersection_basis(f, two, 4);
  REQUIRE(e2.size() == 1);
  CHECK(e2[0] == standard_vector(4, 1));

  const std::vector<VectorList> example = {{vec({1, 0, 0, 0}), vec({0, 1, 0, 0})},
                                         {vec({0, 1, 0, 0}), vec({1, 1, 0, 0})},
                                         {vec({0, 0, 1, 0}), vec({1, 0, 1, 0})},
                                         {vec({0, 0, 0, 1}), vec({1, 0, 0, 1})}};
  const VectorList e1 = intersection_basis(f, example, 4);
  REQUIRE(e1.size() == 1);
  CHECK(e1[0] == standard_vector(4, 0));

  const std::vector<VectorList> dependent = {{vec({1, 1}), vec({2, 2})}};
  CHECK_THROWS_AS(intersection_basis(f, dependent, 2), Error);
}

TEST_CASE("intersection_basis matches brute-force enumeration") {
  SplitMix64 rng(21);
  const std::uint32_t p = 3;
  const Field f(p);
  const int n = 4;
  for (int t = 0; t < 150; ++t) {
    std::vector<VectorList> spaces;
    const int count = 1 + rng.uniform(3);
    while (static_cast<int>(spaces.size()) < count) {
      VectorList b;
      const int dim = 1 + rng.uniform(n);
      for (int i = 0; i < dim; ++i) {
        Vector v(n);
        for (Scalar& x : v) x = rng.uniform(p);
        b.push_back(v);
      }
      if (is_independent(f, b, n)) spaces.push_back(b);
    }
    const VectorList basis = intersection_basis(f, spaces, n);
    CHECK(is_independent(f, basis, n));
    std::vector<oracle::Vec> common = oracle::span_elements(spaces[0], n, p);
    for (std::size_t s = 1; s < spaces.size(); ++s) {
      const auto other = oracle::span_elements(spaces[s], n, p);
      std::vector<oracle::Vec> keep;
      std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                            std::back_inserter(keep));
      common = keep;
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expected *= p;
    CHECK(common.size() == expected);
    for (const Vector& v : basis) {
      for (const VectorList& s : spaces) CHECK(in_span(f, s, v, n));
    }
  }
}

TEST_CASE("extend_to_basis examples") {
  const Field f(5);
  const VectorList empty = extend_to_basis(f, {}, 2);
  CHECK(empty == VectorList{vec({1, 0}), vec({0, 1})});
  CHECK(extend_to_basis(f, {vec({1, 0})}, 2) == VectorList{vec({1, 0}), vec({0, 1})});
  CHECK(extend_to_basis(f, {vec({1, 1})}, 2) == VectorList{vec({1, 1}), vec({1, 0})});
  CHECK_THROWS_AS(extend_to_basis(f, {vec({1, 1}), vec({2, 2})}, 2), Error);
}

}  // TEST_SUITE
