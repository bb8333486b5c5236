// Copyright 2026 The orthox Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "orthox/constructions.hpp"
#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"
#include "orthox/lattice.hpp"

using namespace orthox;

namespace {

long to_long(const BigInt& z) { return z.get_si(); }

// Columns of the rotation x -> q x q^* on pure quaternions.
std::array<IntVector, 3> rotation_columns(long a, long b, long c, long d) {
  return {IntVector{a * a + b * b - c * c - d * d, 2 * (b * c + a * d), 2 * (b * d - a * c)},
          IntVector{2 * (b * c - a * d), a * a - b * b + c * c - d * d, 2 * (c * d + a * b)},
          IntVector{2 * (b * d + a * c), 2 * (c * d - a * b), a * a - b * b - c * c + d * d}};
}

// Columns of left multiplication by q = a + bi + cj + dk.
std::array<IntVector, 4> left_mult_columns(long a, long b, long c, long d) {
  return {IntVector{a, b, c, d}, IntVector{-b, a, d, -c}, IntVector{-c, -d, a, b},
          IntVector{-d, c, -b, a}};
}

}  // namespace

TEST_CASE("vector basics") {
  const IntVector v{1, 2, -2};
  CHECK(v.norm_sq() == 9);
  CHECK(v.to_string() == "(1,2,-2)");
  CHECK(IntVector{4, 6, -8}.content() == 2);
  CHECK(IntVector{4, 6, -8}.divided_exact(BigInt(2)) == IntVector{2, 3, -4});
  const IntVector m{4, 6, -8};
  CHECK_THROWS_AS(m.divided_exact(BigInt(3)), InternalError);
  CHECK(dot(IntVector{1, 2, 3}, IntVector{4, 5, 6}) == 32);
  const IntVector two{1, 2}, three{1, 2, 3};
  CHECK_THROWS_AS(dot(two, three), PreconditionError);
  CHECK(concat(IntVector{1}, IntVector{2, 3}) == IntVector{1, 2, 3});
  CHECK(cross(IntVector{1, 0, 0}, IntVector{0, 1, 0}) == IntVector{0, 0, 1});
}

TEST_CASE("determinant") {
  const std::vector<IntVector> cols{IntVector{2, 0, 1}, IntVector{1, 3, 2}, IntVector{1, 1, 1}};
  // 2(3-2) - 1(0-1) + 1(0-3) = 0
  CHECK(determinant(IntMatrix::from_columns(cols)) == 0);
  const std::vector<IntVector> c2{IntVector{0, 1}, IntVector{1, 0}};
  CHECK(determinant(IntMatrix::from_columns(c2)) == -1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int i = 0; i < 500; ++i) {
    long m[3][3];
    for (auto& row : m)
      for (auto& e : row) e = d(rng);
    const long ref = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    IntMatrix mm(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) mm(r, c) = m[r][c];
    REQUIRE(determinant(mm) == ref);
  }
}

TEST_CASE("gram examples") {
  const std::vector<IntVector> e{IntVector{1, 0}, IntVector{0, 1}};
  const IntMatrix g = gram(e);
  CHECK(g(0, 0) == 1);
  CHECK(g(0, 1) == 0);
  CHECK(g(1, 1) == 1);
  const std::vector<IntVector> k{IntVector{2, -1, 0}, IntVector{2, 0, -1}};
  const IntMatrix g2 = gram(k);
  CHECK(g2(0, 0) == 5);
  CHECK(g2(0, 1) == 4);
  CHECK(g2(1, 0) == 4);
  CHECK(g2(1, 1) == 5);
  CHECK(gram(std::vector<IntVector>{}).rows == 0);
  const std::vector<IntVector> bad{IntVector{1, 0}, IntVector{0, 1, 0}};
  CHECK_THROWS_AS(gram(bad), PreconditionError);
}

TEST_CASE("kernel_basis examples") {
  const auto k = kernel_basis(IntVector{1, 2, 2});
  CHECK(k.w1 == IntVector{2, -1, 0});
  CHECK(k.w2 == IntVector{2, 0, -1});
  CHECK(determinant(k.gram) == 9);

  const auto e = kernel_basis(IntVector{0, 0, 1});
  CHECK(e.w1 == IntVector{1, 0, 0});
  CHECK(e.w2 == IntVector{0, 1, 0});

  CHECK(determinant(kernel_basis(IntVector{2, 3, 6}).gram) == 49);
  const IntVector zero{0, 0, 0}, imprimitive{2, 4, 4};
  CHECK_THROWS_AS(kernel_basis(zero), PreconditionError);
  CHECK_THROWS_AS(kernel_basis(imprimitive), PreconditionError);
}

TEST_CASE("kernel basis: orthogonal, full covolume, every v with |coords| <= 50") {
  std::size_t count = 0;
  for (long x = -50; x <= 50; ++x)
    for (long y = -50; y <= 50; ++y)
      for (long z = -50; z <= 50; ++z) {
        if (std::gcd(std::gcd(x, y), z) != 1) continue;
        const IntVector v{x, y, z};
        const auto k = kernel_basis(v);
        REQUIRE(dot(v, k.w1) == 0);
        REQUIRE(dot(v, k.w2) == 0);
        // covolume |v| of the primitive kernel forces index 1
        REQUIRE(determinant(k.gram) == v.norm_sq());
        ++count;
      }
  CHECK(count > 800000);
}

TEST_CASE("kernel basis spans every small kernel point") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int it = 0; it < 3000; ++it) {
    long v0 = d(rng), v1 = d(rng), v2 = d(rng);
    if (it < 27) v0 = it % 3 - 1, v1 = it / 3 % 3 - 1, v2 = it / 9 - 1;
    if (std::gcd(std::gcd(v0, v1), v2) != 1) continue;
    const auto k = kernel_basis(IntVector{v0, v1, v2});
    const long w1[3] = {to_long(k.w1[0]), to_long(k.w1[1]), to_long(k.w1[2])};
    const long w2[3] = {to_long(k.w2[0]), to_long(k.w2[1]), to_long(k.w2[2])};
    const long a = w1[0] * w1[0] + w1[1] * w1[1] + w1[2] * w1[2];
    const long b = w1[0] * w2[0] + w1[1] * w2[1] + w1[2] * w2[2];
    const long c = w2[0] * w2[0] + w2[1] * w2[1] + w2[2] * w2[2];
    const long det = a * c - b * b;
    for (long x = -10; x <= 10; ++x)
      for (long y = -10; y <= 10; ++y)
        for (long z = -10; z <= 10; ++z) {
          if (v0 * x + v1 * y + v2 * z != 0) continue;
          const long p1 = w1[0] * x + w1[1] * y + w1[2] * z;
          const long p2 = w2[0] * x + w2[1] * y + w2[2] * z;
          const long na = p1 * c - p2 * b, nb = a * p2 - b * p1;
          REQUIRE(na % det == 0);
          REQUIRE(nb % det == 0);
          const long al = na / det, be = nb / det;
          REQUIRE(al * w1[0] + be * w2[0] == x);
          REQUIRE(al * w1[1] + be * w2[1] == y);
          REQUIRE(al * w1[2] + be * w2[2] == z);
        }
  }
}

TEST_CASE("kernel_lattice in higher dimension") {
  const IntVector v{1, 1, 1, 1, 1, 1};
  const auto k = kernel_lattice(v);
  REQUIRE(k.size() == 5);
  for (const auto& w : k) CHECK(dot(v, w) == 0);
  CHECK(determinant(gram(k)) == 6);
}

TEST_CASE("is_orthoregular") {
  const std::vector<IntVector> good{IntVector{1, 2, 2}, IntVector{2, -2, 1}};
  CHECK(is_orthoregular(good));
  const std::vector<IntVector> unequal{IntVector{1, 0, 0}, IntVector{0, 2, 0}};
  CHECK_FALSE(is_orthoregular(unequal));
  const std::vector<IntVector> skew{IntVector{1, 0}, IntVector{1, 0}};
  CHECK_FALSE(is_orthoregular(skew));
  const std::vector<IntVector> zero{IntVector{0, 0}};
  CHECK_FALSE(is_orthoregular(zero));
}

TEST_CASE("cofactor_complete examples") {
  const std::vector<IntVector> s3{IntVector{1, 2, 2}, IntVector{2, -2, 1}};
  CHECK(cofactor_complete(s3) == IntVector{2, 1, -2});
  CHECK(cross(s3[0], s3[1]) == IntVector{6, 3, -6});

  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      const std::vector<IntVector> s2{IntVector{a, b}};
      CHECK(cofactor_complete(s2) == IntVector{-b, a});
    }

  const OrthoBasis h = hurwitz_basis(IntVector{1, 1, 1, 1});
  const std::vector<IntVector> s4(h.vectors().begin(), h.vectors().begin() + 3);
  const IntVector out = cofactor_complete(s4);
  CHECK((out == h[3] || out == -h[3]));

  const std::vector<IntVector> odd{IntVector{1, 1, 1}, IntVector{1, -1, 0}};
  CHECK_THROWS_AS(cofactor_complete(odd), PreconditionError);
  const std::vector<IntVector> bad{IntVector{1, 2, 2}, IntVector{1, 0, 0}};
  CHECK_THROWS_AS(cofactor_complete(bad), PreconditionError);
}

TEST_CASE("cofactor_complete on quaternion-generated systems") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    const long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (a == 0 && b == 0 && c == 0 && e == 0) continue;
    const auto r = rotation_columns(a, b, c, e);
    const std::vector<IntVector> pair{r[0], r[1]};
    REQUIRE(cofactor_complete(pair) == r[2]);

    const auto q = left_mult_columns(a, b, c, e);
    const std::vector<IntVector> triple{q[0], q[1], q[2]};
    REQUIRE(cofactor_complete(triple) == q[3]);
  }
}

TEST_CASE("orthogonal complements have even 3 mod 4 valuations") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-60, 60);
  int checked = 0;
  while (checked < 10000) {
    const long m = d(rng), n = d(rng), p = d(rng), q = d(rng);
    const IntVector v{m * m + n * n - p * p - q * q, 2 * (m * q + n * p), 2 * (n * q - m * p)};
    if (v.is_zero()) continue;
    REQUIRE(isqrt_exact(v.norm_sq()));
    const IntVector w = cross(v, IntVector{d(rng), d(rng), d(rng)});
    if (w.is_zero()) continue;
    REQUIRE(dot(v, w) == 0);
    for (const auto& pp : factorize(w.norm_sq()).factors)
      if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 4) == 3) REQUIRE(pp.exponent % 2 == 0);
    ++checked;
  }
}
