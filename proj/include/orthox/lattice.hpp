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

#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orthox/bigint.hpp"

namespace orthox {

/// Dense integer vector, n >= 1.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<BigInt> coords);
  IntVector(std::initializer_list<long> coords);
  static IntVector zero(std::size_t n);

  std::size_t dim() const { return coords_.size(); }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  BigInt& operator[](std::size_t i) { return coords_[i]; }
  std::span<const BigInt> coords() const { return coords_; }

  BigInt norm_sq() const;
  bool is_zero() const;
  /// gcd of the coordinates.
  BigInt content() const;

  IntVector scaled(const BigInt& k) const;
  /// Exact division of every coordinate; throws InternalError if inexact.
  IntVector divided_exact(const BigInt& k) const;
  IntVector operator-() const { return scaled(BigInt(-1)); }
  friend IntVector operator+(const IntVector& a, const IntVector& b);
  friend IntVector operator-(const IntVector& a, const IntVector& b);
  friend bool operator==(const IntVector& a, const IntVector& b) = default;
  friend bool operator<(const IntVector& a, const IntVector& b);

  /// "(1,2,-2)"
  std::string to_string() const;

 private:
  std::vector<BigInt> coords_;
};

/// Exact inner product; throws PreconditionError on dimension mismatch.
BigInt dot(const IntVector& a, const IntVector& b);
IntVector concat(const IntVector& a, const IntVector& b);

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, BigInt(0)) {}
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(std::span<const IntVector> cols);

  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Fraction-free (Bareiss) determinant with row pivoting.
BigInt determinant(IntMatrix m);

/// Gram matrix of inner products; {} gives the 0x0 matrix.
IntMatrix gram(std::span<const IntVector> vs);

/// Basis of ker(v, -) within Z^3, plus its Gram matrix (a, b; b, c).
struct KernelBasis {
  IntVector w1;
  IntVector w2;
  IntMatrix gram;
};

/// Integral basis of {w in Z^n : (v, w) = 0} for primitive v, from unimodular
/// column reduction of the row v. Each vector has its first nonzero entry
/// positive; vectors are ordered by first nonzero position, then
/// lexicographically.
std::vector<IntVector> kernel_lattice(const IntVector& v);

/// n = 3 case of kernel_lattice; asserts det(gram) = |v|^2.
/// Throws PreconditionError for zero, non-primitive, or non-3D v.
KernelBasis kernel_basis(const IntVector& v);

IntVector cross(const IntVector& a, const IntVector& b);

/// Pairwise orthogonal, common nonzero norm. Empty lists are not orthoregular.
bool is_orthoregular(std::span<const IntVector> vs);

/// Completes n-1 orthoregular vectors in Z^n (common norm L) by the cofactor
/// vector of a formal last column, divided by l^(n-2). The result is
/// orthogonal to the inputs, has norm L, and det(v1, ..., vn) > 0.
/// Requires n even or L a perfect square.
IntVector cofactor_complete(std::span<const IntVector> vs);

}  // namespace orthox
