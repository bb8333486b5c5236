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

#include <string>
#include <vector>

#include "orthox/bigint.hpp"

namespace orthox {

/// Element re + im*i of Z[i].
struct GaussInt {
  BigInt re = 0;
  BigInt im = 0;

  GaussInt() = default;
  GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(long r, long i) : re(r), im(i) {}

  BigInt norm() const { return BigInt(re * re + im * im); }
  GaussInt conj() const { return {re, BigInt(-im)}; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {BigInt(a.re + b.re), BigInt(a.im + b.im)};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {BigInt(a.re - b.re), BigInt(a.im - b.im)};
  }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {BigInt(a.re * b.re - a.im * b.im), BigInt(a.re * b.im + a.im * b.re)};
  }
  GaussInt operator-() const { return {BigInt(-re), BigInt(-im)}; }

  std::string to_string() const;
};

/// i^k for k mod 4.
GaussInt unit_power(int k);
GaussInt pow(const GaussInt& z, unsigned e);

/// Quotient rounded to the nearest lattice point (ties toward -infinity).
GaussInt div_round(const GaussInt& a, const GaussInt& b);
/// True when b | a in Z[i]; on success stores a/b in `quotient`.
bool divides(const GaussInt& b, const GaussInt& a, GaussInt* quotient = nullptr);
/// Euclidean gcd, normalized to the first quadrant (re > 0, im >= 0) or zero.
GaussInt gcd(GaussInt a, GaussInt b);

/// Associate with re > 0 and im >= 0. Requires z != 0.
GaussInt first_quadrant(const GaussInt& z);

struct GaussPrimePower {
  GaussInt prime;
  unsigned exponent = 0;
};

/// z = i^unit * prod(prime^exponent). Primes are in first-quadrant form,
/// ordered by (norm, re).
struct GaussFactorization {
  int unit = 0;
  std::vector<GaussPrimePower> factors;

  GaussInt product() const;
  /// Exponent of the prime associated to `pi` (0 when absent).
  unsigned exponent_of(const GaussInt& pi) const;
};

/// Canonical Gaussian prime above a rational prime p = 2 or p = 1 mod 4.
/// Returns 1+i for p = 2 and the factor with re > im > 0 otherwise.
/// Throws PreconditionError for p = 3 mod 4 or non-prime p.
GaussInt split_prime(const BigInt& p);

/// Unit-normalized prime factorization of z != 0.
GaussFactorization gauss_factorize(const GaussInt& z);

}  // namespace orthox
