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

#include <optional>
#include <span>
#include <vector>

#include "orthox/bigint.hpp"

namespace orthox {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  BigInt product() const;
  /// Exponent of `p` (0 when absent).
  unsigned exponent_of(const BigInt& p) const;
};

/// r with r*r == m, or nullopt when m is not a perfect square.
/// Throws PreconditionError for m < 0.
std::optional<BigInt> isqrt_exact(const BigInt& m);

/// Deterministic primality test: trial division, then strong probable-prime
/// tests to the first 13 prime bases (proven correct below 3.3e24), plus a
/// Baillie-PSW round from GMP beyond that range.
bool is_prime(const BigInt& n);

/// Complete factorization of m != 0. Trial division by primes below 2^20,
/// then Brent's variant of Pollard rho with fixed seeds on what remains.
Factorization factorize(const BigInt& m);

/// Largest e with p^e | m. Throws for m == 0 or p not prime.
unsigned valuation(const BigInt& p, const BigInt& m);

/// True when every prime q = 3 mod 4 divides m to an even power
/// (equivalently, m > 0 is a sum of two squares). Requires m > 0.
bool inert_valuations_even(const BigInt& m);

/// gcd of all entries; 0 for an empty or all-zero span.
BigInt content(std::span<const BigInt> xs);

}  // namespace orthox
