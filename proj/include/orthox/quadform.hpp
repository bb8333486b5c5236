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
#include <string>
#include <vector>

#include "orthox/bigint.hpp"
#include "orthox/gaussian.hpp"

namespace orthox {

/// Integral binary form a*x^2 + 2*b*x*y + c*y^2 together with the target
/// l^2, where ac - b^2 = l^2.
class QuadForm {
 public:
  /// Throws PreconditionError unless ac - b^2 = l^2 and l >= 0.
  QuadForm(BigInt a, BigInt b, BigInt c, BigInt l);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& l() const { return l_; }
  BigInt target() const { return BigInt(l_ * l_); }

  BigInt evaluate(const BigInt& x, const BigInt& y) const;

 private:
  BigInt a_, b_, c_, l_;
};

/// x, y with f(x, y) = l^2, plus u = (ax + by)/l, which satisfies u^2 + y^2 = a.
struct Representation {
  BigInt x;
  BigInt y;
  BigInt u;
};

/// Exponent pair picked for one split prime p = 1 mod 4 dividing a.
struct ExponentChoice {
  unsigned a = 0;  // power of the rational prime p
  unsigned b = 0;  // power of the conjugate Gaussian prime
  friend bool operator==(const ExponentChoice&, const ExponentChoice&) = default;
};

/// Intermediate data of the constructive solver, kept for tracing.
struct SolveTrace {
  GaussFactorization target_factorization;  // of l + ib
  std::vector<std::string> exponent_choices;  // "p=5: m=1 s=0 t=2 -> (0,1)"
  GaussInt u_plus_iy;                          // before associate scanning
  int associate = 0;                           // index of the associate used
};

/// a >= 0 and, if a > 0, every prime q = 3 mod 4 has even valuation in a.
bool is_representable(const QuadForm& f);

/// Given m = v_p(a), s = exponent of the rational prime p in l + ib and
/// t = excess exponent of the dominant Gaussian prime above p, return
/// (a_j, b_j) with 2a_j + b_j = m and s + min(t, b_j) >= a_j + b_j.
/// Throws PreconditionError when 2s + t < m.
ExponentChoice choose_exponents(unsigned m, unsigned s, unsigned t);

/// Constructive representation of l^2 through factorization in Z[i].
/// Returns nullopt when the form does not represent l^2.
/// Throws PreconditionError for a <= 0.
std::optional<Representation> solve(const QuadForm& f, SolveTrace* trace = nullptr);

/// Brute-force oracle. Scans |y| <= isqrt(a) (or `y_bound` when smaller) and
/// solves the quadratic in x exactly; returns the lexicographically smallest
/// (x, y). Throws PreconditionError for a <= 0.
std::optional<Representation> oracle_solve(const QuadForm& f,
                                            std::optional<BigInt> y_bound = std::nullopt);

/// Every solution within the proven bound |y| <= isqrt(a), sorted by (x, y).
std::vector<Representation> oracle_all(const QuadForm& f);

}  // namespace orthox
