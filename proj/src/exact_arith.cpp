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

#include "orthox/exact_arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "orthox/error.hpp"

namespace orthox {
namespace {

constexpr std::uint32_t kTrialLimit = 1u << 20;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < kTrialLimit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong probable-prime test of odd n > 2 to base a.
bool strong_probable_prime(const BigInt& n, unsigned long a) {
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x;
  BigInt base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's cycle finding with batched gcds. Returns a nontrivial factor of the
// odd composite n, or 0 if this seed failed.
BigInt brent_rho(const BigInt& n, unsigned long c) {
  constexpr unsigned long kBatch = 128;
  BigInt y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  auto step = [&](BigInt& v) { v = (v * v + c) % n; };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long lim = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        BigInt diff = x - y;
        q = (q * abs(diff)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
    }
    r *= 2;
  } while (g == 1 && r < (1ul << 40));

  if (g == n) {
    // Batch overshot: retrace one step at a time.
    do {
      step(ys);
      BigInt diff = x - ys;
      diff = abs(diff);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n || g == 1) return 0;
  return g;
}

void split_composite(const BigInt& n, std::vector<BigInt>& primes_out) {
  if (is_prime(n)) {
    primes_out.push_back(n);
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    split_composite(r, primes_out);
    split_composite(r, primes_out);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    BigInt d = brent_rho(n, c);
    if (d != 0) {
      split_composite(d, primes_out);
      BigInt rest = n / d;
      split_composite(rest, primes_out);
      return;
    }
    if (c > 10000) throw InternalError("pollard rho failed to split " + n.get_str());
  }
}

}  // namespace

BigInt Factorization::product() const {
  BigInt acc = sign;
  for (const auto& pp : factors) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    acc *= pw;
  }
  return acc;
}

unsigned Factorization::exponent_of(const BigInt& p) const {
  auto it = std::find_if(factors.begin(), factors.end(),
                         [&](const PrimePower& pp) { return pp.prime == p; });
  return it == factors.end() ? 0 : it->exponent;
}

std::optional<BigInt> isqrt_exact(const BigInt& m) {
  if (sgn(m) < 0) throw PreconditionError("isqrt_exact: negative argument " + m.get_str());
  if (!mpz_perfect_square_p(m.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> kBases = {2,  3,  5,  7,  11, 13, 17,
                                                           19, 23, 29, 31, 37, 41};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  for (unsigned long a : kBases)
    if (!strong_probable_prime(n, a)) return false;
  // Deterministic bound for the 13 bases above: 3317044064679887385961981.
  static const BigInt kProvenBelow("3317044064679887385961981");
  if (n < kProvenBelow) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

Factorization factorize(const BigInt& m) {
  if (m == 0) throw PreconditionError("factorize: zero has no factorization");
  Factorization out;
  out.sign = sgn(m) < 0 ? -1 : 1;
  BigInt rest = abs(m);

  for (std::uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    out.factors.push_back({BigInt(p), e});
  }
  if (rest == 1) return out;

  std::vector<BigInt> big;
  if (rest < BigInt(kTrialLimit) * kTrialLimit) {
    // No factor below 2^20 and rest < 2^40: rest is prime.
    big.push_back(rest);
  } else {
    split_composite(rest, big);
  }
  std::sort(big.begin(), big.end());
  for (const auto& p : big) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

unsigned valuation(const BigInt& p, const BigInt& m) {
  if (m == 0) throw PreconditionError("valuation: v_p(0) is infinite");
  if (!is_prime(p)) throw PreconditionError("valuation: " + p.get_str() + " is not prime");
  BigInt rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

bool inert_valuations_even(const BigInt& m) {
  if (sgn(m) <= 0) throw PreconditionError("inert_valuations_even: requires m > 0");
  for (const auto& pp : factorize(m).factors) {
    if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 4) == 3 && pp.exponent % 2 != 0) return false;
  }
  return true;
}

BigInt content(std::span<const BigInt> xs) {
  BigInt g = 0;
  for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

}  // namespace orthox
