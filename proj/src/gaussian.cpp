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

#include "orthox/gaussian.hpp"

#include <algorithm>

#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"

namespace orthox {
namespace {

// round(n / d) for d > 0, halves rounded down.
BigInt round_div(const BigInt& n, const BigInt& d) {
  BigInt twice = 2 * n + d;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * d).get_mpz_t());
  return q;
}

}  // namespace

std::string GaussInt::to_string() const {
  if (im == 0) return re.get_str();
  std::string out = re == 0 ? "" : re.get_str();
  if (im > 0 && re != 0) out += "+";
  if (im == -1) out += "-";
  else if (im != 1) out += im.get_str();
  return out + "i";
}

GaussInt unit_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussInt pow(const GaussInt& z, unsigned e) {
  GaussInt acc{1, 0}, base = z;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

GaussInt div_round(const GaussInt& a, const GaussInt& b) {
  const BigInt n = b.norm();
  if (n == 0) throw PreconditionError("div_round: division by zero");
  const GaussInt num = a * b.conj();
  return {round_div(num.re, n), round_div(num.im, n)};
}

bool divides(const GaussInt& b, const GaussInt& a, GaussInt* quotient) {
  const BigInt n = b.norm();
  if (n == 0) return a.is_zero();
  const GaussInt num = a * b.conj();
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
    return false;
  if (quotient) *quotient = {BigInt(num.re / n), BigInt(num.im / n)};
  return true;
}

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = a - div_round(a, b) * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : first_quadrant(a);
}

GaussInt first_quadrant(const GaussInt& z) {
  if (z.is_zero()) throw PreconditionError("first_quadrant: zero has no associate class");
  GaussInt w = z;
  for (int k = 0; k < 4; ++k) {
    if (w.re > 0 && w.im >= 0) return w;
    w = w * GaussInt{0, 1};
  }
  throw InternalError("first_quadrant: no associate found for " + z.to_string());
}

GaussInt GaussFactorization::product() const {
  GaussInt acc = unit_power(unit);
  for (const auto& f : factors) acc = acc * pow(f.prime, f.exponent);
  return acc;
}

unsigned GaussFactorization::exponent_of(const GaussInt& pi) const {
  const GaussInt canon = first_quadrant(pi);
  for (const auto& f : factors)
    if (f.prime == canon) return f.exponent;
  return 0;
}

GaussInt split_prime(const BigInt& p) {
  if (p == 2) return {1, 1};
  if (!is_prime(p)) throw PreconditionError("split_prime: " + p.get_str() + " is not prime");
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
    throw PreconditionError("split_prime: " + p.get_str() + " is inert in Z[i]");

  // c^((p-1)/4) is a square root of -1 exactly when c is a non-residue.
  const BigInt e = (p - 1) / 4;
  const BigInt minus_one = p - 1;
  BigInt r;
  for (unsigned long c = 2;; ++c) {
    BigInt base = c;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((r * r) % p == minus_one) break;
  }
  GaussInt pi = gcd(GaussInt{p, 0}, GaussInt{r, 1});
  if (pi.norm() != p) throw InternalError("split_prime: gcd has wrong norm for " + p.get_str());
  // pi is in the first quadrant; of the conjugate pair pick re > im.
  if (pi.re < pi.im) pi = first_quadrant(pi.conj());
  return pi;
}

GaussFactorization gauss_factorize(const GaussInt& z) {
  if (z.is_zero()) throw PreconditionError("gauss_factorize: zero has no factorization");
  GaussFactorization out;
  GaussInt rest = z;
  const Factorization nf = factorize(z.norm());

  auto strip = [&](const GaussInt& pi, unsigned count) {
    for (unsigned k = 0; k < count; ++k) {
      GaussInt q;
      if (!divides(pi, rest, &q))
        throw InternalError("gauss_factorize: expected " + pi.to_string() + " | " +
                            rest.to_string());
      rest = std::move(q);
    }
    if (count) out.factors.push_back({pi, count});
  };

  for (const auto& pp : nf.factors) {
    const unsigned long r4 = mpz_fdiv_ui(pp.prime.get_mpz_t(), 4);
    if (pp.prime == 2) {
      strip(GaussInt{1, 1}, pp.exponent);
    } else if (r4 == 3) {
      if (pp.exponent % 2 != 0)
        throw InternalError("gauss_factorize: inert prime " + pp.prime.get_str() +
                            " divides the norm to an odd power");
      strip(GaussInt{pp.prime, 0}, pp.exponent / 2);
    } else {
      const GaussInt pi = split_prime(pp.prime);
      const GaussInt pi_bar = first_quadrant(pi.conj());
      unsigned s = 0;
      GaussInt probe = rest, q;
      while (s < pp.exponent && divides(pi, probe, &q)) {
        probe = q;
        ++s;
      }
      strip(pi, s);
      strip(pi_bar, pp.exponent - s);
    }
  }

  for (int k = 0; k < 4; ++k) {
    if (rest == unit_power(k)) {
      out.unit = k;
      std::stable_sort(out.factors.begin(), out.factors.end(),
                       [](const GaussPrimePower& a, const GaussPrimePower& b) {
                         const BigInt na = a.prime.norm(), nb = b.prime.norm();
                         if (na != nb) return na < nb;
                         return a.prime.re < b.prime.re;
                       });
      return out;
    }
  }
  throw InternalError("gauss_factorize: cofactor " + rest.to_string() + " is not a unit");
}

}  // namespace orthox
