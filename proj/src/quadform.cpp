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

#include "orthox/quadform.hpp"

#include <algorithm>
#include <array>

#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"

namespace orthox {
namespace {

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

void require_positive_a(const QuadForm& f, const char* who) {
  if (sgn(f.a()) <= 0)
    throw PreconditionError(std::string(who) + ": requires a > 0, got a = " + f.a().get_str());
}

Representation complete(const QuadForm& f, BigInt x, BigInt y) {
  Representation r{std::move(x), std::move(y), 0};
  if (f.l() != 0) r.u = (f.a() * r.x + f.b() * r.y) / f.l();
  return r;
}

}  // namespace

QuadForm::QuadForm(BigInt a, BigInt b, BigInt c, BigInt l)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), l_(std::move(l)) {
  if (sgn(l_) < 0) throw PreconditionError("QuadForm: l must be nonnegative");
  if (a_ * c_ - b_ * b_ != l_ * l_)
    throw PreconditionError("QuadForm: ac - b^2 = " + BigInt(a_ * c_ - b_ * b_).get_str() +
                            " differs from l^2 = " + BigInt(l_ * l_).get_str());
}

BigInt QuadForm::evaluate(const BigInt& x, const BigInt& y) const {
  return a_ * x * x + 2 * b_ * x * y + c_ * y * y;
}

bool is_representable(const QuadForm& f) {
  if (sgn(f.a()) < 0) return false;
  if (f.a() == 0) return true;
  return inert_valuations_even(f.a());
}

ExponentChoice choose_exponents(unsigned m, unsigned s, unsigned t) {
  if (2ull * s + t < m)
    throw PreconditionError("choose_exponents: 2s + t < m (" + std::to_string(s) + ", " +
                            std::to_string(t) + ", " + std::to_string(m) + ")");
  if (2 * s <= m) return {s, m - 2 * s};
  return {m / 2, m % 2};
}

std::optional<Representation> solve(const QuadForm& f, SolveTrace* trace) {
  require_positive_a(f, "solve");
  if (!is_representable(f)) return std::nullopt;

  const BigInt& a = f.a();
  const BigInt& b = f.b();
  const BigInt& l = f.l();
  const GaussInt target{l, b};
  const bool target_zero = target.is_zero();

  GaussFactorization tf;
  if (!target_zero) tf = gauss_factorize(target);
  if (trace) trace->target_factorization = tf;

  GaussInt acc{1, 0};
  for (const auto& pp : factorize(a).factors) {
    const unsigned m = pp.exponent;
    const unsigned long r4 = mpz_fdiv_ui(pp.prime.get_mpz_t(), 4);
    if (pp.prime == 2) {
      acc = acc * pow(GaussInt{1, 1}, m);
    } else if (r4 == 3) {
      acc = acc * GaussInt{ipow(pp.prime, m / 2), 0};
    } else {
      const GaussInt pi = split_prime(pp.prime);
      const GaussInt pi_bar = first_quadrant(pi.conj());
      unsigned s = 0, t = 0;
      GaussInt dominant = pi;
      if (target_zero) {
        // Everything divides 0.
        s = m;
      } else {
        const unsigned e_pi = tf.exponent_of(pi);
        const unsigned e_bar = tf.exponent_of(pi_bar);
        s = std::min(e_pi, e_bar);
        t = std::max(e_pi, e_bar) - s;
        if (e_bar > e_pi) dominant = pi_bar;
      }
      const ExponentChoice ch = choose_exponents(m, s, t);
      if (trace)
        trace->exponent_choices.push_back(
            "p=" + pp.prime.get_str() + ": m=" + std::to_string(m) + " s=" + std::to_string(s) +
            " t=" + std::to_string(t) + " -> (" + std::to_string(ch.a) + "," +
            std::to_string(ch.b) + ")");
      acc = acc * GaussInt{ipow(pp.prime, ch.a), 0} * pow(dominant.conj(), ch.b);
    }
  }
  if (trace) trace->u_plus_iy = acc;

  // The construction itself should pass on the first candidate; the
  // associates and conjugates only guard against canonical-form drift.
  std::array<GaussInt, 8> candidates;
  for (int k = 0; k < 4; ++k) {
    candidates[k] = acc * unit_power(k);
    candidates[4 + k] = acc.conj() * unit_power(k);
  }
  for (int k = 0; k < 8; ++k) {
    const BigInt& u = candidates[k].re;
    const BigInt& y = candidates[k].im;
    BigInt num = u * l - b * y;
    if (!mpz_divisible_p(num.get_mpz_t(), a.get_mpz_t())) continue;
    BigInt x = num / a;
    if (f.evaluate(x, y) != f.target())
      throw InternalError("solve: constructed (x, y) fails the form equation");
    if (trace) trace->associate = k;
    Representation r = complete(f, std::move(x), y);
    if (l != 0 && r.u != u) throw InternalError("solve: u = (ax + by)/l mismatch");
    return r;
  }
  throw InternalError("solve: a = " + a.get_str() + " does not divide ul - by for any associate");
}

std::optional<Representation> oracle_solve(const QuadForm& f, std::optional<BigInt> y_bound) {
  require_positive_a(f, "oracle_solve");
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), f.a().get_mpz_t());
  if (y_bound && *y_bound < bound) bound = *y_bound;

  std::optional<Representation> best;
  const BigInt& a = f.a();
  const BigInt& b = f.b();
  const BigInt& l = f.l();
  // a*f(x,y) = (ax + by)^2 + l^2 y^2, so ax + by = +-l*sqrt(a - y^2).
  for (BigInt y = -bound; y <= bound; ++y) {
    BigInt rest = a - y * y;
    auto root = isqrt_exact(rest);
    if (!root) continue;
    for (int sign : {-1, 1}) {
      BigInt num = sign * l * *root - b * y;
      if (!mpz_divisible_p(num.get_mpz_t(), a.get_mpz_t())) continue;
      BigInt x = num / a;
      if (f.evaluate(x, y) != f.target()) continue;
      if (!best || x < best->x || (x == best->x && y < best->y)) best = complete(f, x, y);
    }
  }
  return best;
}

std::vector<Representation> oracle_all(const QuadForm& f) {
  require_positive_a(f, "oracle_all");
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), f.a().get_mpz_t());
  std::vector<Representation> out;
  for (BigInt y = -bound; y <= bound; ++y) {
    BigInt rest = f.a() - y * y;
    auto root = isqrt_exact(rest);
    if (!root) continue;
    for (int sign : {-1, 1}) {
      if (sign == 1 && (*root == 0 || f.l() == 0)) continue;
      BigInt num = sign * f.l() * *root - f.b() * y;
      if (!mpz_divisible_p(num.get_mpz_t(), f.a().get_mpz_t())) continue;
      BigInt x = num / f.a();
      if (f.evaluate(x, y) == f.target()) out.push_back(complete(f, x, y));
    }
  }
  std::sort(out.begin(), out.end(), [](const Representation& p, const Representation& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  return out;
}

}  // namespace orthox
