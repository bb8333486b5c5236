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

#include "orthox/sweep.hpp"

#include <algorithm>
#include <numeric>

#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"
#include "orthox/extend.hpp"

namespace orthox {
namespace {

constexpr std::size_t kMaxMessages = 10;

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

void keep_first_messages(std::vector<std::string>& msgs) {
  std::sort(msgs.begin(), msgs.end());
  if (msgs.size() > kMaxMessages) msgs.resize(kMaxMessages);
}

// ---- theorem sweep -------------------------------------------------------

TheoremSweepReport sweep_slice(long a, long bound) {
  TheoremSweepReport out;
  for (long b = 0; b <= bound; ++b) {
    for (long c = 0; c <= bound; ++c) {
      if (a == 0 && b == 0 && c == 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      const long n2 = a * a + b * b + c * c;
      auto l = isqrt_exact(BigInt(n2));
      if (!l) continue;
      const IntVector v{a, b, c};
      ++out.vectors;
      try {
        const ExtendResult r = extend3_traced(v);
        const OrthoBasis& basis = r.basis;
        const bool ok = basis.size() == 3 && basis[0] == v && basis.length_sq() == n2 &&
                        basis.determinant() == *l * *l * *l;
        if (!ok) {
          ++out.failures;
          out.messages.push_back("basis check failed for " + v.to_string());
        }
        ++out.gram_checks;
        if (determinant(r.trace.kernel->gram) != r.trace.primitive.norm_sq()) {
          ++out.gram_failures;
          out.messages.push_back("det(gram) != l^2 for " + v.to_string());
        }
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t i = 0; i < 3; ++i) out.digest += long(3 * k + i + 1) * basis[k][i];
      } catch (const std::exception& e) {
        ++out.failures;
        out.messages.push_back(v.to_string() + ": " + e.what());
      }
    }
  }
  return out;
}

void merge(TheoremSweepReport& into, TheoremSweepReport&& part) {
  into.vectors += part.vectors;
  into.failures += part.failures;
  into.gram_checks += part.gram_checks;
  into.gram_failures += part.gram_failures;
  into.digest += part.digest;
  for (auto& m : part.messages) into.messages.push_back(std::move(m));
}

// ---- form agreement ------------------------------------------------------

QuadForm kernel_form(std::mt19937_64& rng, long max_a) {
  for (long r = 6;; r = std::max(1L, r - 1)) {
    const IntVector v = random_integer_norm_vector(rng, r);
    const BigInt l = *isqrt_exact(v.norm_sq());
    const KernelBasis kb = kernel_basis(v);
    // Random unimodular change of basis.
    IntVector w1 = kb.w1 + kb.w2.scaled(BigInt(uniform(rng, -3, 3)));
    IntVector w2 = kb.w2;
    if (uniform(rng, 0, 1)) std::swap(w1, w2);
    w2 = w2 + w1.scaled(BigInt(uniform(rng, -3, 3)));
    if (uniform(rng, 0, 1)) w1 = -w1;
    const BigInt a = w1.norm_sq();
    if (a > max_a) continue;
    return QuadForm(a, dot(w1, w2), w2.norm_sq(), l);
  }
}

QuadForm synthetic_form(std::mt19937_64& rng, long max_a) {
  const long l = uniform(rng, 1, 100);
  const long b = uniform(rng, -100, 100);
  const long n = l * l + b * b;
  std::vector<long> divisors;
  for (long d = 1; d <= std::min(n, max_a); ++d)
    if (n % d == 0) divisors.push_back(d);
  const long a = divisors[uniform(rng, 0, long(divisors.size()) - 1)];
  return QuadForm(BigInt(a), BigInt(b), BigInt(n / a), BigInt(l));
}

bool representation_ok(const QuadForm& f, const Representation& r) {
  if (f.evaluate(r.x, r.y) != f.target()) return false;
  const BigInt lhs = (f.a() * r.x + f.b() * r.y) * (f.a() * r.x + f.b() * r.y) +
                     f.l() * f.l() * r.y * r.y;
  if (lhs != f.a() * f.target()) return false;
  if (f.l() != 0 && r.u * r.u + r.y * r.y != f.a()) return false;
  return true;
}

AgreementReport agreement_item(std::uint64_t seed, std::size_t i, long max_a, FormSource source) {
  AgreementReport out;
  auto rng = item_rng(seed, i);
  const bool kernel =
      source == FormSource::Kernel || (source == FormSource::Mixed && i % 2 == 0);
  const QuadForm f = kernel ? kernel_form(rng, max_a) : synthetic_form(rng, max_a);
  const std::string tag = "(" + f.a().get_str() + "," + f.b().get_str() + "," +
                          f.c().get_str() + "," + f.l().get_str() + ")";
  out.forms = 1;
  try {
    const auto rep = solve(f);
    const auto orc = oracle_solve(f);
    const bool predicted = is_representable(f);
    if (orc) ++out.representable;
    if (rep.has_value() != orc.has_value() || orc.has_value() != predicted) {
      ++out.disagreements;
      out.messages.push_back("disagreement on " + tag);
    }
    if ((rep && !representation_ok(f, *rep)) || (orc && !representation_ok(f, *orc))) {
      ++out.equation_failures;
      out.messages.push_back("bad representation for " + tag);
    }
  } catch (const std::exception& e) {
    ++out.disagreements;
    out.messages.push_back(tag + ": " + e.what());
  }
  return out;
}

void merge(AgreementReport& into, AgreementReport&& part) {
  into.forms += part.forms;
  into.representable += part.representable;
  into.disagreements += part.disagreements;
  into.equation_failures += part.equation_failures;
  for (auto& m : part.messages) into.messages.push_back(std::move(m));
}

// ---- orthogonal pairs ----------------------------------------------------

ValuationReport valuation_item(std::uint64_t seed, std::size_t i) {
  ValuationReport out;
  auto rng = item_rng(seed, i);
  const IntVector v0 = random_integer_norm_vector(rng, 8);
  const IntVector v = v0.scaled(BigInt(uniform(rng, 1, 4)));
  const KernelBasis kb = kernel_basis(v0);
  long x = 0, y = 0;
  while (x == 0 && y == 0) {
    x = uniform(rng, -50, 50);
    y = uniform(rng, -50, 50);
  }
  const IntVector w = kb.w1.scaled(BigInt(x)) + kb.w2.scaled(BigInt(y));
  out.pairs = 1;
  if (dot(v, w) != 0) {
    ++out.violations;
    out.messages.push_back("not orthogonal: " + v.to_string() + " " + w.to_string());
    return out;
  }
  for (const auto& pp : factorize(w.norm_sq()).factors) {
    if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 4) == 3 && pp.exponent % 2 == 1) {
      ++out.violations;
      out.messages.push_back("odd v_" + pp.prime.get_str() + " for " + w.to_string());
    }
  }
  return out;
}

void merge(ValuationReport& into, ValuationReport&& part) {
  into.pairs += part.pairs;
  into.violations += part.violations;
  for (auto& m : part.messages) into.messages.push_back(std::move(m));
}

template <class Report, class Item>
Report run_parallel(std::size_t count, Item item) {
  std::vector<Report> parts(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < static_cast<long>(count); ++i) parts[i] = item(static_cast<std::size_t>(i));
  Report out;
  for (auto& p : parts) merge(out, std::move(p));
  keep_first_messages(out.messages);
  return out;
}

template <class Report, class Item>
Report run_serial(std::size_t count, Item item) {
  Report out;
  for (std::size_t i = 0; i < count; ++i) merge(out, item(i));
  keep_first_messages(out.messages);
  return out;
}

void check_bound(long bound) {
  if (bound < 0) throw PreconditionError("theorem_sweep: bound must be nonnegative");
}

}  // namespace

std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

IntVector random_integer_norm_vector(std::mt19937_64& rng, long r) {
  for (;;) {
    const long m = uniform(rng, -r, r), n = uniform(rng, -r, r);
    const long p = uniform(rng, -r, r), q = uniform(rng, -r, r);
    IntVector v{m * m + n * n - p * p - q * q, 2 * (m * q + n * p), 2 * (n * q - m * p)};
    if (v.is_zero()) continue;
    v = v.divided_exact(v.content());
    for (std::size_t i = 0; i < 3; ++i)
      if (uniform(rng, 0, 1)) v[i] = -v[i];
    std::vector<BigInt> coords(v.coords().begin(), v.coords().end());
    std::shuffle(coords.begin(), coords.end(), rng);
    return IntVector(std::move(coords));
  }
}

TheoremSweepReport theorem_sweep(long bound) {
  check_bound(bound);
  return run_parallel<TheoremSweepReport>(static_cast<std::size_t>(bound) + 1, [&](std::size_t a) {
    return sweep_slice(static_cast<long>(a), bound);
  });
}

AgreementReport quadform_agreement(std::uint64_t seed, std::size_t count, long max_a,
                                   FormSource source) {
  return run_parallel<AgreementReport>(
      count, [&](std::size_t i) { return agreement_item(seed, i, max_a, source); });
}

ValuationReport orthogonal_pair_valuations(std::uint64_t seed, std::size_t count) {
  return run_parallel<ValuationReport>(count,
                                       [&](std::size_t i) { return valuation_item(seed, i); });
}

namespace serial {

TheoremSweepReport theorem_sweep(long bound) {
  check_bound(bound);
  return run_serial<TheoremSweepReport>(static_cast<std::size_t>(bound) + 1, [&](std::size_t a) {
    return sweep_slice(static_cast<long>(a), bound);
  });
}

AgreementReport quadform_agreement(std::uint64_t seed, std::size_t count, long max_a,
                                   FormSource source) {
  return run_serial<AgreementReport>(count,
                                     [&](std::size_t i) { return agreement_item(seed, i, max_a, source); });
}

ValuationReport orthogonal_pair_valuations(std::uint64_t seed, std::size_t count) {
  return run_serial<ValuationReport>(count, [&](std::size_t i) { return valuation_item(seed, i); });
}

}  // namespace serial
}  // namespace orthox
