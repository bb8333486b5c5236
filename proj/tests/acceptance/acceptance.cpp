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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "orthox/cli.hpp"
#include "orthox/constructions.hpp"
#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"
#include "orthox/explorer.hpp"
#include "orthox/sweep.hpp"

using namespace orthox;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kEnumerateSeconds = 1.0;
constexpr double kSweepSeconds = 60.0;
constexpr double kExploreSeconds = 30.0;
constexpr long kSweepBound = 100;
constexpr std::size_t kMinSweepVectors = 2000;
constexpr std::size_t kForms = 10000;
constexpr long kMaxA = 10000;
constexpr std::size_t kPairs = 10000;
constexpr int kHurwitzSamples = 1000;
constexpr long kOddSquareMax = 10000;
constexpr int kMod8Max = 33;
constexpr int kCofactorSamples = 1000;
constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SearchBudget box(long b) {
  SearchBudget s;
  s.coord_bound = b;
  return s;
}

TheoremSweepReport sweep_result;

Outcome c1() {
  const std::string expected =
      "(0,0,1)\n(1,2,2)\n(0,3,4)\n(2,3,6)\n(1,4,8)\n(4,4,7)\n(2,6,9)\n(6,6,7)\n";
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"enumerate", "--count", "8"}, out, err);
  const double s = seconds_since(t0);
  const bool ok = code == 0 && out.str() == expected && s < kEnumerateSeconds;
  return {ok, "byte-exact=" + std::string(out.str() == expected ? "yes" : "no") +
                  " time=" + std::to_string(s) + "s"};
}

Outcome c2() {
  const auto t0 = Clock::now();
  sweep_result = theorem_sweep(kSweepBound);
  const double s = seconds_since(t0);
  const bool ok = sweep_result.failures == 0 && sweep_result.vectors >= kMinSweepVectors &&
                  s < kSweepSeconds;
  return {ok, "vectors=" + std::to_string(sweep_result.vectors) +
                  " failures=" + std::to_string(sweep_result.failures) +
                  " time=" + std::to_string(s) + "s"};
}

Outcome c3() {
  const auto r = quadform_agreement(kSeed, kForms, kMaxA, FormSource::Kernel);
  const auto x = quadform_agreement(kSeed, kForms, kMaxA, FormSource::Synthetic);
  const bool ok = r.forms == kForms && r.disagreements == 0 && r.equation_failures == 0 &&
                  x.disagreements == 0 && x.equation_failures == 0;
  return {ok, "kernel forms=" + std::to_string(r.forms) + " representable=" +
                  std::to_string(r.representable) + " disagreements=" +
                  std::to_string(r.disagreements) + " equation_failures=" +
                  std::to_string(r.equation_failures) + "; extra synthetic forms=" +
                  std::to_string(x.forms) + " representable=" + std::to_string(x.representable) +
                  " disagreements=" + std::to_string(x.disagreements)};
}

Outcome c4() {
  const auto r = orthogonal_pair_valuations(kSeed, kPairs);
  const bool ok = r.pairs == kPairs && r.violations == 0;
  return {ok, "pairs=" + std::to_string(r.pairs) + " violations=" + std::to_string(r.violations)};
}

Outcome c5() {
  const bool ok = sweep_result.vectors > 0 && sweep_result.gram_checks == sweep_result.vectors &&
                  sweep_result.gram_failures == 0;
  return {ok, "kernel bases=" + std::to_string(sweep_result.gram_checks) +
                  " det(gram) != l^2: " + std::to_string(sweep_result.gram_failures)};
}

Outcome c6() {
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"explore", "1,1,1,1,1,1", "--bound", "3"}, out, err);
  const auto r = extend_search(OrthoBasis({IntVector{1, 1, 1, 1, 1, 1}}), box(3));
  const double s = seconds_since(t0);
  bool listed = false;
  try {
    const OrthoBasis w({IntVector{1, 1, 1, 1, 1, 1}, IntVector{1, 1, 1, -1, -1, -1},
                        IntVector{2, -1, -1, 0, 0, 0}, IntVector{0, 0, 0, 2, -1, -1}});
    listed = is_orthoregular(w.vectors()) && w.length_sq() == 6;
  } catch (const std::exception&) {
  }
  const bool ok = code == 0 && r.achieved == 3 && r.exhausted &&
                  is_orthoregular(r.witness.vectors()) && listed && s < kExploreSeconds;
  return {ok, "achieved=" + std::to_string(r.achieved) +
                  " exhausted=" + (r.exhausted ? "true" : "false") +
                  " listed witness orthoregular=" + (listed ? "yes" : "no") +
                  " time=" + std::to_string(s) + "s"};
}

Outcome c7() {
  const auto a = extend_search(OrthoBasis({IntVector{1, 1, 1}}), box(2));
  const auto t = odd_square_tuple(9);
  const auto b = extend_search(OrthoBasis({t.entries}), box(3));
  const bool ok = a.achieved == 0 && a.exhausted && b.achieved == 0 && b.exhausted &&
                  t.entries.dim() == 9 && t.entries.norm_sq() == 9;
  return {ok, "(1,1,1): achieved=" + std::to_string(a.achieved) + " exhausted=" +
                  (a.exhausted ? "true" : "false") + "; " + t.entries.to_string() +
                  ": achieved=" + std::to_string(b.achieved) +
                  " exhausted=" + (b.exhausted ? "true" : "false") +
                  " first-level candidates=" + std::to_string(b.candidates)};
}

Outcome c8() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  int ok_count = 0, total = 0;
  for (std::size_t n : {2u, 4u, 8u}) {
    for (int i = 0; i < kHurwitzSamples; ++i) {
      std::vector<BigInt> c(n);
      for (auto& x : c) x = d(rng);
      const IntVector v(c);
      if (v.is_zero()) continue;
      ++total;
      try {
        const OrthoBasis b = hurwitz_basis(v);
        if (b.size() == n && b[0] == v && is_orthoregular(b.vectors()) &&
            b.length_sq() == v.norm_sq())
          ++ok_count;
      } catch (const std::exception&) {
      }
    }
  }
  return {ok_count == total && total == 3 * kHurwitzSamples,
          "bases=" + std::to_string(total) + " valid=" + std::to_string(ok_count)};
}

Outcome c9() {
  long checked = 0, bad = 0;
  for (long n = 1; n <= kOddSquareMax; n += 8) {
    ++checked;
    try {
      const auto t = odd_square_tuple(n);
      bool fine = t.entries.dim() == static_cast<std::size_t>(n) &&
                  t.entries.norm_sq() == t.root * t.root && t.root % 2 == 1;
      for (const auto& x : t.entries.coords()) fine = fine && (x == 1 || x == 3);
      if (!fine) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  // Odd tuples over {+-1,+-3}: the square sum is n + 8k for k entries equal to +-3.
  int mismatches = 0;
  std::string found_at;
  for (int n = 1; n <= kMod8Max; n += 2) {
    bool found = false;
    for (int k = 0; k <= n; ++k) found = found || isqrt_exact(BigInt(n + 8 * k)).has_value();
    if (found) found_at += (found_at.empty() ? "" : ",") + std::to_string(n);
    if (found != (n % 8 == 1)) ++mismatches;
  }
  return {bad == 0 && mismatches == 0,
          "tuples=" + std::to_string(checked) + " bad=" + std::to_string(bad) +
              " square sums found for n in {" + found_at + "}"};
}

Outcome c10() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<long> d(-40, 40);
  std::uniform_int_distribution<int> pick(0, 2);
  int pairs = 0, pairs_ok = 0, triples = 0, triples_ok = 0;
  while (pairs < kCofactorSamples) {
    const long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (a == 0 && b == 0 && c == 0 && e == 0) continue;
    // Rotation x -> q x q* on pure quaternions; columns are orthoregular.
    const IntVector r[3] = {
        IntVector{a * a + b * b - c * c - e * e, 2 * (b * c + a * e), 2 * (b * e - a * c)},
        IntVector{2 * (b * c - a * e), a * a - b * b + c * c - e * e, 2 * (c * e + a * b)},
        IntVector{2 * (b * e + a * c), 2 * (c * e - a * b), a * a - b * b - c * c + e * e}};
    const int skip = pick(rng);
    std::vector<IntVector> s;
    for (int i = 0; i < 3; ++i)
      if (i != skip) s.push_back(r[i]);
    ++pairs;
    try {
      const IntVector out = cofactor_complete(s);
      s.push_back(out);
      if ((out == r[skip] || out == -r[skip]) && is_orthoregular(s)) ++pairs_ok;
    } catch (const std::exception&) {
    }

    const IntVector q[4] = {IntVector{a, b, c, e}, IntVector{-b, a, e, -c},
                            IntVector{-c, -e, a, b}, IntVector{-e, c, -b, a}};
    std::vector<IntVector> t{q[0], q[1], q[2]};
    ++triples;
    try {
      const IntVector out = cofactor_complete(t);
      t.push_back(out);
      if (out == q[3] && is_orthoregular(t)) ++triples_ok;
    } catch (const std::exception&) {
    }
  }
  return {pairs_ok == pairs && triples_ok == triples,
          "Z^3 pairs=" + std::to_string(pairs) + " ok=" + std::to_string(pairs_ok) +
              "; Z^4 triples=" + std::to_string(triples) + " ok=" + std::to_string(triples_ok)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"enumerate --count 8 reproduces the listed vectors", c1},
      {"every primitive integer-norm v in [0,100]^3 extends", c2},
      {"constructive solver agrees with brute force", c3},
      {"orthogonal complements: 3 mod 4 primes to even powers", c4},
      {"kernel Gram determinant equals l^2", c5},
      {"(1,1,1,1,1,1) extends by exactly 3", c6},
      {"all-odd obstructions in Z^3 and Z^9", c7},
      {"Hurwitz bases in dimensions 2, 4, 8", c8},
      {"odd square tuples exactly at n = 1 mod 8", c9},
      {"cofactor completion is integral", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
