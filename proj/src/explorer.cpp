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

#include "orthox/explorer.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>

#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"

namespace orthox {

void SearchBudget::validate() const {
  if (coord_bound < 1) throw PreconditionError("SearchBudget: coord_bound must be positive");
  if (max_candidates < 1) throw PreconditionError("SearchBudget: max_candidates must be positive");
  if (timeout.count() <= 0) throw PreconditionError("SearchBudget: timeout must be positive");
}

namespace {

using Clock = std::chrono::steady_clock;

// Scalar policies: int64 when |v|^2 < 2^62 (every coordinate and every
// partial inner product is then bounded by |v|^2), BigInt otherwise.
template <class T>
T from_big(const BigInt& x) {
  if constexpr (std::is_same_v<T, BigInt>) return x;
  else return static_cast<T>(x.get_si());
}

template <class T>
BigInt to_big(const T& x) {
  if constexpr (std::is_same_v<T, BigInt>) return x;
  else return BigInt(static_cast<long>(x));
}

template <class T>
T isqrt_floor(const T& x) {
  if constexpr (std::is_same_v<T, BigInt>) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
  } else {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
  }
}

template <class T>
using Vec = std::vector<T>;

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class T>
struct Problem {
  std::size_t n = 0;
  T length_sq = 0;
  T bound = 0;  // min(coord_bound, isqrt(length_sq))
  std::vector<Vec<T>> fixed;
  std::size_t upper = 0;  // most vectors that can possibly be added
};

// Shared budget bookkeeping; the serial path uses it single-threaded.
struct Control {
  Clock::time_point deadline;
  std::uint64_t max_nodes = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};

  bool tick(std::uint64_t batch) {
    const std::uint64_t total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
    if (total > max_nodes || Clock::now() > deadline) budget_hit.store(true);
    return !budget_hit.load(std::memory_order_relaxed);
  }
};

// Appends, in lexicographic order, every vector with fixed prefix `cur[0..pos)`
// that has norm length_sq, lies in the box, has a positive first nonzero
// coordinate and is orthogonal to every fixed vector.
template <class T>
void generate(const Problem<T>& pb, Vec<T>& cur, std::size_t pos, const T& remaining,
              bool all_zero, std::vector<Vec<T>>& out, Control& ctl, std::uint64_t& pending) {
  if (ctl.budget_hit.load(std::memory_order_relaxed)) return;
  if (pos + 1 == pb.n) {
    // Last coordinate is determined up to sign.
    const T r = isqrt_floor(remaining);
    if (r * r != remaining || r > pb.bound) return;
    auto emit = [&](const T& c) {
      cur[pos] = c;
      for (const auto& f : pb.fixed)
        if (dot(f, cur) != 0) return;
      out.push_back(cur);
    };
    if (r == 0) {
      if (!all_zero) emit(T(0));
    } else {
      if (!all_zero) emit(T(-r));
      emit(r);
    }
    if (++pending >= 4096) {
      ctl.tick(0);
      pending = 0;
    }
    return;
  }
  T hi = isqrt_floor(remaining);
  if (hi > pb.bound) hi = pb.bound;
  const T lo = all_zero ? T(0) : T(-hi);
  for (T c = lo; c <= hi; ++c) {
    cur[pos] = c;
    generate(pb, cur, pos + 1, T(remaining - c * c), all_zero && c == 0, out, ctl, pending);
  }
}

template <class T>
struct Searcher {
  const std::vector<Vec<T>>& cands;
  std::size_t upper;
  Control& ctl;
  const std::atomic<std::size_t>* global_best = nullptr;  // parallel only
  std::vector<int> current;
  std::vector<int> best;
  std::uint64_t local_nodes = 0;
  bool done = false;

  Searcher(const std::vector<Vec<T>>& c, std::size_t up, Control& ctl_,
           const std::atomic<std::size_t>* global = nullptr)
      : cands(c), upper(up), ctl(ctl_), global_best(global) {}

  void run(const std::vector<int>& pool) {
    if (done) return;
    if (++local_nodes % 1024 == 0 && !ctl.tick(1024)) {
      done = true;
      return;
    }
    if (current.size() > best.size()) {
      best = current;
      if (best.size() >= upper) {
        done = true;
        return;
      }
    }
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (done) return;
      const std::size_t reach = current.size() + (pool.size() - k);
      if (reach <= best.size()) return;
      if (global_best && reach < global_best->load(std::memory_order_relaxed)) return;
      const int v = pool[k];
      std::vector<int> next;
      for (std::size_t j = k + 1; j < pool.size(); ++j)
        if (dot(cands[v], cands[pool[j]]) == 0) next.push_back(pool[j]);
      current.push_back(v);
      run(next);
      current.pop_back();
    }
  }

  void flush() { ctl.tick(local_nodes % 1024); }
};

template <class T>
Problem<T> make_problem(const OrthoBasis& s, const SearchBudget& budget) {
  Problem<T> pb;
  pb.n = s.dim();
  pb.length_sq = from_big<T>(s.length_sq());
  const T root = isqrt_floor(pb.length_sq);
  pb.bound = std::min(root, T(budget.coord_bound));
  for (const auto& v : s.vectors()) {
    Vec<T> f(pb.n);
    for (std::size_t i = 0; i < pb.n; ++i) f[i] = from_big<T>(v[i]);
    pb.fixed.push_back(std::move(f));
  }
  std::size_t room = pb.n - s.size();
  if (pb.n % 2 == 1 && !integrality_obstruction(pb.n, s.length_sq()) && room > 0) --room;
  pb.upper = room;
  return pb;
}

template <class T>
std::vector<Vec<T>> candidates_serial(const Problem<T>& pb, Control& ctl) {
  std::vector<Vec<T>> out;
  Vec<T> cur(pb.n, T(0));
  std::uint64_t pending = 0;
  generate(pb, cur, 0, pb.length_sq, true, out, ctl, pending);
  return out;
}

template <class T>
std::vector<Vec<T>> candidates_parallel(const Problem<T>& pb, Control& ctl) {
  if (pb.n == 1) return candidates_serial(pb, ctl);
  // Split on the (nonnegative) first coordinate; concatenating in order
  // keeps the lexicographic order of the serial generator.
  const long top = static_cast<long>(to_big(pb.bound).get_si());
  std::vector<std::vector<Vec<T>>> parts(static_cast<std::size_t>(top) + 1);
#pragma omp parallel for schedule(dynamic)
  for (long c0 = 0; c0 <= top; ++c0) {
    const T c = T(c0);
    if (c * c > pb.length_sq) continue;
    Vec<T> cur(pb.n, T(0));
    cur[0] = c;
    std::uint64_t pending = 0;
    generate(pb, cur, 1, T(pb.length_sq - c * c), c0 == 0, parts[c0], ctl, pending);
  }
  std::vector<Vec<T>> out;
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  return out;
}

template <class T>
ExtensionReport make_report(const OrthoBasis& s, const SearchBudget& budget, const Problem<T>& pb,
                            const std::vector<Vec<T>>& cands, const std::vector<int>& best,
                            Control& ctl) {
  OrthoBasis witness = s;
  for (int idx : best) {
    std::vector<BigInt> coords;
    for (const auto& c : cands[idx]) coords.push_back(to_big(c));
    witness = witness.with(IntVector(std::move(coords)));
  }
  const bool box_covers = BigInt(budget.coord_bound) >= to_big(isqrt_floor(pb.length_sq));
  return ExtensionReport{s,
                         best.size(),
                         std::move(witness),
                         box_covers && !ctl.budget_hit.load(),
                         cands.size(),
                         ctl.nodes.load()};
}

template <class T>
ExtensionReport search_serial(const OrthoBasis& s, const SearchBudget& budget) {
  const Problem<T> pb = make_problem<T>(s, budget);
  Control ctl;
  ctl.deadline = Clock::now() + budget.timeout;
  ctl.max_nodes = budget.max_candidates;
  const auto cands = candidates_serial(pb, ctl);

  Searcher<T> searcher{cands, pb.upper, ctl};
  std::vector<int> pool(cands.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
  if (!ctl.budget_hit.load()) {
    searcher.run(pool);
    searcher.flush();
  }
  return make_report(s, budget, pb, cands, searcher.best, ctl);
}

template <class T>
ExtensionReport search_parallel(const OrthoBasis& s, const SearchBudget& budget) {
  const Problem<T> pb = make_problem<T>(s, budget);
  Control ctl;
  ctl.deadline = Clock::now() + budget.timeout;
  ctl.max_nodes = budget.max_candidates;
  const auto cands = candidates_parallel(pb, ctl);
  const long count = static_cast<long>(cands.size());

  std::vector<std::vector<int>> branch_best(cands.size());
  std::atomic<std::size_t> global_best{0};
  std::atomic<long> first_full{count};  // lowest branch that reached the upper bound

  if (!ctl.budget_hit.load() && pb.upper > 0) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      if (i > first_full.load()) continue;
      std::vector<int> pool;
      for (long j = i + 1; j < count; ++j)
        if (dot(cands[i], cands[j]) == 0) pool.push_back(static_cast<int>(j));
      Searcher<T> searcher{cands, pb.upper, ctl, &global_best};
      searcher.current.push_back(static_cast<int>(i));
      searcher.run(pool);
      searcher.flush();
      const std::size_t got = searcher.best.size();
      std::size_t prev = global_best.load();
      while (got > prev && !global_best.compare_exchange_weak(prev, got)) {
      }
      if (got >= pb.upper) {
        long cur = first_full.load();
        while (i < cur && !first_full.compare_exchange_weak(cur, i)) {
        }
      }
      branch_best[i] = std::move(searcher.best);
    }
  }

  std::vector<int> best;
  for (const auto& b : branch_best)
    if (b.size() > best.size()) best = b;
  return make_report(s, budget, pb, cands, best, ctl);
}

bool fits_int64(const OrthoBasis& s) {
  static const BigInt kLimit = BigInt(1) << 62;
  return s.length_sq() < kLimit;
}

}  // namespace

ExtensionReport extend_search(const OrthoBasis& s, const SearchBudget& budget) {
  budget.validate();
  return fits_int64(s) ? search_parallel<std::int64_t>(s, budget)
                       : search_parallel<BigInt>(s, budget);
}

namespace serial {
ExtensionReport extend_search(const OrthoBasis& s, const SearchBudget& budget) {
  budget.validate();
  return fits_int64(s) ? search_serial<std::int64_t>(s, budget) : search_serial<BigInt>(s, budget);
}
}  // namespace serial

ParityCertificate all_odd_obstruction(const IntVector& v) {
  const std::size_t n = v.dim();
  if (n % 2 == 0)
    throw PreconditionError("all_odd_obstruction: dimension " + std::to_string(n) + " is even");
  for (const auto& c : v.coords())
    if (mpz_even_p(c.get_mpz_t()))
      throw PreconditionError("all_odd_obstruction: " + v.to_string() + " has an even coordinate");

  ParityCertificate cert{v, 0, 0, {}};
  const BigInt len_sq = v.norm_sq();
  cert.length_sq_parity = static_cast<int>(mpz_fdiv_ui(len_sq.get_mpz_t(), 2));
  if (cert.length_sq_parity != static_cast<int>(n % 2))
    throw InternalError("all_odd_obstruction: |v|^2 parity differs from n parity");
  cert.orthogonal_norm_parity = 0;
  cert.steps = {
      "|v|^2 = " + len_sq.get_str() + " = sum of " + std::to_string(n) +
          " odd squares = n = 1 (mod 2)",
      "for v' = (a_i) with (v, v') = 0: |v'|^2 = sum a_i^2 = sum a_i = sum v_i a_i = (v, v') = 0 "
      "(mod 2), since a^2 = a and v_i = 1 (mod 2)",
      "|v'|^2 = |v|^2 would need 0 = 1 (mod 2): no orthoregular extension, E(v) = 1",
  };
  return cert;
}

bool integrality_obstruction(std::size_t n, const BigInt& length_sq) {
  if (n % 2 == 0)
    throw PreconditionError("integrality_obstruction: only meaningful in odd dimension");
  if (sgn(length_sq) < 0) return false;
  return isqrt_exact(length_sq).has_value();
}

}  // namespace orthox
