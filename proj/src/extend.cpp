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

#include "orthox/extend.hpp"

#include <algorithm>
#include <numeric>

#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"

namespace orthox {

OrthoBasis::OrthoBasis(std::vector<IntVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw PreconditionError("OrthoBasis: empty system");
  if (vectors_.size() > vectors_.front().dim())
    throw PreconditionError("OrthoBasis: more vectors than dimensions");
  if (!is_orthoregular(vectors_))
    throw PreconditionError("OrthoBasis: vectors are not orthoregular");
  length_sq_ = vectors_.front().norm_sq();
}

BigInt OrthoBasis::determinant() const {
  if (!is_full()) throw PreconditionError("OrthoBasis::determinant: basis is not full");
  return orthox::determinant(IntMatrix::from_columns(vectors_));
}

OrthoBasis OrthoBasis::with(const IntVector& v) const {
  std::vector<IntVector> next = vectors_;
  next.push_back(v);
  return OrthoBasis(std::move(next));
}

namespace {

struct Prepared {
  BigInt length;
  ExtendTrace trace;
};

Prepared prepare(const IntVector& v) {
  if (v.dim() != 3)
    throw PreconditionError("extend3: expects a vector in Z^3, got dimension " +
                            std::to_string(v.dim()));
  if (v.is_zero()) throw PreconditionError("extend3: zero vector");
  const BigInt len_sq = v.norm_sq();
  auto l = isqrt_exact(len_sq);
  if (!l)
    throw InfeasibleError(
        InfeasibleError::Kind::NonIntegerNorm,
        "|v|^2 = " + len_sq.get_str() + " is not a perfect square; in odd dimension the "
        "length of an orthoregular basis of integer vectors is an integer, so " +
        v.to_string() + " has no integral orthoregular completion");
  Prepared p;
  p.length = *l;
  p.trace.content = v.content();
  p.trace.primitive = v.divided_exact(p.trace.content);
  p.trace.primitive_length = *l / p.trace.content;
  p.trace.kernel = kernel_basis(p.trace.primitive);
  const IntMatrix& g = p.trace.kernel->gram;
  p.trace.form.emplace(g(0, 0), g(0, 1), g(1, 1), p.trace.primitive_length);
  return p;
}

OrthoBasis assemble(const IntVector& v, const Prepared& p, const Representation& rep,
                    Orientation orientation) {
  const ExtendTrace& t = p.trace;
  const IntVector w = t.kernel->w1.scaled(rep.x) + t.kernel->w2.scaled(rep.y);
  if (w.norm_sq() != t.primitive_length * t.primitive_length)
    throw InternalError("extend3: kernel vector has the wrong length");
  const std::vector<IntVector> pair{t.primitive, w};
  IntVector third = cofactor_complete(pair);
  if (orientation == Orientation::Improper) third = -third;

  OrthoBasis basis({v, w.scaled(t.content), third.scaled(t.content)});
  const BigInt det = basis.determinant();
  const BigInt l3 = p.length * p.length * p.length;
  if (det != (orientation == Orientation::Proper ? l3 : BigInt(-l3)))
    throw InternalError("extend3: determinant " + det.get_str() + " is not +-l^3");
  return basis;
}

}  // namespace

ExtendResult extend3_traced(const IntVector& v, Orientation orientation) {
  Prepared p = prepare(v);
  auto rep = solve(*p.trace.form, &p.trace.solve);
  if (!rep)
    throw InternalError("extend3: kernel form does not represent l^2 for " + v.to_string());
  p.trace.representation = *rep;
  OrthoBasis basis = assemble(v, p, *rep, orientation);
  return {std::move(basis), std::move(p.trace)};
}

OrthoBasis extend3(const IntVector& v, Orientation orientation) {
  return extend3_traced(v, orientation).basis;
}

std::vector<OrthoBasis> extend3_all(const IntVector& v, Orientation orientation) {
  Prepared p = prepare(v);
  std::vector<OrthoBasis> out;
  for (const auto& rep : oracle_all(*p.trace.form)) out.push_back(assemble(v, p, rep, orientation));
  return out;
}

RationalOrthogonalMatrix to_rational_orthogonal(const OrthoBasis& basis) {
  if (!basis.is_full())
    throw PreconditionError("to_rational_orthogonal: basis has " + std::to_string(basis.size()) +
                            " vectors in Z^" + std::to_string(basis.dim()));
  auto l = isqrt_exact(basis.length_sq());
  if (!l)
    throw PreconditionError("to_rational_orthogonal: length^2 " + basis.length_sq().get_str() +
                            " is not a perfect square");
  RationalOrthogonalMatrix m{*l, IntMatrix::from_columns(basis.vectors())};
  const std::size_t n = basis.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigRational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += m.entry(k, i) * m.entry(k, j);
      if (acc != (i == j ? 1 : 0)) throw InternalError("to_rational_orthogonal: M^T M != I");
    }
  }
  return m;
}

IntegerNormEnumerator::IntegerNormEnumerator(std::optional<long> limit) : limit_(limit) {
  if (limit_ && *limit_ < 1) throw PreconditionError("enumerate: limit must be >= 1");
}

void IntegerNormEnumerator::fill_next_shell() {
  shell_.clear();
  pos_ = 0;
  while (shell_.empty()) {
    ++length_;
    // c <= limit forces l^2 <= 3 limit^2.
    if (limit_ && length_ * length_ > 3 * *limit_ * *limit_) return;
    const long target = length_ * length_;
    for (long a = 0; 3 * a * a <= target; ++a) {
      for (long b = a; a * a + 2 * b * b <= target; ++b) {
        const long rest = target - a * a - b * b;
        auto c = isqrt_exact(BigInt(rest));
        if (!c) continue;
        const long cl = c->get_si();
        if (cl < b || (limit_ && cl > *limit_)) continue;
        if (std::gcd(std::gcd(a, b), cl) != 1) continue;
        shell_.push_back(IntVector{a, b, cl});
      }
    }
    // The loops already emit (a, b, c) in increasing lexicographic order.
  }
}

std::optional<IntVector> IntegerNormEnumerator::next() {
  if (pos_ >= shell_.size()) {
    fill_next_shell();
    if (shell_.empty()) return std::nullopt;
  }
  return shell_[pos_++];
}

std::vector<IntVector> enumerate_integer_norm(long limit) {
  IntegerNormEnumerator e(limit);
  std::vector<IntVector> out;
  while (auto v = e.next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace orthox
