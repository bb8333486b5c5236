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

#include "orthox/lattice.hpp"

#include <algorithm>
#include <utility>

#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"

namespace orthox {

IntVector::IntVector(std::vector<BigInt> coords) : coords_(std::move(coords)) {}

IntVector::IntVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

IntVector IntVector::zero(std::size_t n) { return IntVector(std::vector<BigInt>(n, BigInt(0))); }

BigInt IntVector::norm_sq() const {
  BigInt acc = 0;
  for (const auto& c : coords_) acc += c * c;
  return acc;
}

bool IntVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return c == 0; });
}

BigInt IntVector::content() const { return orthox::content(coords_); }

IntVector IntVector::scaled(const BigInt& k) const {
  std::vector<BigInt> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] * k;
  return IntVector(std::move(out));
}

IntVector IntVector::divided_exact(const BigInt& k) const {
  std::vector<BigInt> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!mpz_divisible_p(coords_[i].get_mpz_t(), k.get_mpz_t()))
      throw InternalError("divided_exact: " + k.get_str() + " does not divide " + to_string());
    mpz_divexact(out[i].get_mpz_t(), coords_[i].get_mpz_t(), k.get_mpz_t());
  }
  return IntVector(std::move(out));
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw PreconditionError("vector sum: dimension mismatch");
  std::vector<BigInt> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return IntVector(std::move(out));
}

IntVector operator-(const IntVector& a, const IntVector& b) { return a + (-b); }

bool operator<(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string IntVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].get_str();
  }
  return out + ")";
}

BigInt dot(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim())
    throw PreconditionError("dot: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

IntVector concat(const IntVector& a, const IntVector& b) {
  std::vector<BigInt> out(a.coords().begin(), a.coords().end());
  out.insert(out.end(), b.coords().begin(), b.coords().end());
  return IntVector(std::move(out));
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> cols) {
  if (cols.empty()) return {};
  IntMatrix m(cols[0].dim(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != m.rows) throw PreconditionError("from_columns: dimension mismatch");
    for (std::size_t i = 0; i < m.rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

BigInt determinant(IntMatrix m) {
  if (m.rows != m.cols) throw PreconditionError("determinant: matrix is not square");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix gram(std::span<const IntVector> vs) {
  IntMatrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) g(i, j) = g(j, i) = dot(vs[i], vs[j]);
  return g;
}

std::vector<IntVector> kernel_lattice(const IntVector& v) {
  const std::size_t n = v.dim();
  if (n == 0 || v.is_zero()) throw PreconditionError("kernel_lattice: zero vector");
  if (v.content() != 1)
    throw PreconditionError("kernel_lattice: " + v.to_string() + " is not primitive");

  // Column operations on the row r, mirrored on the columns of U (r = v U).
  std::vector<BigInt> r(v.coords().begin(), v.coords().end());
  std::vector<IntVector> u;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e = IntVector::zero(n);
    e[j] = 1;
    u.push_back(std::move(e));
  }
  for (;;) {
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] == 0) continue;
      if (pivot == n || abs(r[j]) < abs(r[pivot])) pivot = j;
    }
    bool reduced = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot || r[j] == 0) continue;
      BigInt q;
      mpz_tdiv_q(q.get_mpz_t(), r[j].get_mpz_t(), r[pivot].get_mpz_t());
      r[j] -= q * r[pivot];
      u[j] = u[j] - u[pivot].scaled(q);
      reduced = true;
    }
    if (!reduced) {
      std::vector<IntVector> kernel;
      for (std::size_t j = 0; j < n; ++j)
        if (j != pivot) kernel.push_back(std::move(u[j]));
      for (auto& w : kernel) {
        auto first = std::find_if(w.coords().begin(), w.coords().end(),
                                  [](const BigInt& c) { return c != 0; });
        if (*first < 0) w = -w;
      }
      auto lead = [](const IntVector& w) {
        std::size_t i = 0;
        while (w[i] == 0) ++i;
        return i;
      };
      std::sort(kernel.begin(), kernel.end(), [&](const IntVector& a, const IntVector& b) {
        const std::size_t la = lead(a), lb = lead(b);
        return la != lb ? la < lb : a < b;
      });
      return kernel;
    }
  }
}

KernelBasis kernel_basis(const IntVector& v) {
  if (v.dim() != 3) throw PreconditionError("kernel_basis: expects a vector in Z^3");
  auto k = kernel_lattice(v);
  KernelBasis out{k[0], k[1], gram(k)};
  if (dot(v, out.w1) != 0 || dot(v, out.w2) != 0)
    throw InternalError("kernel_basis: basis vector not orthogonal to " + v.to_string());
  if (determinant(out.gram) != v.norm_sq())
    throw InternalError("kernel_basis: det(gram) != |v|^2 for " + v.to_string());
  return out;
}

IntVector cross(const IntVector& a, const IntVector& b) {
  if (a.dim() != 3 || b.dim() != 3) throw PreconditionError("cross: expects vectors in Z^3");
  return IntVector(std::vector<BigInt>{BigInt(a[1] * b[2] - a[2] * b[1]),
                                       BigInt(a[2] * b[0] - a[0] * b[2]),
                                       BigInt(a[0] * b[1] - a[1] * b[0])});
}

bool is_orthoregular(std::span<const IntVector> vs) {
  if (vs.empty()) return false;
  const BigInt len = vs[0].norm_sq();
  if (len == 0) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].dim() != vs[0].dim() || vs[i].norm_sq() != len) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (dot(vs[i], vs[j]) != 0) return false;
  }
  return true;
}

IntVector cofactor_complete(std::span<const IntVector> vs) {
  if (vs.empty()) throw PreconditionError("cofactor_complete: empty system");
  const std::size_t n = vs[0].dim();
  if (vs.size() + 1 != n)
    throw PreconditionError("cofactor_complete: need n-1 vectors in Z^n, got " +
                            std::to_string(vs.size()) + " in Z^" + std::to_string(n));
  if (!is_orthoregular(vs)) throw PreconditionError("cofactor_complete: input is not orthoregular");
  const BigInt len_sq = vs[0].norm_sq();

  // l^(n-2): for even n this is L^((n-2)/2) regardless of whether l is integral.
  BigInt divisor;
  if (n % 2 == 0) {
    mpz_pow_ui(divisor.get_mpz_t(), len_sq.get_mpz_t(), (n - 2) / 2);
  } else {
    auto l = isqrt_exact(len_sq);
    if (!l)
      throw PreconditionError("cofactor_complete: odd n = " + std::to_string(n) +
                              " needs an integral length, |v|^2 = " + len_sq.get_str());
    mpz_pow_ui(divisor.get_mpz_t(), l->get_mpz_t(), n - 2);
  }

  const IntMatrix cols = IntMatrix::from_columns(vs);
  std::vector<BigInt> cof(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c + 1 < n; ++c) minor(rr, c) = cols(r, c);
      ++rr;
    }
    BigInt d = determinant(std::move(minor));
    cof[i] = ((i + 1 + n) % 2 == 0) ? d : BigInt(-d);
  }
  IntVector out = IntVector(std::move(cof)).divided_exact(divisor);

  if (out.norm_sq() != len_sq) throw InternalError("cofactor_complete: wrong output length");
  for (const auto& v : vs)
    if (dot(v, out) != 0) throw InternalError("cofactor_complete: output not orthogonal");
  std::vector<IntVector> all(vs.begin(), vs.end());
  all.push_back(out);
  if (sgn(determinant(IntMatrix::from_columns(all))) <= 0)
    throw InternalError("cofactor_complete: orientation is not positive");
  return out;
}

}  // namespace orthox
