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

#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "orthox/lattice.hpp"
#include "orthox/ortho_basis.hpp"

namespace orthox {

struct SignedIndex {
  int sign = 1;           // +1 or -1
  std::size_t index = 0;  // source coordinate

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// Left multiplication by the n-1 imaginary units of C, H or O, written as
/// signed coordinate permutations. Generator k (k = 2..n) maps v to v_k.
struct MultiplicationTable {
  int dimension = 0;
  std::vector<std::vector<SignedIndex>> generators;

  IntVector apply(std::size_t generator, const IntVector& v) const;
  friend bool operator==(const MultiplicationTable&, const MultiplicationTable&) = default;
};

/// Tables compiled into the library, for n = 2, 4, 8.
const MultiplicationTable& multiplication_table(int n);
/// Parses the text format of data/hurwitz_tables.txt.
std::vector<MultiplicationTable> parse_tables(std::istream& in);
/// Text form of the compiled tables (without comments).
std::string format_tables();

/// {v, i v, j v, ...}: a full orthoregular basis for v != 0 in Z^n, n in {2, 4, 8}.
OrthoBasis hurwitz_basis(const IntVector& v);

/// Prepends (l, 0, ..., 0) and zero-pads every vector to dimension n + 1.
/// Throws PreconditionError when the length is not an integer.
OrthoBasis lift(const OrthoBasis& s);

/// Stand-in for a block of the input vector that is identically zero.
struct ZeroBlock {
  std::size_t dim = 0;
};
using Block = std::variant<OrthoBasis, ZeroBlock>;

/// Blockwise concatenation: output vector j is the concatenation of the j-th
/// vectors of every part (zeros for ZeroBlock). All OrthoBasis parts must
/// carry the same number of vectors; their lengths may differ, and the
/// result has length^2 equal to their sum.
OrthoBasis compose_direct_sum(const std::vector<Block>& parts);

/// Splits v into consecutive blocks of the given sizes, extends each
/// nonzero block with the best available construction (Hurwitz for sizes
/// 2/4/8, extend3 for size 3 with integral norm, the block alone otherwise),
/// truncates to the smallest count and composes.
OrthoBasis compose_extend(const IntVector& v, const std::vector<std::size_t>& sizes);

/// compose_extend with equal blocks of size d in {2, 4, 8}; yields d vectors.
OrthoBasis hurwitz_blocks(const IntVector& v, std::size_t d);

struct OddSquareTuple {
  IntVector entries;  // threes first, then ones
  long threes = 0;
  long root = 0;      // sqrt of the square sum, 2m+1
};

/// n odd numbers (3s and 1s) whose squares sum to an odd square, for
/// n = 1 mod 8. Throws PreconditionError otherwise.
OddSquareTuple odd_square_tuple(long n);

/// {e1+e2, e1-e2, e3+e4, e3-e4, ...} in Z^n for odd n >= 3 (n-1 vectors).
OrthoBasis pair_basis(std::size_t n);

}  // namespace orthox
